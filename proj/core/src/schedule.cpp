#include "torq/schedule.hpp"

#include <set>

namespace torq {

namespace {

struct Category {
  CheckType check;
  DataFamily family;
  int term_index;  // 1..3
};

// Pass rows of the retained CNOT order. Pass 1 has only the Z-side
// category, pass 7 only the X-side one.
struct PassRow {
  bool has_x;
  Category x_cat;
  bool has_z;
  Category z_cat;
};

constexpr Category cat(CheckType c, DataFamily f, int i) { return Category{c, f, i}; }

const PassRow kPassRows[7] = {
    {false, {}, true, cat(CheckType::Z, DataFamily::R, 1)},
    {true, cat(CheckType::X, DataFamily::L, 2), true, cat(CheckType::Z, DataFamily::R, 3)},
    {true, cat(CheckType::X, DataFamily::R, 2), true, cat(CheckType::Z, DataFamily::L, 1)},
    {true, cat(CheckType::X, DataFamily::R, 1), true, cat(CheckType::Z, DataFamily::L, 2)},
    {true, cat(CheckType::X, DataFamily::R, 3), true, cat(CheckType::Z, DataFamily::L, 3)},
    {true, cat(CheckType::X, DataFamily::L, 1), true, cat(CheckType::Z, DataFamily::R, 2)},
    {true, cat(CheckType::X, DataFamily::L, 3), false, {}},
};

void append_category(const BBCode& code, const Category& category, SchedulePass& pass) {
  const int half = code.half();
  for (int row = 0; row < half; ++row) {
    const Monomial alpha = monomial_from_index(row, code.spec.m);
    Monomial data_label;
    const auto& terms = (category.check == CheckType::X) == (category.family == DataFamily::L)
                            ? code.spec.a
                            : code.spec.b;
    const Monomial& term = terms[category.term_index - 1];
    if (category.check == CheckType::X) {
      data_label = monomial_mul(term, alpha, code.spec.l, code.spec.m);
    } else {
      data_label = monomial_mul(transpose_monomial(term, code.spec.l, code.spec.m), alpha,
                                code.spec.l, code.spec.m);
    }
    ScheduledGate gate;
    gate.gate_id = static_cast<int>(pass.gates.size());
    gate.check = category.check;
    gate.family = category.family;
    gate.term_index = category.term_index;
    gate.check_qubit = code.check_qubit(category.check, alpha);
    gate.data_qubit = code.data_qubit(category.family, data_label);
    if (category.check == CheckType::X) {
      gate.control_qubit = gate.check_qubit;
      gate.target_qubit = gate.data_qubit;
    } else {
      gate.control_qubit = gate.data_qubit;
      gate.target_qubit = gate.check_qubit;
    }
    pass.gates.push_back(gate);
  }
}

}  // namespace

std::size_t SyndromeSchedule::total_gates() const {
  std::size_t total = 0;
  for (const auto& pass : passes) {
    total += pass.gates.size();
  }
  return total;
}

SyndromeSchedule build_schedule(const BBCode& code) {
  SyndromeSchedule schedule;
  schedule.passes.resize(7);
  for (int p = 0; p < 7; ++p) {
    SchedulePass& pass = schedule.passes[p];
    pass.pass_number = p + 1;
    pass.init_x_plus = (p == 0);
    pass.measure_z = (p == 6);
    const PassRow& row = kPassRows[p];
    if (row.has_x) {
      append_category(code, row.x_cat, pass);
    }
    if (row.has_z) {
      append_category(code, row.z_cat, pass);
    }
  }
  return schedule;
}

bool passes_are_qubit_disjoint(const SyndromeSchedule& schedule) {
  for (const auto& pass : schedule.passes) {
    std::set<int> seen;
    for (const auto& gate : pass.gates) {
      if (!seen.insert(gate.control_qubit).second || !seen.insert(gate.target_qubit).second) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace torq
