#include "torq/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "json.hpp"

namespace torq {

namespace {

int mod_floor(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

int axis_min(int d, int size) {
  d = mod_floor(d, size);
  return std::min(d, size - d);
}

}  // namespace

int toric_l1(const CavityCoord& p, const CavityCoord& q, const GridDims& dims) {
  return axis_min(q.col - p.col, dims.width) + axis_min(q.row - p.row, dims.height);
}

double toric_l2(const CavityCoord& p, const CavityCoord& q, const GridDims& dims) {
  const double dc = axis_min(q.col - p.col, dims.width);
  const double dr = axis_min(q.row - p.row, dims.height);
  return std::hypot(dc, dr);
}

int planar_l1(const CavityCoord& p, const CavityCoord& q) {
  return std::abs(q.col - p.col) + std::abs(q.row - p.row);
}

double planar_l2(const CavityCoord& p, const CavityCoord& q) {
  return std::hypot(q.col - p.col, q.row - p.row);
}

QubitKind qubit_kind(const BBCode& code, int qubit_id) {
  if (qubit_id < code.half()) {
    return QubitKind::L;
  }
  if (qubit_id < code.n) {
    return QubitKind::R;
  }
  if (qubit_id < code.n + code.half()) {
    return QubitKind::X;
  }
  return QubitKind::Z;
}

int corner_dx(QubitKind kind) {
  switch (kind) {
    case QubitKind::L: return 0;
    case QubitKind::X: return 1;
    case QubitKind::Z: return 0;
    case QubitKind::R: return 1;
  }
  return 0;
}

int corner_dy(QubitKind kind) {
  switch (kind) {
    case QubitKind::L: return 0;
    case QubitKind::X: return 0;
    case QubitKind::Z: return 1;
    case QubitKind::R: return 1;
  }
  return 0;
}

std::array<Category, 12> all_categories() {
  std::array<Category, 12> cats;
  int idx = 0;
  for (CheckType check : {CheckType::X, CheckType::Z}) {
    for (DataFamily family : {DataFamily::L, DataFamily::R}) {
      for (int i = 1; i <= 3; ++i) {
        cats[idx++] = Category{check, family, i};
      }
    }
  }
  return cats;
}

namespace {

// Discrete log table: monomial index -> (a, b) with g1^a g2^b. Empty when
// (g1, g2) does not tile the cols x rows grid bijectively.
std::optional<std::vector<CellVec>> dlog_table(int l, int m, const Monomial& g1, const Monomial& g2,
                                               int cols, int rows) {
  const int lm = l * m;
  if (cols * rows != lm) {
    return std::nullopt;
  }
  std::vector<CellVec> table(lm, CellVec{-1, -1});
  Monomial col_base{0, 0};
  int filled = 0;
  for (int a = 0; a < cols; ++a) {
    Monomial cur = col_base;
    for (int b = 0; b < rows; ++b) {
      const int idx = monomial_index(cur, m);
      if (table[idx].c >= 0) {
        return std::nullopt;
      }
      table[idx] = CellVec{a, b};
      ++filled;
      cur = monomial_mul(cur, g2, l, m);
    }
    col_base = monomial_mul(col_base, g1, l, m);
  }
  if (filled != lm) {
    return std::nullopt;
  }
  return table;
}

struct BasisCandidate {
  Monomial g1;
  Monomial g2;
  std::vector<CellVec> dlog;
};

CellVec cell_add(const CellVec& a, const CellVec& b, int cols, int rows) {
  return CellVec{mod_floor(a.c + b.c, cols), mod_floor(a.r + b.r, rows)};
}

CellVec cell_sub(const CellVec& a, const CellVec& b, int cols, int rows) {
  return CellVec{mod_floor(a.c - b.c, cols), mod_floor(a.r - b.r, rows)};
}

int cell_l1(const CellVec& v, int cols, int rows) {
  return axis_min(v.c, cols) + axis_min(v.r, rows);
}

// Directed column feasibility on the cavity grid. X-check modes must reach
// their partner moving left in no more steps than moving right would take;
// Z-check modes the mirror image.
bool direction_ok(CheckType check, int cavity_dcol, int width) {
  const int right = mod_floor(cavity_dcol, width);
  const int left = mod_floor(-cavity_dcol, width);
  return check == CheckType::X ? left <= right : right <= left;
}

// Column delta between check corner and data corner for a cell displacement.
int cavity_dcol(CheckType check, DataFamily family, const CellVec& cell) {
  const QubitKind check_kind = check == CheckType::X ? QubitKind::X : QubitKind::Z;
  const QubitKind data_kind = family == DataFamily::L ? QubitKind::L : QubitKind::R;
  return 2 * cell.c + corner_dx(data_kind) - corner_dx(check_kind);
}

TorusLayout assemble_layout(const BBCode& code, int cols, int rows, const Monomial& g1,
                            const Monomial& g2, const std::vector<CellVec>& dlog,
                            const std::array<CellVec, 4>& offsets, int max_cell_l1) {
  TorusLayout layout;
  layout.cell_cols = cols;
  layout.cell_rows = rows;
  layout.dims = GridDims{2 * cols, 2 * rows};
  layout.basis_g1 = g1;
  layout.basis_g2 = g2;
  layout.offsets = offsets;
  layout.max_cell_l1 = max_cell_l1;
  layout.placement.resize(code.total_qubits());
  layout.qubit_at.assign(static_cast<std::size_t>(layout.dims.width) * layout.dims.height, -1);
  for (int q = 0; q < code.total_qubits(); ++q) {
    const QubitKind kind = qubit_kind(code, q);
    const Monomial label = code.label_of(q);
    const CellVec cell =
        cell_add(dlog[monomial_index(label, code.spec.m)], offsets[static_cast<int>(kind)], cols, rows);
    const CavityCoord coord{2 * cell.c + corner_dx(kind), 2 * cell.r + corner_dy(kind)};
    layout.placement[q] = coord;
    layout.qubit_at[layout.cavity_index(coord)] = q;
  }
  return layout;
}

}  // namespace

CavityCoord category_displacement(const TorusLayout& layout, const BBCode& code, const Category& cat) {
  const Monomial one{0, 0};
  const int check_id = code.check_qubit(cat.check, one);
  const auto neighbors = check_neighbors(code, cat.check, one);
  for (const auto& nb : neighbors) {
    if (nb.family == cat.family && nb.term_index == cat.term_index) {
      const CavityCoord a = layout.placement[check_id];
      const CavityCoord b = layout.placement[nb.qubit_id];
      return CavityCoord{mod_floor(b.col - a.col, layout.dims.width),
                         mod_floor(b.row - a.row, layout.dims.height)};
    }
  }
  throw std::runtime_error("category_displacement: category not found");
}

TorusLayout search_layout(const BBCode& code, const SearchPolicy& policy) {
  const int l = code.spec.l;
  const int m = code.spec.m;
  const int cols = l;
  const int rows = m;
  const int lm = l * m;
  const int width = 2 * cols;

  std::vector<BasisCandidate> bases;
  for (int i1 = 0; i1 < lm; ++i1) {
    const Monomial g1 = monomial_from_index(i1, m);
    if (monomial_order(g1, l, m) != cols) {
      continue;
    }
    for (int i2 = 0; i2 < lm; ++i2) {
      const Monomial g2 = monomial_from_index(i2, m);
      if (monomial_order(g2, l, m) != rows) {
        continue;
      }
      auto table = dlog_table(l, m, g1, g2, cols, rows);
      if (table) {
        bases.push_back(BasisCandidate{g1, g2, std::move(*table)});
      }
    }
  }
  if (bases.empty()) {
    throw std::runtime_error("layout search: no basis generates the monomial torus");
  }

  const int max_d = policy.max_d >= 0 ? policy.max_d : cols / 2 + rows / 2 + 1;
  const int cells = lm;
  auto cell_of = [&](int idx) { return CellVec{idx / rows, idx % rows}; };
  auto idx_of = [&](const CellVec& v) { return v.c * rows + v.r; };

  for (int d = 0; d <= max_d; ++d) {
    for (const BasisCandidate& basis : bases) {
      std::array<CellVec, 3> a_log;
      std::array<CellVec, 3> b_log;
      for (int i = 0; i < 3; ++i) {
        a_log[i] = basis.dlog[monomial_index(code.spec.a[i], m)];
        b_log[i] = basis.dlog[monomial_index(code.spec.b[i], m)];
      }
      auto admissible = [&](CheckType check, DataFamily family, const CellVec& delta) {
        if (cell_l1(delta, cols, rows) > d) {
          return false;
        }
        return !policy.direction_aware ||
               direction_ok(check, cavity_dcol(check, family, delta), width);
      };

      std::vector<int> valid_l;
      std::vector<int> valid_r;
      std::vector<char> z_l_ok(cells, 0);
      std::vector<char> z_r_ok(cells, 0);
      bool any_zl = false;
      bool any_zr = false;
      for (int idx = 0; idx < cells; ++idx) {
        const CellVec v = cell_of(idx);
        bool ok_l = true;
        bool ok_r = true;
        bool ok_zl = true;
        bool ok_zr = true;
        for (int i = 0; i < 3; ++i) {
          ok_l = ok_l && admissible(CheckType::X, DataFamily::L, cell_add(a_log[i], v, cols, rows));
          ok_r = ok_r && admissible(CheckType::X, DataFamily::R, cell_add(b_log[i], v, cols, rows));
          ok_zl =
              ok_zl && admissible(CheckType::Z, DataFamily::L, cell_sub(v, b_log[i], cols, rows));
          ok_zr =
              ok_zr && admissible(CheckType::Z, DataFamily::R, cell_sub(v, a_log[i], cols, rows));
        }
        if (ok_l) {
          valid_l.push_back(idx);
        }
        if (ok_r) {
          valid_r.push_back(idx);
        }
        z_l_ok[idx] = ok_zl ? 1 : 0;
        z_r_ok[idx] = ok_zr ? 1 : 0;
        any_zl = any_zl || ok_zl;
        any_zr = any_zr || ok_zr;
      }
      if (valid_l.empty() || valid_r.empty() || !any_zl || !any_zr) {
        continue;
      }
      for (int off_l_idx : valid_l) {
        const CellVec off_l = cell_of(off_l_idx);
        for (int off_r_idx : valid_r) {
          const CellVec off_r = cell_of(off_r_idx);
          for (int off_z_idx = 0; off_z_idx < cells; ++off_z_idx) {
            const CellVec off_z = cell_of(off_z_idx);
            if (!z_l_ok[idx_of(cell_sub(off_l, off_z, cols, rows))] ||
                !z_r_ok[idx_of(cell_sub(off_r, off_z, cols, rows))]) {
              continue;
            }
            std::array<CellVec, 4> offsets{};
            offsets[static_cast<int>(QubitKind::L)] = off_l;
            offsets[static_cast<int>(QubitKind::R)] = off_r;
            offsets[static_cast<int>(QubitKind::X)] = CellVec{0, 0};
            offsets[static_cast<int>(QubitKind::Z)] = off_z;
            return assemble_layout(code, cols, rows, basis.g1, basis.g2, basis.dlog, offsets, d);
          }
        }
      }
    }
  }
  throw std::runtime_error("layout search: no layout found within distance bound");
}

bool verify_translation_invariance(const TorusLayout& layout, const BBCode& code) {
  const auto cats = all_categories();
  for (const Category& cat : cats) {
    const CavityCoord expected = category_displacement(layout, code, cat);
    for (int row = 0; row < code.half(); ++row) {
      const Monomial alpha = monomial_from_index(row, code.spec.m);
      const int check_id = code.check_qubit(cat.check, alpha);
      for (const auto& nb : check_neighbors(code, cat.check, alpha)) {
        if (nb.family != cat.family || nb.term_index != cat.term_index) {
          continue;
        }
        const CavityCoord a = layout.placement[check_id];
        const CavityCoord b = layout.placement[nb.qubit_id];
        const CavityCoord delta{mod_floor(b.col - a.col, layout.dims.width),
                                mod_floor(b.row - a.row, layout.dims.height)};
        if (!(delta == expected)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool placement_is_bijective(const TorusLayout& layout) {
  std::size_t cavities = static_cast<std::size_t>(layout.dims.width) * layout.dims.height;
  if (layout.placement.size() != cavities) {
    return false;
  }
  std::vector<char> seen(cavities, 0);
  for (const CavityCoord& c : layout.placement) {
    if (c.col < 0 || c.col >= layout.dims.width || c.row < 0 || c.row >= layout.dims.height) {
      return false;
    }
    const std::size_t idx = static_cast<std::size_t>(c.row) * layout.dims.width + c.col;
    if (seen[idx]) {
      return false;
    }
    seen[idx] = 1;
  }
  return true;
}

FixedCouplerLayout fixed_coupler_layout(const BBCode& code) {
  const int l = code.spec.l;
  const int m = code.spec.m;
  const int lm = l * m;
  // Relabel the torus so that one A-monomial pair becomes a unit column
  // step and one B-pair a unit row step; the checks' other four partners
  // then land in adjacent cavities and only the remaining A/B terms need
  // long-range couplers.
  for (int ai = 0; ai < 3; ++ai) {
    for (int aj = 0; aj < 3; ++aj) {
      if (ai == aj) {
        continue;
      }
      const Monomial g1 = monomial_mul(code.spec.a[ai],
                                       transpose_monomial(code.spec.a[aj], l, m), l, m);
      const int cols = monomial_order(g1, l, m);
      if (cols == 0 || lm % cols != 0) {
        continue;
      }
      const int rows = lm / cols;
      for (int bk = 0; bk < 3; ++bk) {
        for (int bl = 0; bl < 3; ++bl) {
          if (bk == bl) {
            continue;
          }
          const Monomial g2 = monomial_mul(code.spec.b[bk],
                                           transpose_monomial(code.spec.b[bl], l, m), l, m);
          auto table = dlog_table(l, m, g1, g2, cols, rows);
          if (!table) {
            continue;
          }
          const auto& dlog = *table;
          // a3 = g1 * a2 sits one cell right; b3 = g2^-1 * b2 one cell down.
          const CellVec a2 = dlog[monomial_index(code.spec.a[aj], m)];
          const CellVec b2 = dlog[monomial_index(code.spec.b[bk], m)];
          std::array<CellVec, 4> offsets{};
          const CellVec off_l = cell_sub(CellVec{0, 0}, a2, cols, rows);
          const CellVec off_r = cell_sub(CellVec{0, 0}, b2, cols, rows);
          const CellVec off_z = cell_sub(off_l, b2, cols, rows);
          offsets[static_cast<int>(QubitKind::L)] = off_l;
          offsets[static_cast<int>(QubitKind::R)] = off_r;
          offsets[static_cast<int>(QubitKind::X)] = CellVec{0, 0};
          offsets[static_cast<int>(QubitKind::Z)] = off_z;

          FixedCouplerLayout fixed;
          fixed.placement = assemble_layout(code, cols, rows, g1, g2, dlog, offsets, 0);
          const int a_long = 3 - ai - aj;  // term indexes are {0,1,2}
          const int b_long = 3 - bk - bl;
          for (CheckType check : {CheckType::X, CheckType::Z}) {
            for (int row = 0; row < code.half(); ++row) {
              const Monomial alpha = monomial_from_index(row, m);
              const int check_id = code.check_qubit(check, alpha);
              for (const auto& nb : check_neighbors(code, check, alpha)) {
                const int long_term = nb.family == DataFamily::L
                                          ? (check == CheckType::X ? a_long : b_long)
                                          : (check == CheckType::X ? b_long : a_long);
                fixed.couplers.push_back(
                    FixedCoupler{check_id, nb.qubit_id, nb.term_index - 1 == long_term});
              }
            }
          }
          return fixed;
        }
      }
    }
  }
  throw std::runtime_error(
      "fixed-coupler layout: no monomial relabeling yields a 4-local embedding");
}

std::string layout_to_json(const TorusLayout& layout, const BBCode& code) {
  nlohmann::ordered_json j;
  j["code"] = code.spec.name.empty() ? poly_to_string(code.spec.a) : code.spec.name;
  j["grid"] = {{"cell_cols", layout.cell_cols},
               {"cell_rows", layout.cell_rows},
               {"width", layout.dims.width},
               {"height", layout.dims.height}};
  j["corner_convention"] = {{"L", {0, 0}}, {"X", {1, 0}}, {"Z", {0, 1}}, {"R", {1, 1}}};
  j["basis"] = {{"g1", monomial_to_string(layout.basis_g1)},
                {"g2", monomial_to_string(layout.basis_g2)}};
  const char* kind_names[4] = {"L", "R", "X", "Z"};
  nlohmann::ordered_json offsets;
  for (int k = 0; k < 4; ++k) {
    offsets[kind_names[k]] = {layout.offsets[k].c, layout.offsets[k].r};
  }
  j["offsets"] = offsets;
  j["max_cell_l1"] = layout.max_cell_l1;
  nlohmann::ordered_json placement = nlohmann::ordered_json::array();
  for (const CavityCoord& c : layout.placement) {
    placement.push_back({c.col, c.row});
  }
  j["placement"] = placement;
  return j.dump(2);
}

}  // namespace torq
