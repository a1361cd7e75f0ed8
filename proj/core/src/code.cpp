#include "torq/code.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace torq {

namespace {

int mod_floor(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

void require(bool cond, const std::string& msg) {
  if (!cond) {
    throw std::invalid_argument(msg);
  }
}

}  // namespace

int monomial_index(const Monomial& a, int m) { return a.p * m + a.q; }

Monomial monomial_from_index(int index, int m) { return Monomial{index / m, index % m}; }

Monomial monomial_mul(const Monomial& a, const Monomial& b, int l, int m) {
  require(a.p >= 0 && a.p < l && a.q >= 0 && a.q < m, "monomial_mul: lhs not reduced for torus");
  require(b.p >= 0 && b.p < l && b.q >= 0 && b.q < m, "monomial_mul: rhs not reduced for torus");
  return Monomial{mod_floor(a.p + b.p, l), mod_floor(a.q + b.q, m)};
}

Monomial transpose_monomial(const Monomial& a, int l, int m) {
  return Monomial{mod_floor(-a.p, l), mod_floor(-a.q, m)};
}

int monomial_order(const Monomial& a, int l, int m) {
  Monomial acc{0, 0};
  int k = 0;
  do {
    acc = monomial_mul(acc, a, l, m);
    ++k;
  } while (!(acc == Monomial{0, 0}));
  return k;
}

std::string monomial_to_string(const Monomial& a) {
  if (a.p == 0 && a.q == 0) {
    return "1";
  }
  std::ostringstream out;
  if (a.p > 0) {
    out << 'x';
    if (a.p > 1) {
      out << a.p;
    }
  }
  if (a.q > 0) {
    out << 'y';
    if (a.q > 1) {
      out << a.q;
    }
  }
  return out.str();
}

void BBCodeSpec::validate() const {
  require(l >= 1 && m >= 1, "code spec: l and m must be positive");
  for (const auto& terms : {a, b}) {
    for (const Monomial& t : terms) {
      require(t.p >= 0 && t.p < l && t.q >= 0 && t.q < m, "code spec: monomial out of range");
    }
    require(!(terms[0] == terms[1]) && !(terms[0] == terms[2]) && !(terms[1] == terms[2]),
            "code spec: polynomial terms must be pairwise distinct");
  }
}

std::array<Monomial, 3> parse_poly(const std::string& text, int l, int m) {
  std::vector<Monomial> terms;
  std::string term;
  auto flush = [&] {
    std::string s;
    for (char c : term) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s.push_back(c);
      }
    }
    if (s.empty()) {
      throw std::invalid_argument("parse_poly: empty term in \"" + text + "\"");
    }
    if (s == "1") {
      terms.push_back(Monomial{0, 0});
      return;
    }
    Monomial mono{0, 0};
    std::size_t i = 0;
    auto read_power = [&](char var) -> int {
      if (i >= s.size() || s[i] != var) {
        return 0;
      }
      ++i;
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
      return start == i ? 1 : std::stoi(s.substr(start, i - start));
    };
    mono.p = read_power('x');
    mono.q = read_power('y');
    if (i != s.size() || (mono.p == 0 && mono.q == 0)) {
      throw std::invalid_argument("parse_poly: bad term \"" + s + "\"");
    }
    require(mono.p < l && mono.q < m, "parse_poly: exponent exceeds torus in \"" + s + "\"");
    terms.push_back(mono);
  };
  for (char c : text) {
    if (c == '+') {
      flush();
      term.clear();
    } else {
      term.push_back(c);
    }
  }
  flush();
  if (terms.size() != 3) {
    throw std::invalid_argument("parse_poly: expected exactly 3 terms in \"" + text + "\"");
  }
  return {terms[0], terms[1], terms[2]};
}

std::string poly_to_string(const std::array<Monomial, 3>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) {
      out += " + ";
    }
    out += monomial_to_string(terms[i]);
  }
  return out;
}

namespace {

struct RegistryEntry {
  const char* name;
  int l;
  int m;
  const char* a;
  const char* b;
};

constexpr RegistryEntry kRegistry[] = {
    {"18-4-4", 3, 3, "x + 1 + y2", "y + 1 + x2"},
    {"72-12-6", 6, 6, "x3 + y + y2", "y3 + x + x2"},
    {"90-8-10", 15, 3, "x9 + y + y2", "1 + x2 + x7"},
    {"108-8-10", 9, 6, "x3 + y + y2", "y3 + x + x2"},
    {"144-12-12", 12, 6, "x3 + y + y2", "y3 + x + x2"},
    {"288-12-18", 12, 12, "x3 + y2 + y7", "y3 + x + x2"},
};

}  // namespace

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (const auto& e : kRegistry) {
    names.emplace_back(e.name);
  }
  return names;
}

BBCodeSpec registry_spec(const std::string& name) {
  for (const auto& e : kRegistry) {
    if (name == e.name) {
      BBCodeSpec spec;
      spec.l = e.l;
      spec.m = e.m;
      spec.a = parse_poly(e.a, e.l, e.m);
      spec.b = parse_poly(e.b, e.l, e.m);
      spec.name = e.name;
      spec.validate();
      return spec;
    }
  }
  throw std::invalid_argument("unknown code name \"" + name + "\"");
}

BBCodeSpec spec_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  BBCodeSpec spec;
  spec.l = j.at("l").get<int>();
  spec.m = j.at("m").get<int>();
  require(spec.l >= 1 && spec.m >= 1, "code config: l and m must be positive");
  spec.a = parse_poly(j.at("a_poly").get<std::string>(), spec.l, spec.m);
  spec.b = parse_poly(j.at("b_poly").get<std::string>(), spec.l, spec.m);
  if (j.contains("name")) {
    spec.name = j.at("name").get<std::string>();
  }
  spec.validate();
  return spec;
}

int BBCode::data_qubit(DataFamily f, const Monomial& a) const {
  const int base = f == DataFamily::L ? 0 : half();
  return base + monomial_index(a, spec.m);
}

int BBCode::check_qubit(CheckType t, const Monomial& a) const {
  const int base = t == CheckType::X ? n : n + half();
  return base + monomial_index(a, spec.m);
}

Monomial BBCode::label_of(int qubit_id) const {
  return monomial_from_index(qubit_id % half(), spec.m);
}

DataFamily BBCode::data_family(int qubit_id) const {
  return qubit_id < half() ? DataFamily::L : DataFamily::R;
}

CheckType BBCode::check_type(int qubit_id) const {
  return qubit_id < n + half() ? CheckType::X : CheckType::Z;
}

BBCode build_code(const BBCodeSpec& spec) {
  spec.validate();
  BBCode code;
  code.spec = spec;
  code.n = 2 * spec.l * spec.m;
  const int half = code.half();
  code.hx = gf2::BitMatrix(half, code.n);
  code.hz = gf2::BitMatrix(half, code.n);
  // Check monomial alpha indexes the row, data monomial the column.
  for (int row = 0; row < half; ++row) {
    const Monomial alpha = monomial_from_index(row, spec.m);
    for (const Monomial& ai : spec.a) {
      code.hx.set(row, monomial_index(monomial_mul(ai, alpha, spec.l, spec.m), spec.m), true);
      code.hz.set(row,
                  half + monomial_index(monomial_mul(transpose_monomial(ai, spec.l, spec.m), alpha,
                                                     spec.l, spec.m),
                                        spec.m),
                  true);
    }
    for (const Monomial& bi : spec.b) {
      code.hx.set(row, half + monomial_index(monomial_mul(bi, alpha, spec.l, spec.m), spec.m),
                  true);
      code.hz.set(row,
                  monomial_index(
                      monomial_mul(transpose_monomial(bi, spec.l, spec.m), alpha, spec.l, spec.m),
                      spec.m),
                  true);
    }
  }
  return code;
}

std::vector<CheckNeighbor> check_neighbors(const BBCode& code, CheckType type, const Monomial& alpha) {
  const auto& spec = code.spec;
  std::vector<CheckNeighbor> out;
  out.reserve(6);
  auto push = [&](DataFamily family, int i, const Monomial& label) {
    out.push_back(CheckNeighbor{code.data_qubit(family, label), family, i + 1, label});
  };
  if (type == CheckType::X) {
    for (int i = 0; i < 3; ++i) {
      push(DataFamily::L, i, monomial_mul(spec.a[i], alpha, spec.l, spec.m));
    }
    for (int i = 0; i < 3; ++i) {
      push(DataFamily::R, i, monomial_mul(spec.b[i], alpha, spec.l, spec.m));
    }
  } else {
    for (int i = 0; i < 3; ++i) {
      push(DataFamily::L, i,
           monomial_mul(transpose_monomial(spec.b[i], spec.l, spec.m), alpha, spec.l, spec.m));
    }
    for (int i = 0; i < 3; ++i) {
      push(DataFamily::R, i,
           monomial_mul(transpose_monomial(spec.a[i], spec.l, spec.m), alpha, spec.l, spec.m));
    }
  }
  return out;
}

int code_k(const BBCode& code) {
  return code.n - static_cast<int>(gf2::rank(code.hx)) - static_cast<int>(gf2::rank(code.hz));
}

LogicalOperators logical_operators(const BBCode& code) {
  LogicalOperators ops;
  auto pick = [&](const gf2::BitMatrix& kernel_of, const gf2::BitMatrix& modulo) {
    std::vector<gf2::BitVec> picked;
    gf2::RowBasis span = gf2::row_space(modulo);
    for (gf2::BitVec& v : gf2::kernel(kernel_of)) {
      if (span.insert(v)) {
        picked.push_back(std::move(v));
      }
    }
    return picked;
  };
  ops.x = pick(code.hz, code.hx);
  ops.z = pick(code.hx, code.hz);
  return ops;
}

namespace {

// Minimum weight over span(basis) \ stabilizer, full 2^dim walk via Gray code.
int min_weight_coset(const std::vector<gf2::BitVec>& basis, const gf2::RowBasis& stabilizer,
                     std::size_t bits) {
  const std::size_t dim = basis.size();
  if (dim > 26) {
    throw std::runtime_error("distance: enumeration budget exceeded (kernel dimension > 26)");
  }
  gf2::BitVec acc(bits);
  int best = static_cast<int>(bits) + 1;
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t g = 1; g < total; ++g) {
    acc.xor_with(basis[static_cast<std::size_t>(std::countr_zero(g))]);
    const int w = static_cast<int>(acc.weight());
    if (w < best && !stabilizer.contains(acc)) {
      best = w;
    }
  }
  return best;
}

// Enumerates all span elements of weight <= cap. Any such element uses at
// most cap rows of the systematic (RREF) basis, because pivot columns are
// disjoint and contribute one set bit per chosen row.
void systematic_form(std::vector<gf2::BitVec>& basis) {
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t pivot = 0;
    while (pivot < basis[i].size() && !basis[i].get(pivot)) {
      ++pivot;
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != i && basis[j].get(pivot)) {
        basis[j].xor_with(basis[i]);
      }
    }
    pivots.push_back(pivot);
  }
}

void enumerate_capped(const std::vector<gf2::BitVec>& basis, std::size_t start, int remaining,
                      gf2::BitVec& acc, const gf2::RowBasis& stabilizer, int cap, int& best) {
  for (std::size_t i = start; i < basis.size(); ++i) {
    acc.xor_with(basis[i]);
    const int w = static_cast<int>(acc.weight());
    if (w <= cap && w < best && !stabilizer.contains(acc)) {
      best = w;
    }
    if (remaining > 1) {
      enumerate_capped(basis, i + 1, remaining - 1, acc, stabilizer, cap, best);
    }
    acc.xor_with(basis[i]);
  }
}

int min_weight_capped(std::vector<gf2::BitVec> basis, const gf2::RowBasis& stabilizer,
                      std::size_t bits, int cap) {
  systematic_form(basis);
  gf2::BitVec acc(bits);
  int best = static_cast<int>(bits) + 1;
  enumerate_capped(basis, 0, cap, acc, stabilizer, cap, best);
  return best;
}

}  // namespace

DistanceResult code_distance_bruteforce(const BBCode& code, int weight_cap) {
  if (code_k(code) == 0) {
    throw std::invalid_argument("distance: code has no logical operator (k = 0)");
  }
  const std::size_t bits = static_cast<std::size_t>(code.n);
  int best = code.n + 1;
  for (const auto* side : {&code.hz, &code.hx}) {
    const gf2::BitMatrix& ker_of = *side;
    const gf2::BitMatrix& stab_of = side == &code.hz ? code.hx : code.hz;
    std::vector<gf2::BitVec> basis = gf2::kernel(ker_of);
    gf2::RowBasis stabilizer = gf2::row_space(stab_of);
    if (weight_cap <= 0) {
      best = std::min(best, min_weight_coset(basis, stabilizer, bits));
    } else {
      best = std::min(best, min_weight_capped(std::move(basis), stabilizer, bits, weight_cap));
    }
  }
  if (best > code.n) {
    // Nothing at or below the cap.
    return DistanceResult{weight_cap + 1, false};
  }
  return DistanceResult{best, true};
}

}  // namespace torq
