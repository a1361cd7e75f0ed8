#ifndef TORQ_CODE_HPP
#define TORQ_CODE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torq/gf2.hpp"

namespace torq {

// Element x^p y^q of the cyclic group Z_l x Z_m. Exponents are kept
// reduced; the (l, m) torus is supplied by the caller on every operation
// so monomials stay plain value types.
struct Monomial {
  int p = 0;
  int q = 0;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;
};

// Row/column index of a monomial inside a circulant block: p*m + q.
int monomial_index(const Monomial& a, int m);
Monomial monomial_from_index(int index, int m);

Monomial monomial_mul(const Monomial& a, const Monomial& b, int l, int m);
// Group inverse (-p mod l, -q mod m); A^T/B^T blocks act through it.
Monomial transpose_monomial(const Monomial& a, int l, int m);
int monomial_order(const Monomial& a, int l, int m);

std::string monomial_to_string(const Monomial& a);

struct BBCodeSpec {
  int l = 0;
  int m = 0;
  std::array<Monomial, 3> a;
  std::array<Monomial, 3> b;
  std::string name;  // optional registry name

  void validate() const;  // throws std::invalid_argument
};

// Parses one polynomial like "x3 + y + y2" or "1 + x2 + x7" into its
// three monomial terms, in written order.
std::array<Monomial, 3> parse_poly(const std::string& text, int l, int m);
std::string poly_to_string(const std::array<Monomial, 3>& terms);

// The six built-in code instances, addressable as "18-4-4" ... "288-12-18".
std::vector<std::string> registry_names();
BBCodeSpec registry_spec(const std::string& name);
// Spec from JSON text with keys l, m, a_poly, b_poly.
BBCodeSpec spec_from_json(const std::string& json_text);

enum class CheckType : std::uint8_t { X, Z };
enum class DataFamily : std::uint8_t { L, R };

// Qubit id layout: L data [0, n/2), R data [n/2, n), X checks [n, 3n/2),
// Z checks [3n/2, 2n). Within each family ids follow monomial_index.
struct BBCode {
  BBCodeSpec spec;
  int n = 0;  // data qubits = 2*l*m
  gf2::BitMatrix hx;  // [A|B], n/2 x n
  gf2::BitMatrix hz;  // [B^T|A^T], n/2 x n

  int half() const { return n / 2; }
  int total_qubits() const { return 2 * n; }

  int data_qubit(DataFamily f, const Monomial& a) const;
  int check_qubit(CheckType t, const Monomial& a) const;
  Monomial label_of(int qubit_id) const;
  bool is_data(int qubit_id) const { return qubit_id < n; }
  DataFamily data_family(int qubit_id) const;
  CheckType check_type(int qubit_id) const;
};

BBCode build_code(const BBCodeSpec& spec);

struct CheckNeighbor {
  int qubit_id = 0;
  DataFamily family = DataFamily::L;
  int term_index = 0;  // i in 1..3
  Monomial label;
};

// The six data partners of one check, tagged by (family, i); L partners
// first, term order within family.
std::vector<CheckNeighbor> check_neighbors(const BBCode& code, CheckType type, const Monomial& alpha);

int code_k(const BBCode& code);

struct LogicalOperators {
  std::vector<gf2::BitVec> x;  // supports over data qubits, in ker(Hz) \ rowspace(Hx)
  std::vector<gf2::BitVec> z;  // in ker(Hx) \ rowspace(Hz)
};

LogicalOperators logical_operators(const BBCode& code);

struct DistanceResult {
  int distance = 0;
  bool exact = false;  // false => distance is a lower bound (cap exceeded)
};

// Minimum weight over logical (non-stabilizer) kernel elements, min of the
// X and Z sides. weight_cap == 0 selects full coset enumeration, guarded
// at 2^26 cosets; otherwise words of weight <= cap are enumerated.
// Throws std::invalid_argument when k = 0 (no logical operator) and
// std::runtime_error when the enumeration budget is exceeded.
DistanceResult code_distance_bruteforce(const BBCode& code, int weight_cap = 0);

}  // namespace torq

#endif
