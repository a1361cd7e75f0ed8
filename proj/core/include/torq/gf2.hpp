#ifndef TORQ_GF2_HPP
#define TORQ_GF2_HPP

#include <cstdint>
#include <vector>

namespace torq::gf2 {

// Dense binary matrix with rows packed into 64-bit words. Row rank/kernel
// on a few hundred columns has to be effectively free, so everything is
// word-parallel XOR under the hood.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);

  // XORs row `src` into row `dst`.
  void xor_rows(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  std::size_t row_weight(std::size_t r) const;
  std::size_t col_weight(std::size_t c) const;
  bool row_is_zero(std::size_t r) const;

  const std::uint64_t* row_data(std::size_t r) const { return words_.data() + r * words_per_row_; }
  std::uint64_t* row_data(std::size_t r) { return words_.data() + r * words_per_row_; }
  std::size_t words_per_row() const { return words_per_row_; }

  BitMatrix transposed() const;

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

// Single packed row vector; shares the word layout of BitMatrix rows.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t bits);

  std::size_t size() const { return bits_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool v);
  void xor_with(const BitVec& other);
  std::size_t weight() const;
  bool is_zero() const;

  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }
  std::size_t word_count() const { return words_.size(); }

  bool operator==(const BitVec& other) const = default;
  // Lexicographic-by-word ordering, used for deterministic tie-breaks.
  bool operator<(const BitVec& other) const { return words_ < other.words_; }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

BitVec row_of(const BitMatrix& m, std::size_t r);

// Rank over GF(2) by Gaussian elimination on a working copy.
std::size_t rank(const BitMatrix& m);

// Basis of the right kernel {x : m x = 0}, one BitVec per basis vector.
std::vector<BitVec> kernel(const BitMatrix& m);

// a (ra x c) times b^T (rb x c) -> (ra x rb) product over GF(2).
BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b);

bool is_zero(const BitMatrix& m);

// Row-echelon basis usable for repeated membership tests against a row
// space. Pivot columns are tracked so reduction is a single sweep.
class RowBasis {
 public:
  RowBasis() = default;
  explicit RowBasis(std::size_t bits) : bits_(bits) {}

  // Returns true if v was linearly independent (and is now absorbed).
  bool insert(BitVec v);
  // Reduces v in place against the basis; result zero <=> v in span.
  void reduce(BitVec& v) const;
  bool contains(BitVec v) const;
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<BitVec>& rows() const { return rows_; }

 private:
  std::size_t bits_ = 0;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

RowBasis row_space(const BitMatrix& m);

}  // namespace torq::gf2

#endif
