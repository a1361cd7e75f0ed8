#include "torq/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace torq::gf2 {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), words_(rows * words_per_row_, 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (words_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  std::uint64_t& w = words_[r * words_per_row_ + c / kWordBits];
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  if (v) {
    w |= mask;
  } else {
    w &= ~mask;
  }
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
  std::uint64_t* d = row_data(dst);
  const std::uint64_t* s = row_data(src);
  for (std::size_t i = 0; i < words_per_row_; ++i) {
    d[i] ^= s[i];
  }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  std::uint64_t* pa = row_data(a);
  std::uint64_t* pb = row_data(b);
  for (std::size_t i = 0; i < words_per_row_; ++i) {
    std::swap(pa[i], pb[i]);
  }
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  const std::uint64_t* p = row_data(r);
  for (std::size_t i = 0; i < words_per_row_; ++i) {
    w += static_cast<std::size_t>(std::popcount(p[i]));
  }
  return w;
}

std::size_t BitMatrix::col_weight(std::size_t c) const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    w += get(r, c) ? 1 : 0;
  }
  return w;
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  const std::uint64_t* p = row_data(r);
  for (std::size_t i = 0; i < words_per_row_; ++i) {
    if (p[i] != 0) {
      return false;
    }
  }
  return true;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) {
        t.set(c, r, true);
      }
    }
  }
  return t;
}

BitVec::BitVec(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

bool BitVec::get(std::size_t i) const {
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVec::set(std::size_t i, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (v) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVec::xor_with(const BitVec& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
}

std::size_t BitVec::weight() const {
  std::size_t w = 0;
  for (std::uint64_t x : words_) {
    w += static_cast<std::size_t>(std::popcount(x));
  }
  return w;
}

bool BitVec::is_zero() const {
  for (std::uint64_t x : words_) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

BitVec row_of(const BitMatrix& m, std::size_t r) {
  BitVec v(m.cols());
  const std::uint64_t* p = m.row_data(r);
  for (std::size_t i = 0; i < m.words_per_row(); ++i) {
    v.data()[i] = p[i];
  }
  return v;
}

std::size_t rank(const BitMatrix& m) {
  BitMatrix work = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < work.rows() && !work.get(pivot, c)) {
      ++pivot;
    }
    if (pivot == work.rows()) {
      continue;
    }
    work.swap_rows(r, pivot);
    for (std::size_t i = 0; i < work.rows(); ++i) {
      if (i != r && work.get(i, c)) {
        work.xor_rows(i, r);
      }
    }
    ++r;
  }
  return r;
}

std::vector<BitVec> kernel(const BitMatrix& m) {
  const std::size_t n = m.cols();
  // Eliminate on the transpose-augmented system: track column combinations.
  BitMatrix work = m;
  std::vector<std::size_t> pivot_col;
  std::vector<bool> col_is_pivot(n, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < work.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < work.rows() && !work.get(pivot, c)) {
      ++pivot;
    }
    if (pivot == work.rows()) {
      continue;
    }
    work.swap_rows(r, pivot);
    for (std::size_t i = 0; i < work.rows(); ++i) {
      if (i != r && work.get(i, c)) {
        work.xor_rows(i, r);
      }
    }
    pivot_col.push_back(c);
    col_is_pivot[c] = true;
    ++r;
  }
  // One kernel vector per free column: x_free = 1, pivots solve the rest.
  std::vector<BitVec> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (col_is_pivot[c]) {
      continue;
    }
    BitVec v(n);
    v.set(c, true);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      if (work.get(i, c)) {
        v.set(pivot_col[i], true);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("multiply_transpose: column counts differ");
  }
  BitMatrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const std::uint64_t* pa = a.row_data(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const std::uint64_t* pb = b.row_data(j);
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < a.words_per_row(); ++w) {
        acc ^= pa[w] & pb[w];
      }
      out.set(i, j, (std::popcount(acc) & 1) != 0);
    }
  }
  return out;
}

bool is_zero(const BitMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m.row_is_zero(r)) {
      return false;
    }
  }
  return true;
}

bool RowBasis::insert(BitVec v) {
  reduce(v);
  if (v.is_zero()) {
    return false;
  }
  std::size_t pivot = 0;
  while (!v.get(pivot)) {
    ++pivot;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

void RowBasis::reduce(BitVec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.get(pivots_[i])) {
      v.xor_with(rows_[i]);
    }
  }
}

bool RowBasis::contains(BitVec v) const {
  reduce(v);
  return v.is_zero();
}

RowBasis row_space(const BitMatrix& m) {
  RowBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    basis.insert(row_of(m, r));
  }
  return basis;
}

}  // namespace torq::gf2
