#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace exreg {

// Dense boolean matrix with bit-packed rows. Row i is a bitset over columns.
class BoolMatrix {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + word_bits - 1) / word_bits),
        bits_(rows_ * words_, 0) {}

  static BoolMatrix identity(std::size_t n) {
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  static BoolMatrix full(std::size_t rows, std::size_t cols) {
    BoolMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    assert(i < rows_ && j < cols_);
    return (bits_[i * words_ + j / word_bits] >> (j % word_bits)) & 1U;
  }

  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    assert(i < rows_ && j < cols_);
    word_type& w = bits_[i * words_ + j / word_bits];
    word_type mask = word_type{1} << (j % word_bits);
    if (value)
      w |= mask;
    else
      w &= ~mask;
  }

  std::span<const word_type> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }

  // Visit the set columns of row i in increasing order.
  template <class F>
  void for_each_in_row(std::size_t i, F&& f) const {
    const word_type* r = bits_.data() + i * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      word_type bits = r[w];
      while (bits != 0) {
        std::size_t b = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * word_bits + b);
        bits &= bits - 1;
      }
    }
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (word_type w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t row_count(std::size_t i) const noexcept {
    std::size_t c = 0;
    for (word_type w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const noexcept {
    for (word_type w : bits_)
      if (w != 0) return true;
    return false;
  }

  // Boolean product: (i,k) set iff some j has this(i,j) and rhs(j,k).
  BoolMatrix product(const BoolMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    BoolMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      word_type* dst = out.bits_.data() + i * out.words_;
      for_each_in_row(i, [&](std::size_t j) {
        const word_type* src = rhs.bits_.data() + j * rhs.words_;
        for (std::size_t w = 0; w < out.words_; ++w) dst[w] |= src[w];
      });
    }
    return out;
  }

  BoolMatrix transpose() const {
    BoolMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for_each_in_row(i, [&](std::size_t j) { out.set(j, i); });
    return out;
  }

  BoolMatrix operator&(const BoolMatrix& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    BoolMatrix out(*this);
    for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] &= rhs.bits_[k];
    return out;
  }

  BoolMatrix operator|(const BoolMatrix& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    BoolMatrix out(*this);
    for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] |= rhs.bits_[k];
    return out;
  }

  // this ⊆ rhs
  bool subset_of(const BoolMatrix& rhs) const noexcept {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if ((bits_[k] & ~rhs.bits_[k]) != 0) return false;
    return true;
  }

  // Row i of this is contained in row j of rhs.
  bool row_subset(std::size_t i, const BoolMatrix& rhs, std::size_t j) const noexcept {
    auto a = row(i);
    auto b = rhs.row(j);
    for (std::size_t w = 0; w < words_; ++w)
      if ((a[w] & ~b[w]) != 0) return false;
    return true;
  }

  bool row_equal(std::size_t i, const BoolMatrix& rhs, std::size_t j) const noexcept {
    auto a = row(i);
    auto b = rhs.row(j);
    for (std::size_t w = 0; w < words_; ++w)
      if (a[w] != b[w]) return false;
    return true;
  }

  // Smallest (i,j) in lexicographic order with this(i,j) and not rhs(i,j).
  std::optional<std::pair<std::size_t, std::size_t>> first_outside(
      const BoolMatrix& rhs) const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (test(i, j) && !rhs.test(i, j)) return std::make_pair(i, j);
    return std::nullopt;
  }

  // Warshall closure in place.
  void transitive_close() {
    assert(rows_ == cols_);
    for (std::size_t k = 0; k < rows_; ++k) {
      const word_type* rk = bits_.data() + k * words_;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!test(i, k)) continue;
        word_type* ri = bits_.data() + i * words_;
        for (std::size_t w = 0; w < words_; ++w) ri[w] |= rk[w];
      }
    }
  }

  void reflexive_close() {
    assert(rows_ == cols_);
    for (std::size_t i = 0; i < rows_; ++i) set(i, i);
  }

  // Restrict to the given row and column index lists, in the given order.
  BoolMatrix restrict(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const {
    BoolMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t a = 0; a < row_idx.size(); ++a)
      for (std::size_t b = 0; b < col_idx.size(); ++b)
        if (test(row_idx[a], col_idx[b])) out.set(a, b);
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = rows_ * 1000003U ^ cols_;
    for (word_type w : bits_) h = (h ^ std::hash<word_type>{}(w)) * 1099511628211ULL;
    return h;
  }

  // Lexicographic comparison on (rows, cols, bits); gives a total order for keys.
  friend bool operator<(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.bits_ < b.bits_;
  }

  friend bool operator==(const BoolMatrix& a, const BoolMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<word_type> bits_;
};

}  // namespace exreg
