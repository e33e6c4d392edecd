#pragma once

// Dense linear algebra over GF(2) with bit-packed rows, plus the few exact
// integer routines needed for Gram matrices of small codes.
//
// Bit convention: entry (i, j) lives in word j / 64 of row i, at bit j % 64
// (LSB-first). Padding bits past cols() are always zero.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcd {

class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxDim = std::size_t{1} << 16;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  // Rows given as strings of '0'/'1'. Throws std::invalid_argument on ragged
  // or non-binary input.
  static BitMatrix from_strings(std::span<const std::string> rows);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value);

  std::span<Word> row(std::size_t r) {
    return {data_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<const Word> row(std::size_t r) const {
    return {data_.data() + r * words_per_row_, words_per_row_};
  }

  // row(dst) ^= row(src)
  void xor_row_into(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  std::size_t row_weight(std::size_t r) const;
  bool row_is_zero(std::size_t r) const;
  bool column_is_zero(std::size_t c) const;

  BitMatrix transpose() const;
  BitMatrix without_column(std::size_t c) const;
  BitMatrix without_row(std::size_t r) const;
  BitMatrix column_range(std::size_t first, std::size_t count) const;
  // Column j of the result is column perm[j] of this matrix.
  BitMatrix permute_columns(std::span<const std::size_t> perm) const;

  // '0'/'1' rows separated by '\n'.
  std::string to_string() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> data_;
};

// [A | B]
BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);
// A stacked on top of B.
BitMatrix vconcat(const BitMatrix& a, const BitMatrix& b);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct RrefResult {
  BitMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination without column swaps.
RrefResult rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

// True iff the square matrix is invertible over GF(2).
bool det_f2(const BitMatrix& m);

// G * G^T over GF(2) and over the integers.
BitMatrix gram_f2(const BitMatrix& g);
IntMatrix gram_integer(const BitMatrix& g);
BitMatrix reduce_mod2(const IntMatrix& m);

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);

// Exact integer determinant by fraction-free (Bareiss) elimination with
// 128-bit intermediates. Throws std::overflow_error if the result does not
// fit in 64 bits.
std::int64_t det_integer(const IntMatrix& m);

}  // namespace lcd
