#include "lcdlab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lcd {

namespace {

std::size_t words_for(std::size_t cols) {
  return (cols + BitMatrix::kWordBits - 1) / BitMatrix::kWordBits;
}

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows > BitMatrix::kMaxDim || cols > BitMatrix::kMaxDim) {
    throw std::invalid_argument("BitMatrix dimensions exceed 2^16");
  }
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)) {
  check_dims(rows, cols);
  data_.assign(rows_ * words_per_row_, 0);
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("ragged rows: row " + std::to_string(r) +
                                  " has length " +
                                  std::to_string(rows[r].size()) +
                                  ", expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument(std::string("non-binary character '") +
                                    ch + "' in row " + std::to_string(r));
      }
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<std::string> owned(rows.begin(), rows.end());
  return from_strings(std::span<const std::string>(owned));
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  Word& w = data_[r * words_per_row_ + c / kWordBits];
  const Word mask = Word{1} << (c % kWordBits);
  if (value) {
    w |= mask;
  } else {
    w &= ~mask;
  }
}

void BitMatrix::xor_row_into(std::size_t dst, std::size_t src) {
  Word* d = data_.data() + dst * words_per_row_;
  const Word* s = data_.data() + src * words_per_row_;
  for (std::size_t i = 0; i < words_per_row_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * words_per_row_,
                   data_.begin() + (a + 1) * words_per_row_,
                   data_.begin() + b * words_per_row_);
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (Word x : row(r)) w += std::popcount(x);
  return w;
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  for (Word x : row(r)) {
    if (x != 0) return false;
  }
  return true;
}

bool BitMatrix::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) return false;
  }
  return true;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

BitMatrix BitMatrix::without_column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  BitMatrix out(rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0, o = 0; j < cols_; ++j) {
      if (j == c) continue;
      if (get(r, j)) out.set(r, o, true);
      ++o;
    }
  }
  return out;
}

BitMatrix BitMatrix::without_row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("row index out of range");
  BitMatrix out(rows_ - 1, cols_);
  for (std::size_t i = 0, o = 0; i < rows_; ++i) {
    if (i == r) continue;
    std::copy(row(i).begin(), row(i).end(), out.row(o).begin());
    ++o;
  }
  return out;
}

BitMatrix BitMatrix::column_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("column range out of range");
  BitMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < count; ++j) {
      if (get(r, first + j)) out.set(r, j, true);
    }
  }
  return out;
}

BitMatrix BitMatrix::permute_columns(std::span<const std::size_t> perm) const {
  if (perm.size() != cols_) throw std::invalid_argument("permutation size mismatch");
  BitMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(r, perm[j])) out.set(r, j, true);
    }
  }
  return out;
}

std::string BitMatrix::to_string() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) s.push_back('\n');
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
  }
  return s;
}

BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
  BitMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.get(r, c)) out.set(r, c, true);
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (b.get(r, c)) out.set(r, a.cols() + c, true);
    }
  }
  return out;
}

BitMatrix vconcat(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vconcat: column count mismatch");
  BitMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::copy(b.row(r).begin(), b.row(r).end(), out.row(a.rows() + r).begin());
  }
  return out;
}

RrefResult rref(const BitMatrix& m) {
  RrefResult res{m, 0, {}};
  BitMatrix& a = res.reduced;
  const std::size_t rows = a.rows();
  const std::size_t wpr = a.words_per_row();
  for (std::size_t c = 0; c < a.cols() && res.rank < rows; ++c) {
    const std::size_t w = c / BitMatrix::kWordBits;
    const BitMatrix::Word mask = BitMatrix::Word{1} << (c % BitMatrix::kWordBits);
    std::size_t pivot = res.rank;
    while (pivot < rows && !(a.row(pivot)[w] & mask)) ++pivot;
    if (pivot == rows) continue;
    a.swap_rows(pivot, res.rank);
    // Rows below the rank are zero left of c, so eliminating from word w on
    // is enough.
    const auto prow = a.row(res.rank);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == res.rank) continue;
      auto target = a.row(r);
      if (!(target[w] & mask)) continue;
      for (std::size_t i = w; i < wpr; ++i) target[i] ^= prow[i];
    }
    res.pivots.push_back(c);
    ++res.rank;
  }
  return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

bool det_f2(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_f2: matrix is not square");
  return rank(m) == m.rows();
}

BitMatrix gram_f2(const BitMatrix& g) {
  BitMatrix out(g.rows(), g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) {
      unsigned parity = 0;
      const auto a = g.row(i);
      const auto b = g.row(j);
      for (std::size_t w = 0; w < a.size(); ++w) parity ^= std::popcount(a[w] & b[w]) & 1u;
      out.set(i, j, parity);
      out.set(j, i, parity);
    }
  }
  return out;
}

IntMatrix gram_integer(const BitMatrix& g) {
  IntMatrix out(g.rows(), g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) {
      std::int64_t dot = 0;
      const auto a = g.row(i);
      const auto b = g.row(j);
      for (std::size_t w = 0; w < a.size(); ++w) dot += std::popcount(a[w] & b[w]);
      out.at(i, j) = dot;
      out.at(j, i) = dot;
    }
  }
  return out;
}

BitMatrix reduce_mod2(const IntMatrix& m) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, (m.at(r, c) & 1) != 0);
  }
  return out;
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: dimension mismatch (" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + ")");
  }
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.get(i, j)) continue;
      const auto src = b.row(j);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

std::int64_t det_integer(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_integer: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<__int128> a(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m.at(r, c);
  }
  auto at = [&](std::size_t r, std::size_t c) -> __int128& { return a[r * n + c]; };
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  const __int128 det = sign * at(n - 1, n - 1);
  if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("det_integer: result overflows int64");
  return static_cast<std::int64_t>(det);
}

}  // namespace lcd
