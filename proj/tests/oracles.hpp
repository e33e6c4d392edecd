#pragma once

// Slow, obviously-correct reference implementations used to check the fast
// paths. Matrices are plain vectors of 0/1 rows.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lcdlab/gf2.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;

inline Dense dense(const lcd::BitMatrix& m) {
  Dense out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
  }
  return out;
}

inline std::size_t rank(Dense a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r != rank && a[r][c]) {
        for (std::size_t j = 0; j < cols; ++j) a[r][j] ^= a[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

// All 2^k codewords as dense vectors, message m picks rows by its bits.
inline std::vector<std::vector<int>> codewords(const Dense& g) {
  const std::size_t k = g.size();
  const std::size_t n = k == 0 ? 0 : g[0].size();
  std::vector<std::vector<int>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    std::vector<int> w(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if ((m >> i) & 1) {
        for (std::size_t j = 0; j < n; ++j) w[j] ^= g[i][j];
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

inline std::vector<std::uint64_t> weight_distribution(const Dense& g, std::size_t n) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (const auto& w : codewords(g)) {
    std::size_t wt = 0;
    for (int b : w) wt += static_cast<std::size_t>(b);
    ++counts[wt];
  }
  return counts;
}

// Leibniz expansion; fine up to 6x6.
inline std::int64_t det_leibniz(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::int64_t total = 0;
  do {
    std::int64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline lcd::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                    double density = 0.5) {
  std::bernoulli_distribution bit(density);
  lcd::BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
  }
  return m;
}

// Random full-rank k x n matrix (k <= n).
inline lcd::BitMatrix random_full_rank(std::mt19937_64& rng, std::size_t k, std::size_t n) {
  for (;;) {
    lcd::BitMatrix m = random_matrix(rng, k, n);
    if (lcd::rank(m) == k) return m;
  }
}

inline lcd::BitMatrix random_invertible(std::mt19937_64& rng, std::size_t k) {
  return random_full_rank(rng, k, k);
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
