#include "lcdlab/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

namespace lcd {

namespace {

// Block order of M(a). k = 4 follows the displayed columns v_1 = (1,1,1,1)^T,
// v_2 = (1,1,1,0)^T, ..., v_15 = (0,0,0,1)^T; k = 5 lists the 31 nonzero
// vectors in decreasing binary order reading rows top to bottom. Stored with
// row i at bit i.
constexpr std::array<std::uint32_t, 15> kOrder4 = {15, 7, 11, 13, 14, 3, 5, 9,
                                                   6,  10, 12, 1, 2, 4, 8};
constexpr std::array<std::uint32_t, 31> kOrder5 = {
    31, 15, 23, 7, 27, 11, 19, 3, 29, 13, 21, 5, 25, 9, 17, 1,
    30, 14, 22, 6, 26, 10, 18, 2, 28, 12, 20, 4, 24, 8, 16};

// {k, s, offsets of a_i from t, claimed d offset, stated least t}
const std::vector<FamilyRow>& rows4() {
  static const std::vector<FamilyRow> rows = {
    {4, 0, {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, -1, -1}, -2, 1},
    {4, 1, {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, -1, 0}, -1, 1},
    {4, 2, {0, 0, 0, 0, 0, 0, 0, -1, 1, 1, -1, 0, -1, -1, 0}, 0, 1},
    {4, 3, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0}, 0, 1},
    {4, 4, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 1, 0},
    {4, 5, {0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, -1, -1}, 2, 1},
    {4, 6, {0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0}, 2, 0},
    {4, 7, {0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1}, 2, 0},
    {4, 8, {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0}, 3, 0},
    {4, 9, {0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, -1}, 4, 1},
    {4, 10, {0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 1, 1, 0, 0, -1}, 4, 1},
    {4, 11, {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0, -1}, 4, 1},
    {4, 12, {0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 1, 1, 1, -1, -1}, 5, 1},
    {4, 13, {0, 0, 0, 1, 1, 0, 1, 2, 2, 1, 1, 1, 1, -1, -1}, 6, 1},
    {4, 14, {0, 0, 0, 0, 1, 0, 1, 2, 2, 2, 1, 2, 0, 0, -1}, 6, 1},
  };
  return rows;
}

const std::vector<FamilyRow>& rows5() {
  static const std::vector<FamilyRow> rows = {
    {5, 0, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, -1, -1, -1}, -2, 1},
    {5, 1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 1, 1, -1, -1, -1, 0}, -1, 1},
    {5, 2, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, -1, 0}, -1, 1},
    {5, 3, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 1, -1, -1, -1, 0}, 0, 1},
    {5, 4, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0}, 0, 1},
    {5, 5, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 1, 0},
    {5, 6, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}, 1, 0},
    {5, 7, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, -1, -1}, 2, 1},
    {5, 8, {0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 2, 1},
    {5, 9, {0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 3, 0},
    {5, 10, {0, 0, 0, 0, 0, 0, 1, 1, 0, 2, 0, 0, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 3, 1},
    {5, 11, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, -1, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 4, 1},
    {5, 12, {0, 0, 0, 0, 0, 1, 1, 1, 0, 2, 0, 1, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 4, 1},
    {5, 13, {0, 0, 0, 1, 0, 1, 2, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 5, 0},
    {5, 14, {0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 5, 0},
    {5, 15, {0, 0, 0, 2, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 6, 0},
    {5, 16, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 2, 0, 1, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}, 6, 0},
    {5, 17, {0, 0, 0, 2, 1, 1, 1, 1, 1, 1, 2, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 7, 0},
    {5, 18, {0, 0, 0, 2, 0, 2, 2, 0, 1, 1, 1, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 7, 0},
    {5, 19, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, -1, -1, -1, 0, -1}, 8, 1},
    {5, 20, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, 1, 1, 1, 0, 1, 0, 0, -1, 1, 0, 0, -1, 0, -1, -1}, 9, 1},
    {5, 21, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0}, 9, 0},
    {5, 22, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0, -1, 1, 0, 0, -1, 0, -1, -1}, 10, 1},
    {5, 23, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0}, 10, 0},
    {5, 24, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0}, 11, 0},
    {5, 25, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0}, 11, 0},
    {5, 26, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, -1, 1, 0, 1, -1, 1, -1, -1}, 12, 1},
    {5, 27, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0}, 12, 0},
    {5, 28, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0, 1, 1, 0, 0}, 13, 0},
    {5, 29, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0}, 13, 0},
    {5, 30, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1}, 14, 0},
  };
  return rows;
}

void check_k(int k) {
  if (k != 4 && k != 5) {
    throw std::invalid_argument("only k = 4 and k = 5 families are tabulated (got k = " +
                                std::to_string(k) + ")");
  }
}

bool odd_overlap(std::uint32_t a, std::uint32_t b) { return std::popcount(a & b) & 1u; }

}  // namespace

std::span<const std::uint32_t> column_order(int k) {
  check_k(k);
  if (k == 4) return kOrder4;
  return kOrder5;
}

BitMatrix build_generator(int k, std::span<const std::int64_t> a) {
  const auto order = column_order(k);
  if (a.size() != order.size()) {
    throw std::invalid_argument("build_generator: a has " + std::to_string(a.size()) +
                                " entries, expected " + std::to_string(order.size()));
  }
  std::size_t n = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) {
      throw std::invalid_argument("build_generator: a_" + std::to_string(i + 1) +
                                  " is negative (" + std::to_string(a[i]) + ")");
    }
    n += static_cast<std::size_t>(a[i]);
  }
  BitMatrix g(static_cast<std::size_t>(k), n);
  for (int i = 0; i < k; ++i) g.set(i, i, true);
  std::size_t col = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::int64_t rep = 0; rep < a[i]; ++rep, ++col) {
      for (int r = 0; r < k; ++r) {
        if ((order[i] >> r) & 1u) g.set(static_cast<std::size_t>(r), col, true);
      }
    }
  }
  return g;
}

std::span<const FamilyRow> family_rows(int k) {
  check_k(k);
  return k == 4 ? rows4() : rows5();
}

const FamilyRow& family_row(int k, int s) {
  for (const FamilyRow& row : family_rows(k)) {
    if (row.s == s) return row;
  }
  throw std::invalid_argument("no tabulated family row for k = " + std::to_string(k) +
                              ", s = " + std::to_string(s));
}

AffineVec family_affine_vector(int k, int s) {
  const FamilyRow& row = family_row(k, s);
  AffineVec av;
  av.reserve(row.offsets.size());
  for (int c : row.offsets) av.push_back(AffineForm{c, 1});
  return av;
}

std::int64_t family_t_min(int k, int s) {
  const FamilyRow& row = family_row(k, s);
  const int lowest = *std::min_element(row.offsets.begin(), row.offsets.end());
  return std::max(0, -lowest);
}

std::vector<std::int64_t> family_a_vector(int k, int s, std::int64_t t) {
  const AffineVec av = family_affine_vector(k, s);
  std::vector<std::int64_t> a(av.size());
  for (std::size_t i = 0; i < av.size(); ++i) {
    a[i] = av[i](t);
    if (a[i] < 0) {
      throw FamilyRangeError("t = " + std::to_string(t) + " is below the range of row s = " +
                                 std::to_string(s) + ": a_" + std::to_string(i + 1) + " = " +
                                 std::to_string(a[i]),
                             i + 1, a[i]);
    }
  }
  return a;
}

FamilyClaim family_claim(int k, int s, std::int64_t t) {
  const FamilyRow& row = family_row(k, s);
  const std::int64_t types = (std::int64_t{1} << k) - 1;
  const std::int64_t half = std::int64_t{1} << (k - 1);
  return FamilyClaim{static_cast<std::size_t>(types * t + s), static_cast<std::size_t>(k),
                     static_cast<std::size_t>(half * t + row.claimed_d_offset), true};
}

FamilyVerdict family_code(int k, int s, std::int64_t t) {
  const auto a = family_a_vector(k, s, t);
  LinearCode code(build_generator(k, a));
  FamilyVerdict v{s, t, family_claim(k, s, t), code, code.length(), code.min_weight(),
                  code.hull(), false};
  v.match = v.n == v.claimed.n && v.d == v.claimed.d && v.hull.is_lcd == v.claimed.is_lcd;
  return v;
}

std::uint64_t SymbolicWE::nonzero_codewords() const {
  std::uint64_t total = 0;
  for (const auto& term : terms) total += term.multiplicity;
  return total;
}

WeightEnumerator SymbolicWE::instantiate(std::int64_t t, std::size_t n) const {
  std::vector<std::uint64_t> counts(n + 1, 0);
  counts[0] = 1;
  for (const auto& term : terms) {
    const std::int64_t w = term.exponent(t);
    if (w < 0 || static_cast<std::size_t>(w) > n) {
      throw std::out_of_range("weight " + std::to_string(w) + " outside [0, " +
                              std::to_string(n) + "] at t = " + std::to_string(t));
    }
    counts[static_cast<std::size_t>(w)] += term.multiplicity;
  }
  return WeightEnumerator(std::move(counts));
}

std::string SymbolicWE::to_string() const {
  std::string s = "1";
  for (const auto& term : terms) {
    s += '+';
    if (term.multiplicity != 1) s += std::to_string(term.multiplicity);
    s += "y^{" + term.exponent.to_string() + "}";
  }
  return s;
}

SymbolicWE symbolic_weight_enumerator(int k, const AffineVec& av) {
  const auto order = column_order(k);
  if (av.size() != order.size()) throw std::invalid_argument("affine vector has wrong length");
  std::map<AffineForm, std::uint64_t> collected;
  for (std::uint32_t m = 1; m < (1u << k); ++m) {
    AffineForm exponent{std::popcount(m), 0};
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (odd_overlap(m, order[i])) exponent = exponent + av[i];
    }
    ++collected[exponent];
  }
  SymbolicWE we;
  for (const auto& [exponent, mult] : collected) we.terms.push_back({mult, exponent});
  return we;
}

std::vector<AffineForm> symbolic_gram(int k, const AffineVec& av) {
  const auto order = column_order(k);
  if (av.size() != order.size()) throw std::invalid_argument("affine vector has wrong length");
  const std::size_t dim = static_cast<std::size_t>(k);
  std::vector<AffineForm> b(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    b[i * dim + i].constant = 1;
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t l = 0; l < order.size(); ++l) {
        if (((order[l] >> i) & 1u) && ((order[l] >> j) & 1u)) b[i * dim + j] = b[i * dim + j] + av[l];
      }
    }
  }
  return b;
}

IntPoly gram_det_by_elimination(int k, const AffineVec& av) {
  const auto b = symbolic_gram(k, av);
  const std::size_t n = static_cast<std::size_t>(k);
  std::vector<IntPoly> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) m[i] = IntPoly::from_affine(b[i]);
  auto at = [&](std::size_t r, std::size_t c) -> IntPoly& { return m[r * n + c]; };
  // Bareiss: every division by the previous pivot is exact in Z[t].
  IntPoly prev = IntPoly::constant(1);
  bool negate = false;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (at(p, p).is_zero()) {
      std::size_t r = p + 1;
      while (r < n && at(r, p).is_zero()) ++r;
      if (r == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(at(p, c), at(r, c));
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        at(i, j) = (at(p, p) * at(i, j) - at(i, p) * at(p, j)).exact_div(prev);
      }
      at(i, p) = IntPoly();
    }
    prev = at(p, p);
  }
  return negate ? -at(n - 1, n - 1) : at(n - 1, n - 1);
}

IntPoly gram_det_by_interpolation(int k, const AffineVec& av) {
  const auto b = symbolic_gram(k, av);
  const std::size_t n = static_cast<std::size_t>(k);
  // Degree is at most k, so k + 1 samples determine it.
  std::vector<std::int64_t> samples;
  for (std::int64_t t = 0; t <= k; ++t) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = b[i * n + j](t);
    }
    samples.push_back(det_integer(m));
  }
  return interpolate_at_naturals(samples);
}

IntPoly symbolic_gram_det(int k, const AffineVec& av) {
  IntPoly by_elimination = gram_det_by_elimination(k, av);
  const IntPoly by_interpolation = gram_det_by_interpolation(k, av);
  if (by_elimination != by_interpolation) {
    throw std::logic_error("symbolic determinant routes disagree: " + by_elimination.to_string() +
                           " vs " + by_interpolation.to_string());
  }
  return by_elimination;
}

}  // namespace lcd
