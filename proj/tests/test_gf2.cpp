#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lcdlab/families.hpp"
#include "lcdlab/gf2.hpp"
#include "oracles.hpp"

using lcd::BitMatrix;

TEST_CASE("rref of the identity is itself") {
  const auto r = lcd::rref(BitMatrix::identity(4));
  CHECK(r.reduced == BitMatrix::identity(4));
  CHECK(r.rank == 4);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("rref of a duplicated row") {
  const auto r = lcd::rref(BitMatrix::from_strings({"11", "11"}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.reduced.row_is_zero(1));
}

TEST_CASE("G(a) with all-ones a has rank 4") {
  const std::vector<std::int64_t> a(15, 1);
  const BitMatrix g = lcd::build_generator(4, a);
  CHECK(g.cols() == 19);
  CHECK(lcd::rank(g) == 4);
}

TEST_CASE("padding stays clear across word boundaries") {
  BitMatrix m(3, 70);
  m.set(0, 69, true);
  m.set(1, 63, true);
  m.set(1, 64, true);
  CHECK(m.row(0)[1] == (BitMatrix::Word{1} << 5));
  const BitMatrix t = m.transpose().transpose();
  CHECK(t == m);
  CHECK(m.without_column(69).row_is_zero(0));
  CHECK(m.row_weight(1) == 2);
}

TEST_CASE("from_strings rejects bad input") {
  CHECK_THROWS_AS(BitMatrix::from_strings({"101", "10"}), std::invalid_argument);
  CHECK_THROWS_AS(BitMatrix::from_strings({"102"}), std::invalid_argument);
}

TEST_CASE("det_f2 basics") {
  CHECK(lcd::det_f2(BitMatrix::identity(5)));
  CHECK_FALSE(lcd::det_f2(BitMatrix::from_strings({"11", "11"})));
  CHECK_FALSE(lcd::det_f2(lcd::gram_f2(BitMatrix::from_strings({"11"}))));
  CHECK_THROWS_AS(lcd::det_f2(BitMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("gram over both rings") {
  CHECK(lcd::gram_integer(BitMatrix::identity(4)).at(2, 2) == 1);
  CHECK(lcd::gram_integer(BitMatrix::identity(4)).at(1, 2) == 0);

  const auto g = BitMatrix::from_strings({"11"});
  CHECK(lcd::gram_integer(g).at(0, 0) == 2);
  CHECK_FALSE(lcd::gram_f2(g).get(0, 0));

  // a = e_1: the single extra column is (1,1,1,1), so b_ii = 2 and b_ij = 1.
  std::vector<std::int64_t> a(15, 0);
  a[0] = 1;
  const auto b = lcd::gram_integer(lcd::build_generator(4, a));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(b.at(i, j) == (i == j ? 2 : 1));
  }
}

TEST_CASE("matmul") {
  std::mt19937_64 rng(7);
  const BitMatrix a = oracle::random_matrix(rng, 5, 9);
  CHECK(lcd::matmul(a, BitMatrix::identity(9)) == a);

  const auto perm = oracle::random_permutation(rng, 9);
  BitMatrix p(9, 9);
  for (std::size_t j = 0; j < 9; ++j) p.set(perm[j], j, true);
  CHECK(lcd::matmul(a, p) == a.permute_columns(perm));

  CHECK_THROWS_AS(lcd::matmul(a, BitMatrix(5, 5)), std::invalid_argument);

  const BitMatrix g = oracle::random_full_rank(rng, 4, 12);
  const BitMatrix t = oracle::random_invertible(rng, 4);
  CHECK(lcd::rref(lcd::matmul(t, g)).reduced == lcd::rref(g).reduced);
}

TEST_CASE("property: rank agrees with a dense oracle and with the transpose") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 12;
    const std::size_t cols = 1 + rng() % 140;
    const BitMatrix m = oracle::random_matrix(rng, rows, cols, trial % 3 == 0 ? 0.1 : 0.5);
    const std::size_t r = lcd::rank(m);
    CHECK(r == oracle::rank(oracle::dense(m)));
    CHECK(r == lcd::rank(m.transpose()));
  }
}

TEST_CASE("property: rref is reduced and preserves the row space") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const BitMatrix m = oracle::random_matrix(rng, 1 + rng() % 8, 1 + rng() % 80, 0.3);
    const auto r = lcd::rref(m);
    for (std::size_t i = 0; i < r.rank; ++i) {
      for (std::size_t j = 0; j < r.rank; ++j) CHECK(r.reduced.get(j, r.pivots[i]) == (i == j));
      for (std::size_t c = 0; c < r.pivots[i]; ++c) CHECK_FALSE(r.reduced.get(i, c));
      if (i > 0) CHECK(r.pivots[i - 1] < r.pivots[i]);
    }
    for (std::size_t i = r.rank; i < r.reduced.rows(); ++i) CHECK(r.reduced.row_is_zero(i));
    CHECK(lcd::rank(lcd::vconcat(m, r.reduced)) == r.rank);
  }
}

TEST_CASE("property: integer Gram reduces to the GF(2) Gram") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const BitMatrix g = oracle::random_matrix(rng, 1 + rng() % 7, 1 + rng() % 100);
    CHECK(lcd::reduce_mod2(lcd::gram_integer(g)) == lcd::gram_f2(g));
  }
}

TEST_CASE("property: det_f2 iff full rank") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const BitMatrix m = oracle::random_matrix(rng, n, n);
    CHECK(lcd::det_f2(m) == (lcd::rref(m).rank == n));
  }
}

TEST_CASE("property: matmul is associative") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t a = 1 + rng() % 9, b = 1 + rng() % 70, c = 1 + rng() % 9, d = 1 + rng() % 70;
    const BitMatrix x = oracle::random_matrix(rng, a, b);
    const BitMatrix y = oracle::random_matrix(rng, b, c);
    const BitMatrix z = oracle::random_matrix(rng, c, d);
    CHECK(lcd::matmul(lcd::matmul(x, y), z) == lcd::matmul(x, lcd::matmul(y, z)));
  }
}

TEST_CASE("property: det_integer agrees with the Leibniz expansion") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    lcd::IntMatrix m(n, n);
    std::vector<std::vector<std::int64_t>> dense(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        dense[i][j] = static_cast<std::int64_t>(rng() % 41) - 20;
        m.at(i, j) = dense[i][j];
      }
    }
    CHECK(lcd::det_integer(m) == oracle::det_leibniz(dense));
  }
}
