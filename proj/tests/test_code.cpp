#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "lcdlab/code.hpp"
#include "lcdlab/families.hpp"
#include "oracles.hpp"

using lcd::BitMatrix;
using lcd::LinearCode;

namespace {

const BitMatrix kCode322 = BitMatrix::from_strings({"101", "011"});

std::set<std::vector<int>> codeword_set(const LinearCode& c) {
  auto words = oracle::codewords(oracle::dense(c.generator()));
  if (c.dimension() == 0) words = {std::vector<int>(c.length(), 0)};
  return {words.begin(), words.end()};
}

// Dual by brute force: every vector of F2^n orthogonal to all generator rows.
std::set<std::vector<int>> dual_oracle(const LinearCode& c) {
  const std::size_t n = c.length();
  const auto g = oracle::dense(c.generator());
  std::set<std::vector<int>> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool ok = true;
    for (const auto& row : g) {
      int dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot ^= row[j] & static_cast<int>((x >> j) & 1);
      ok = ok && dot == 0;
    }
    if (!ok) continue;
    std::vector<int> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<int>((x >> j) & 1);
    out.insert(v);
  }
  return out;
}

std::size_t hull_oracle(const LinearCode& c) {
  const auto a = codeword_set(c);
  const auto b = dual_oracle(c);
  std::size_t common = 0;
  for (const auto& w : a) common += b.count(w);
  std::size_t dim = 0;
  while ((std::size_t{1} << dim) < common) ++dim;
  return dim;
}

}  // namespace

TEST_CASE("make_code") {
  const LinearCode full(BitMatrix::identity(5));
  CHECK(full.length() == 5);
  CHECK(full.dimension() == 5);
  CHECK(full.min_weight() == 1);

  const LinearCode c(kCode322);
  CHECK(c.length() == 3);
  CHECK(c.dimension() == 2);
  CHECK(c.min_weight() == 2);
  CHECK(codeword_set(c) == std::set<std::vector<int>>{{0, 0, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}});

  CHECK_THROWS_AS(lcd::make_code(BitMatrix::from_strings({"11", "11"})), std::invalid_argument);
}

TEST_CASE("dual") {
  const LinearCode d = lcd::dual(LinearCode(kCode322));
  CHECK(d.dimension() == 1);
  CHECK(d.generator() == BitMatrix::from_strings({"111"}));

  const LinearCode rep(BitMatrix::from_strings({"11"}));
  CHECK(lcd::dual(rep) == rep);

  const LinearCode zero = lcd::dual(LinearCode(BitMatrix::identity(3)));
  CHECK(zero.dimension() == 0);
  CHECK(zero.length() == 3);
}

TEST_CASE("lcd_status") {
  CHECK(lcd::lcd_status(LinearCode(BitMatrix::identity(6))).is_lcd);
  const auto rep = lcd::lcd_status(LinearCode(BitMatrix::from_strings({"11"})));
  CHECK(rep.hull_dim == 1);
  CHECK_FALSE(rep.is_lcd);
  const auto c = lcd::lcd_status(LinearCode(kCode322));
  CHECK(c.hull_dim == 0);
  CHECK(c.is_lcd);
}

TEST_CASE("weight enumerators") {
  const std::vector<std::int64_t> zero(15, 0);
  const LinearCode i4(lcd::build_generator(4, zero));
  CHECK(i4.weight_enumerator().to_string() == "1+4y+6y^2+4y^3+y^4");

  const std::vector<std::int64_t> ones(15, 1);
  CHECK(LinearCode(lcd::build_generator(4, ones)).min_weight() == 9);

  CHECK(LinearCode(BitMatrix::from_strings({"11"})).weight_enumerator().to_string() == "1+y^2");
}

TEST_CASE("enumeration cap") {
  const LinearCode big(BitMatrix::identity(29));
  CHECK_THROWS_AS(big.weight_enumerator(), lcd::EnumerationCapError);
}

TEST_CASE("shorten") {
  const LinearCode s = lcd::shorten(LinearCode(kCode322), 2);
  CHECK(s.length() == 2);
  CHECK(s.dimension() == 1);
  CHECK(s.min_weight() == 2);

  const LinearCode f = lcd::shorten(LinearCode(BitMatrix::identity(5)), 3);
  CHECK(f.length() == 4);
  CHECK(f.dimension() == 4);

  // A coordinate that is zero on the whole code keeps the dimension.
  const LinearCode z(BitMatrix::from_strings({"100", "010"}));
  CHECK(lcd::shorten(z, 2).dimension() == 2);
}

TEST_CASE("column types") {
  std::vector<std::int64_t> a(15);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<std::int64_t>(i % 4);
  const auto types = lcd::column_types(LinearCode(lcd::build_generator(4, a)));
  CHECK(types.zero_count() == 0);
  const auto order = lcd::column_order(4);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::uint32_t identity_hit = std::has_single_bit(order[i]) ? 1 : 0;
    CHECK(types.mult(order[i]) == a[i] + identity_hit);
  }

  const auto i2 = lcd::column_types(BitMatrix::identity(2));
  CHECK(i2.counts == std::vector<std::uint32_t>{0, 1, 1, 0});

  std::mt19937_64 rng(3);
  const BitMatrix g = oracle::random_full_rank(rng, 4, 13);
  CHECK(lcd::column_types(g) == lcd::column_types(g.permute_columns(oracle::random_permutation(rng, 13))));
  CHECK(lcd::equivalent(LinearCode(g), lcd::code_from_types(lcd::column_types(g))));
}

TEST_CASE("canonical keys") {
  CHECK(lcd::equivalent(LinearCode(kCode322), LinearCode(BitMatrix::from_strings({"110", "011"}))));
  CHECK_FALSE(lcd::equivalent(LinearCode(kCode322), LinearCode(BitMatrix::from_strings({"100", "010"}))));
  CHECK_THROWS_AS(lcd::canonical_key(LinearCode(BitMatrix::identity(7))), lcd::EnumerationCapError);

  const auto key = lcd::canonical_key(LinearCode(kCode322));
  CHECK(lcd::CanonicalKey::from_hex(key.hex()) == key);
}

TEST_CASE("property: code invariants on random codes") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 11;
    const std::size_t k = 1 + rng() % n;
    const BitMatrix g = oracle::random_full_rank(rng, k, n);
    const LinearCode c(g);
    const LinearCode d = lcd::dual(c);

    CHECK(c.dimension() + d.dimension() == n);
    CHECK(codeword_set(d) == dual_oracle(c));
    if (d.dimension() > 0) {
      CHECK(lcd::dual(d) == c);
      CHECK(lcd::lcd_status(d).hull_dim == lcd::lcd_status(c).hull_dim);
    }
    CHECK(lcd::lcd_status(c).hull_dim == hull_oracle(c));

    const auto& we = c.weight_enumerator();
    CHECK(we.counts() == oracle::weight_distribution(oracle::dense(g), n));
    CHECK(we.total() == (std::uint64_t{1} << k));
    CHECK(we.count(0) == 1);
    CHECK(c.min_weight() == we.min_nonzero_weight());

    const BitMatrix t = oracle::random_invertible(rng, k);
    const auto perm = oracle::random_permutation(rng, n);
    const LinearCode moved(lcd::matmul(t, g).permute_columns(perm));
    CHECK(lcd::lcd_status(moved).is_lcd == lcd::lcd_status(c).is_lcd);
    CHECK(lcd::lcd_status(moved).hull_dim == lcd::lcd_status(c).hull_dim);
    if (k <= 6) CHECK(lcd::canonical_key(moved) == lcd::canonical_key(c));

    for (std::size_t i = 0; i < n; ++i) {
      const LinearCode s = lcd::shorten(c, i);
      CHECK(s.length() == n - 1);
      const bool zero_coordinate = g.column_is_zero(i);
      CHECK(s.dimension() == (zero_coordinate ? k : k - 1));
      if (c.min_weight() >= 2 && s.dimension() > 0 && !zero_coordinate) {
        CHECK(s.min_weight() >= c.min_weight());
      }
    }
  }
}

TEST_CASE("property: weight enumerator past one word") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 60 + rng() % 80;
    const std::size_t k = 1 + rng() % 10;
    const BitMatrix g = oracle::random_full_rank(rng, k, n);
    CHECK(LinearCode(g).weight_enumerator().counts() ==
          oracle::weight_distribution(oracle::dense(g), n));
  }
}
