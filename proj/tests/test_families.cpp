#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lcdlab/families.hpp"
#include "lcdlab/reference.hpp"
#include "oracles.hpp"

using lcd::AffineForm;
using lcd::AffineVec;

namespace {

// Closed-form Gram entries b_{i,j} for k = 4 as 1-based index lists into a.
struct GramEntry {
  int i, j;
  int diagonal;
  std::vector<int> terms;
};

const std::vector<GramEntry> kGram4 = {
    {1, 1, 1, {1, 2, 3, 4, 6, 7, 8, 12}},  {1, 2, 0, {1, 2, 3, 6}},
    {1, 3, 0, {1, 2, 4, 7}},               {1, 4, 0, {1, 3, 4, 8}},
    {2, 2, 1, {1, 2, 3, 5, 6, 9, 10, 13}}, {2, 3, 0, {1, 2, 5, 9}},
    {2, 4, 0, {1, 3, 5, 10}},              {3, 3, 1, {1, 2, 4, 5, 7, 9, 11, 14}},
    {3, 4, 0, {1, 4, 5, 11}},              {4, 4, 1, {1, 3, 4, 5, 8, 10, 11, 15}},
};

// The 15 displayed exponents of the k = 4 weight enumerator.
const std::vector<std::pair<int, std::vector<int>>> kExponents4 = {
    {1, {1, 2, 3, 4, 6, 7, 8, 12}},      {1, {1, 2, 3, 5, 6, 9, 10, 13}},
    {1, {1, 2, 4, 5, 7, 9, 11, 14}},     {1, {1, 3, 4, 5, 8, 10, 11, 15}},
    {2, {4, 5, 7, 8, 9, 10, 12, 13}},    {2, {3, 5, 6, 8, 9, 11, 12, 14}},
    {2, {2, 5, 6, 7, 10, 11, 12, 15}},   {2, {3, 4, 6, 7, 10, 11, 13, 14}},
    {2, {2, 4, 6, 8, 9, 11, 13, 15}},    {2, {2, 3, 7, 8, 9, 10, 14, 15}},
    {3, {1, 2, 8, 10, 11, 12, 13, 14}},  {3, {1, 3, 7, 9, 11, 12, 13, 15}},
    {3, {1, 4, 6, 9, 10, 12, 14, 15}},   {3, {1, 5, 6, 7, 8, 13, 14, 15}},
    {4, {2, 3, 4, 5, 12, 13, 14, 15}},
};

AffineVec constant_vec(int k, std::int64_t value) {
  return AffineVec(static_cast<std::size_t>((1 << k) - 1), AffineForm{value, 0});
}

std::vector<std::int64_t> evaluate(const AffineVec& av, std::int64_t t) {
  std::vector<std::int64_t> a;
  for (const auto& f : av) a.push_back(f(t));
  return a;
}

}  // namespace

TEST_CASE("column orders are complete") {
  for (int k : {4, 5}) {
    const auto order = lcd::column_order(k);
    CHECK(order.size() == static_cast<std::size_t>((1 << k) - 1));
    const std::set<std::uint32_t> distinct(order.begin(), order.end());
    CHECK(distinct.size() == order.size());
    CHECK(*distinct.begin() == 1);
    CHECK(*distinct.rbegin() == static_cast<std::uint32_t>((1 << k) - 1));
  }
  CHECK_THROWS_AS(lcd::column_order(3), std::invalid_argument);
}

TEST_CASE("build_generator") {
  CHECK(lcd::build_generator(4, std::vector<std::int64_t>(15, 0)) == lcd::BitMatrix::identity(4));
  CHECK(lcd::build_generator(4, std::vector<std::int64_t>(15, 1)).cols() == 19);
  CHECK(lcd::build_generator(5, std::vector<std::int64_t>(31, 1)).cols() == 36);
  std::vector<std::int64_t> bad(15, 1);
  bad[3] = -1;
  CHECK_THROWS_AS(lcd::build_generator(4, bad), std::invalid_argument);
  CHECK_THROWS_AS(lcd::build_generator(4, std::vector<std::int64_t>(14, 1)),
                  std::invalid_argument);
}

TEST_CASE("family a-vectors") {
  CHECK(lcd::family_a_vector(4, 3, 1) ==
        std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1});

  try {
    lcd::family_a_vector(4, 2, 0);
    FAIL("expected a range error");
  } catch (const lcd::FamilyRangeError& e) {
    CHECK(e.entry() == 8);
    CHECK(e.value() == -1);
  }

  std::vector<std::int64_t> expected(31, 1);
  expected[28] = 0;
  CHECK(lcd::family_a_vector(5, 4, 1) == expected);
}

TEST_CASE("mechanical t_min never exceeds the stated range start") {
  for (int k : {4, 5}) {
    for (const auto& row : lcd::family_rows(k)) {
      CAPTURE(k);
      CAPTURE(row.s);
      CHECK(lcd::family_t_min(k, row.s) <= row.stated_t_min);
    }
  }
}

TEST_CASE("family codes") {
  const auto v1 = lcd::family_code(4, 2, 1);
  CHECK(v1.n == 17);
  CHECK(v1.d == 8);
  CHECK(v1.hull.is_lcd);
  CHECK(v1.match);

  const auto v2 = lcd::family_code(4, 0, 1);
  CHECK(v2.n == 15);
  CHECK(v2.d == 6);
  CHECK(v2.match);

  const auto v3 = lcd::family_code(5, 20, 1);
  CHECK(v3.n == 51);
  CHECK(v3.d == 25);
  CHECK(v3.match);
}

TEST_CASE("symbolic weight enumerators") {
  CHECK(lcd::symbolic_weight_enumerator(4, lcd::family_affine_vector(4, 2)).to_string() ==
        "1+8y^{8t}+6y^{8t+2}+y^{8t+4}");
  CHECK(lcd::symbolic_weight_enumerator(5, lcd::family_affine_vector(5, 20)).to_string() ==
        "1+10y^{16t+9}+10y^{16t+10}+5y^{16t+11}+5y^{16t+12}+y^{16t+15}");
  CHECK(lcd::symbolic_weight_enumerator(4, constant_vec(4, 0)).instantiate(0, 4).to_string() ==
        "1+4y+6y^2+4y^3+y^4");
}

TEST_CASE("symbolic Gram determinants") {
  CHECK(lcd::symbolic_gram_det(4, lcd::family_affine_vector(4, 2)).to_string() ==
        "1280t^4+512t^3-96t^2-32t+1");
  CHECK(lcd::symbolic_gram_det(5, lcd::family_affine_vector(5, 3)).to_string() ==
        "196608t^5+61440t^4-1024t^3-1280t^2-48t+1");
  CHECK(lcd::symbolic_gram_det(4, constant_vec(4, 0)) == lcd::IntPoly::constant(1));
}

TEST_CASE("every row matches its published weight enumerator and determinant") {
  for (int k : {4, 5}) {
    for (const auto& row : lcd::family_rows(k)) {
      CAPTURE(k);
      CAPTURE(row.s);
      const AffineVec av = lcd::family_affine_vector(k, row.s);
      CHECK(lcd::symbolic_weight_enumerator(k, av) == lcd::ref::weight_enumerator(k, row.s));
      const lcd::IntPoly det = lcd::symbolic_gram_det(k, av);
      CHECK(det == lcd::ref::gram_det(k, row.s));
      CHECK(det.is_one_mod2());
    }
  }
}

TEST_CASE("property: symbolic data agrees with the constructed codes") {
  for (int k : {4, 5}) {
    for (const auto& row : lcd::family_rows(k)) {
      const AffineVec av = lcd::family_affine_vector(k, row.s);
      const auto we = lcd::symbolic_weight_enumerator(k, av);
      const auto det = lcd::symbolic_gram_det(k, av);
      CHECK(lcd::gram_det_by_elimination(k, av) == lcd::gram_det_by_interpolation(k, av));
      for (std::int64_t t = lcd::family_t_min(k, row.s); t <= 4; ++t) {
        CAPTURE(k);
        CAPTURE(row.s);
        CAPTURE(t);
        const auto v = lcd::family_code(k, row.s, t);
        CHECK(we.instantiate(t, v.n) == v.code.weight_enumerator());
        const auto g = lcd::build_generator(k, evaluate(av, t));
        CHECK(det(t) == lcd::det_integer(lcd::gram_integer(g)));
      }
    }
  }
}

TEST_CASE("property: closed-form Gram entries for k = 4") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> a(15);
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % 6);
    const lcd::IntMatrix b = lcd::gram_integer(lcd::build_generator(4, a));
    for (const auto& e : kGram4) {
      std::int64_t expected = e.diagonal;
      for (int idx : e.terms) expected += a[static_cast<std::size_t>(idx - 1)];
      CHECK(b.at(e.i - 1, e.j - 1) == expected);
      CHECK(b.at(e.j - 1, e.i - 1) == expected);
    }
  }
}

TEST_CASE("property: displayed k = 4 exponents are the message weights") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> a(15);
    AffineVec av;
    for (auto& x : a) {
      x = static_cast<std::int64_t>(rng() % 6);
      av.push_back(AffineForm{x, 0});
    }
    std::multiset<std::int64_t> displayed;
    for (const auto& [c, idx] : kExponents4) {
      std::int64_t e = c;
      for (int i : idx) e += a[static_cast<std::size_t>(i - 1)];
      displayed.insert(e);
    }
    std::multiset<std::int64_t> generic;
    for (const auto& term : lcd::symbolic_weight_enumerator(4, av).terms) {
      for (std::uint64_t m = 0; m < term.multiplicity; ++m) generic.insert(term.exponent(0));
    }
    CHECK(displayed == generic);

    const lcd::LinearCode code(lcd::build_generator(4, a));
    std::multiset<std::int64_t> measured;
    const auto& counts = code.weight_enumerator().counts();
    for (std::size_t w = 1; w < counts.size(); ++w) {
      for (std::uint64_t m = 0; m < counts[w]; ++m) measured.insert(static_cast<std::int64_t>(w));
    }
    CHECK(displayed == measured);
  }
}
