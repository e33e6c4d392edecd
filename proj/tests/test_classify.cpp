#include <doctest.h>

#include <filesystem>
#include <map>
#include <set>
#include <tuple>

#include "lcdlab/bounds.hpp"
#include "lcdlab/classify.hpp"
#include "oracles.hpp"
#include "subspaces.hpp"

using lcd::ClassifyOptions;
using lcd::CodeDb;
using lcd::ExtendMethod;

namespace {

std::set<std::string> keys(const CodeDb& db) {
  std::set<std::string> out;
  for (const auto& r : db.records) out.insert(r.key.hex());
  return out;
}

std::vector<CodeDb> seed_levels(int n, int k, int d) {
  std::vector<CodeDb> seeds;
  for (int dp = d; dp <= lcd::griesmer_dmax(n - 1, k - 1); ++dp) {
    seeds.push_back(lcd::classify(n - 1, k - 1, dp));
  }
  return seeds;
}

std::filesystem::path scratch_dir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("classify_by_columns examples") {
  CHECK(lcd::classify_by_columns(20, 2, 13).count() == 1);
  CHECK(lcd::classify_by_columns(21, 3, 11).count() == 6);
  const CodeDb db = lcd::classify_by_columns(8, 2, 4);
  CHECK(db.count() == 6);
  CHECK(lcd::check_codedb(db).empty());

  // Multisets of column types {zero, 01, 10, 11} for the six [8,2,4] codes
  // (up to GL(2,2) relabeling): {0,4,4}, {1,3,3}, {1,3,4}, {2,2,2}, {2,2,3},
  // {2,2,4} on the three nonzero types, zero columns filling the rest.
  std::multiset<std::multiset<std::uint32_t>> shapes;
  for (const auto& r : db.records) {
    const auto t = lcd::column_types(r.generator);
    shapes.insert({t.counts[1], t.counts[2], t.counts[3]});
  }
  const std::multiset<std::multiset<std::uint32_t>> expected = {
      {0, 4, 4}, {1, 3, 3}, {1, 3, 4}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4}};
  CHECK(shapes == expected);
}

TEST_CASE("classify_by_columns rejects infeasible sizes") {
  try {
    lcd::classify_by_columns(60, 5, 20);
    FAIL("expected a size error");
  } catch (const lcd::ClassificationSizeError& e) {
    CHECK(e.estimate() > lcd::kDefaultCompositionLimit);
  }
  CHECK_THROWS_AS(lcd::classify_by_columns(10, 7, 2), lcd::ClassificationSizeError);
  CHECK_THROWS_AS(lcd::classify_by_columns(3, 4, 1), std::invalid_argument);
}

TEST_CASE("column classification matches subspace orbits for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= std::min(n, 3); ++k) {
      oracle::SubspaceOrbits orbits(n, k);
      const auto by_d = orbits.orbits_by_min_weight();
      for (int d = 1; d <= n; ++d) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(d);
        CHECK(lcd::classify_by_columns(n, k, d).count() == by_d[static_cast<std::size_t>(d)]);
      }
    }
  }
}

TEST_CASE("canonical keys separate exactly the permutation orbits (n <= 6)") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= std::min(n, 3); ++k) {
      oracle::SubspaceOrbits orbits(n, k);
      std::map<std::uint32_t, std::string> key_of_orbit;
      std::set<std::string> distinct;
      bool consistent = true;
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        const std::string key = lcd::canonical_key(lcd::LinearCode(orbits.generator(i))).hex();
        auto [it, fresh] = key_of_orbit.emplace(orbits.orbit(i), key);
        if (!fresh && it->second != key) consistent = false;
        distinct.insert(key);
      }
      CAPTURE(n);
      CAPTURE(k);
      CHECK(consistent);
      CHECK(distinct.size() == orbits.orbit_count());
    }
  }
}

TEST_CASE("inverse shortening") {
  SUBCASE("[22,4,11] from the [21,3,>=11] levels") {
    const auto seeds = seed_levels(22, 4, 11);
    REQUIRE(seeds.size() == 2);
    CHECK(seeds[0].count() + seeds[1].count() == 7);
    const CodeDb lift = lcd::extend_by_inverse_shortening(seeds, 22, 4, 11);
    const CodeDb coset =
        lcd::extend_by_inverse_shortening(seeds, 22, 4, 11, ExtendMethod::kCosetScan);
    CHECK(lift.count() == 2);
    CHECK(keys(lift) == keys(coset));
    CHECK(lcd::check_codedb(lift).empty());
  }
  SUBCASE("[23,4,12]") {
    CHECK(lcd::extend_by_inverse_shortening(seed_levels(23, 4, 12), 23, 4, 12).count() == 1);
  }
  SUBCASE("degenerate [3,2,2] from [2,1,2]") {
    const CodeDb ext = lcd::extend_by_inverse_shortening(seed_levels(3, 2, 2), 3, 2, 2);
    CHECK(keys(ext) == keys(lcd::classify_by_columns(3, 2, 2)));
    CHECK(ext.count() == 1);
  }
  SUBCASE("missing seed levels are rejected") {
    auto seeds = seed_levels(22, 4, 11);
    seeds.pop_back();
    CHECK_THROWS_AS(lcd::extend_by_inverse_shortening(seeds, 22, 4, 11), std::invalid_argument);
  }
}

TEST_CASE("both extension routes agree on small levels") {
  for (int n = 4; n <= 13; ++n) {
    for (int k = 2; k <= std::min(n, 4); ++k) {
      for (int d = 2; d <= lcd::griesmer_dmax(n, k); ++d) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(d);
        const auto seeds = seed_levels(n, k, d);
        const auto lift = lcd::extend_by_inverse_shortening(seeds, n, k, d);
        const auto coset =
            lcd::extend_by_inverse_shortening(seeds, n, k, d, ExtendMethod::kCosetScan);
        CHECK(keys(lift) == keys(coset));
      }
    }
  }
}

TEST_CASE("pipeline agrees with direct column classification") {
  ClassifyOptions deep;
  deep.columns_max_k = 1;
  for (int n = 3; n <= 14; ++n) {
    for (int k = 2; k <= 3; ++k) {
      for (int d = 2; d <= lcd::griesmer_dmax(n, k); ++d) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(d);
        CHECK(keys(lcd::classify(n, k, d, deep)) == keys(lcd::classify_by_columns(n, k, d)));
      }
    }
  }
  for (int n = 5; n <= 9; ++n) {
    for (int d = 2; d <= lcd::griesmer_dmax(n, 4); ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(keys(lcd::classify(n, 4, d)) == keys(lcd::classify_by_columns(n, 4, d)));
    }
  }
}

TEST_CASE("classified codes shorten into the seed levels") {
  const auto seeds = seed_levels(22, 4, 11);
  std::set<std::string> seed_keys;
  for (const auto& s : seeds) {
    for (const auto& k : keys(s)) seed_keys.insert(k);
  }
  for (const auto& r : lcd::classify(22, 4, 11).records) {
    const lcd::LinearCode code(r.generator);
    std::size_t dropping = 0;
    for (std::size_t i = 0; i < code.length(); ++i) {
      if (r.generator.column_is_zero(i)) continue;
      ++dropping;
      CHECK(seed_keys.count(lcd::canonical_key(lcd::shorten(code, i)).hex()) == 1);
    }
    CHECK(dropping >= 4);
  }
}

TEST_CASE("persistence, resume and determinism") {
  const auto dir1 = scratch_dir("lcdlab_test_classify_1");
  const auto dir2 = scratch_dir("lcdlab_test_classify_2");
  ClassifyOptions one;
  one.db_dir = dir1;
  ClassifyOptions many;
  many.db_dir = dir2;
  many.jobs = 4;
  const CodeDb a = lcd::classify(25, 5, 12, one);
  const CodeDb b = lcd::classify(25, 5, 12, many);
  CHECK(a.count() == 8);
  CHECK(lcd::emit_codedb(a) == lcd::emit_codedb(b));

  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir1)) {
    ++files;
    const auto twin = dir2 / entry.path().filename();
    REQUIRE(std::filesystem::exists(twin));
    CHECK(lcd::emit_codedb(lcd::read_codedb(entry.path())) ==
          lcd::emit_codedb(lcd::read_codedb(twin)));
  }
  CHECK(files > 5);

  int loaded = 0, computed = 0;
  one.on_level = [&](const CodeDb&, bool from_disk) { (from_disk ? loaded : computed) += 1; };
  CHECK(lcd::classify(25, 5, 12, one) == a);
  CHECK(loaded == 1);
  CHECK(computed == 0);

  std::filesystem::remove_all(dir1);
  std::filesystem::remove_all(dir2);
}

TEST_CASE("census and d_all") {
  lcd::CodeDb full{4, 4, 1, "columns", {}};
  const lcd::LinearCode space(lcd::BitMatrix::identity(4));
  full.records.push_back({lcd::canonical_key(space), space.generator()});
  const auto c = lcd::lcd_census(full);
  CHECK(c.total == 1);
  CHECK(c.lcd == 1);

  for (const auto& [n, k, d] : {std::tuple{22, 4, 11}, std::tuple{25, 5, 12}}) {
    const auto census = lcd::lcd_census(lcd::classify(n, k, d));
    CHECK(census.lcd == 0);
    CHECK(census.lcd_keys.empty());
  }
  CHECK(lcd::d_all(21, 3) == 12);
  CHECK(lcd::d_all(20, 2) == 13);
  CHECK(lcd::classify(22, 4, 12).count() == 0);
}
