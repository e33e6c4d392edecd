#pragma once

// Published tables used as verification targets: symbolic weight enumerators
// and Gram determinants of the k = 4, 5 families, octal and binary generator
// fixtures, and classification counts.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcdlab/families.hpp"
#include "lcdlab/poly.hpp"

namespace lcd::ref {

// Throws std::invalid_argument if (k, s) is not tabulated.
SymbolicWE weight_enumerator(int k, int s);
IntPoly gram_det(int k, int s);

enum class FixtureTable { kDim4, kDim5, kMTable };

const char* to_string(FixtureTable table);

struct OctalFixture {
  FixtureTable table;
  int n = 0;
  int k = 0;
  int index = 0;
  std::string text;
  int d = 0;

  std::string label() const;  // "M_{30,2}"
};

std::span<const OctalFixture> octal_fixtures(FixtureTable table);

struct BinaryFixture {
  int n = 0;
  int k = 5;
  std::vector<std::string> rows;
  int d = 0;

  std::string label() const;  // "M_19"
};

std::span<const BinaryFixture> binary_fixtures();

// One cell of a classification-count table: the number of inequivalent
// unrestricted [n,k,d] codes, with the table column (col_n, col_d) it sits in.
struct CountCell {
  int table_k = 0;
  int col_n = 0;
  int col_d = 0;
  int n = 0;
  int k = 0;
  int d = 0;
  std::uint64_t count = 0;

  std::string label() const;  // "N_{21,3,11} (col 22,11)"
};

std::span<const CountCell> count_cells(int table_k);

}  // namespace lcd::ref
