#pragma once

// Parametric LCD code families G(a) = [I_k | M(a)] for k = 4, 5. Block i of
// M(a) repeats the column type column_order(k)[i] exactly a_i times. The
// tabulated a-vectors are affine in t, which makes the weight enumerator and
// the Gram determinant symbolic in t.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcdlab/code.hpp"
#include "lcdlab/poly.hpp"

namespace lcd {

using AffineVec = std::vector<AffineForm>;

// Nonzero vectors of F2^k in block order (bit i = row i). Only k = 4 and
// k = 5 ship.
std::span<const std::uint32_t> column_order(int k);

// [I_k | M(a)]. Throws std::invalid_argument for unsupported k, a wrong
// length, or a negative entry.
BitMatrix build_generator(int k, std::span<const std::int64_t> a);

struct FamilyRow {
  int k = 0;
  // n = (2^k - 1) t + s.
  int s = 0;
  // a_i = t + offsets[i].
  std::vector<int> offsets;
  // Claimed minimum weight is 2^(k-1) t + claimed_d_offset.
  int claimed_d_offset = 0;
  // Least t for which the family is claimed.
  int stated_t_min = 0;
};

std::span<const FamilyRow> family_rows(int k);
// Throws std::invalid_argument if (k, s) is not tabulated.
const FamilyRow& family_row(int k, int s);
AffineVec family_affine_vector(int k, int s);
// Least t >= 0 making every a_i nonnegative.
std::int64_t family_t_min(int k, int s);

class FamilyRangeError : public std::out_of_range {
 public:
  FamilyRangeError(std::string what, std::size_t entry, std::int64_t value)
      : std::out_of_range(std::move(what)), entry_(entry), value_(value) {}
  // 1-based index of the first negative entry of a, and its value.
  std::size_t entry() const { return entry_; }
  std::int64_t value() const { return value_; }

 private:
  std::size_t entry_;
  std::int64_t value_;
};

// Throws FamilyRangeError when t < family_t_min(k, s).
std::vector<std::int64_t> family_a_vector(int k, int s, std::int64_t t);

struct FamilyClaim {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  bool is_lcd = true;
};

FamilyClaim family_claim(int k, int s, std::int64_t t);

struct FamilyVerdict {
  int s = 0;
  std::int64_t t = 0;
  FamilyClaim claimed;
  LinearCode code;
  std::size_t n = 0;
  std::size_t d = 0;
  HullInfo hull;
  bool match = false;
};

FamilyVerdict family_code(int k, int s, std::int64_t t);

struct SymbolicTerm {
  std::uint64_t multiplicity = 0;
  AffineForm exponent;

  friend bool operator==(const SymbolicTerm&, const SymbolicTerm&) = default;
};

// Weight enumerator with exponents affine in t. The implicit constant term 1
// (the zero codeword) is not stored; terms are sorted by exponent and have
// distinct exponents.
struct SymbolicWE {
  std::vector<SymbolicTerm> terms;

  std::uint64_t nonzero_codewords() const;
  WeightEnumerator instantiate(std::int64_t t, std::size_t n) const;
  // "1+8y^{8t}+6y^{8t+2}+y^{8t+4}"
  std::string to_string() const;

  friend bool operator==(const SymbolicWE&, const SymbolicWE&) = default;
};

SymbolicWE symbolic_weight_enumerator(int k, const AffineVec& av);

// Entries b_{i,j}(t) = delta_{ij} + sum_l av_l(t) v_l[i] v_l[j], row-major.
std::vector<AffineForm> symbolic_gram(int k, const AffineVec& av);

// det of the symbolic Gram matrix over Z[t], computed two ways.
IntPoly gram_det_by_elimination(int k, const AffineVec& av);
IntPoly gram_det_by_interpolation(int k, const AffineVec& av);
// Runs both routes; throws std::logic_error if they disagree.
IntPoly symbolic_gram_det(int k, const AffineVec& av);

}  // namespace lcd
