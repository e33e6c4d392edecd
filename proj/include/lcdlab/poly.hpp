#pragma once

// Exact arithmetic in Z[t]: affine forms c0 + c1*t and general integer
// polynomials.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lcd {

struct AffineForm {
  std::int64_t constant = 0;
  std::int64_t slope = 0;

  std::int64_t operator()(std::int64_t t) const { return constant + slope * t; }

  friend AffineForm operator+(AffineForm a, AffineForm b) {
    return {a.constant + b.constant, a.slope + b.slope};
  }
  friend AffineForm operator*(std::int64_t s, AffineForm a) {
    return {s * a.constant, s * a.slope};
  }
  // Ordered as polynomials for large t: by slope, then constant.
  friend std::strong_ordering operator<=>(const AffineForm& a, const AffineForm& b) {
    if (auto c = a.slope <=> b.slope; c != 0) return c;
    return a.constant <=> b.constant;
  }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;

  // "8t+2", "16t-1", "3", "t"
  std::string to_string() const;
};

class IntPoly {
 public:
  IntPoly() = default;
  // coeffs[i] multiplies t^i; trailing zeros are trimmed.
  explicit IntPoly(std::vector<std::int64_t> coeffs);
  static IntPoly constant(std::int64_t c) { return IntPoly({c}); }
  static IntPoly from_affine(AffineForm a) { return IntPoly({a.constant, a.slope}); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  std::int64_t operator()(std::int64_t t) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // Quotient of an exact division. Throws std::domain_error if the divisor
  // is zero or does not divide this polynomial over Z.
  IntPoly exact_div(const IntPoly& divisor) const;

  // True iff the polynomial is congruent to 1 modulo 2 coefficientwise:
  // odd constant term, all other coefficients even.
  bool is_one_mod2() const;

  // "1280t^4+512t^3-96t^2-32t+1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

// The unique polynomial of degree < values.size() with p(i) = values[i] for
// i = 0, 1, ...; throws std::domain_error if its coefficients are not all
// integers.
IntPoly interpolate_at_naturals(const std::vector<std::int64_t>& values);

}  // namespace lcd
