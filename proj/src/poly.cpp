#include "lcdlab/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace lcd {

namespace {

void append_term(std::string& s, std::int64_t c, std::size_t power) {
  if (c == 0) return;
  if (c < 0) {
    s += '-';
  } else if (!s.empty()) {
    s += '+';
  }
  const std::int64_t mag = c < 0 ? -c : c;
  if (power == 0 || mag != 1) s += std::to_string(mag);
  if (power >= 1) s += 't';
  if (power >= 2) s += '^' + std::to_string(power);
}

// Minimal exact rational for interpolation.
struct Rational {
  __int128 num = 0;
  __int128 den = 1;

  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 r = a % b;
      a = b;
      b = r;
    }
    return a;
  }
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Rational operator+(Rational a, Rational b) {
    Rational r{a.num * b.den + b.num * a.den, a.den * b.den};
    r.normalize();
    return r;
  }
  friend Rational operator*(Rational a, Rational b) {
    Rational r{a.num * b.num, a.den * b.den};
    r.normalize();
    return r;
  }
};

}  // namespace

std::string AffineForm::to_string() const {
  std::string s;
  append_term(s, slope, 1);
  append_term(s, constant, 0);
  return s.empty() ? "0" : s;
}

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPoly::operator()(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly IntPoly::operator-() const {
  std::vector<std::int64_t> c(coeffs_);
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::exact_div(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw std::domain_error("exact_div: inexact division");
  std::vector<std::int64_t> rem(coeffs_);
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  const std::int64_t lead = divisor.coeffs_.back();
  std::vector<std::int64_t> q(rem.size() - dd, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const std::int64_t top = rem[i + dd];
    if (top % lead != 0) throw std::domain_error("exact_div: inexact division");
    q[i] = top / lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q[i] * divisor.coeffs_[j];
  }
  for (std::int64_t r : rem) {
    if (r != 0) throw std::domain_error("exact_div: inexact division");
  }
  return IntPoly(std::move(q));
}

bool IntPoly::is_one_mod2() const {
  if (coeffs_.empty() || (coeffs_[0] & 1) == 0) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] & 1) return false;
  }
  return true;
}

std::string IntPoly::to_string() const {
  std::string s;
  for (std::size_t p = coeffs_.size(); p-- > 0;) append_term(s, coeffs_[p], p);
  return s.empty() ? "0" : s;
}

IntPoly interpolate_at_naturals(const std::vector<std::int64_t>& values) {
  // Newton forward differences: p(t) = sum_j D^j p(0) * C(t, j), then expand
  // each binomial into monomials.
  const std::size_t m = values.size();
  std::vector<__int128> diff(values.begin(), values.end());
  std::vector<__int128> leading(m);
  for (std::size_t j = 0; j < m; ++j) {
    leading[j] = diff[0];
    for (std::size_t i = 0; i + 1 < m - j; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  std::vector<Rational> coeffs(m);
  // falling holds t (t-1) ... (t-j+1) in monomial form.
  std::vector<__int128> falling{1};
  __int128 factorial = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (j > 0) {
      factorial *= static_cast<__int128>(j);
      std::vector<__int128> next(falling.size() + 1, 0);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * static_cast<__int128>(j - 1);
      }
      falling = std::move(next);
    }
    for (std::size_t i = 0; i < falling.size(); ++i) {
      Rational term{leading[j] * falling[i], factorial};
      term.normalize();
      coeffs[i] = coeffs[i] + term;
    }
  }
  std::vector<std::int64_t> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs[i].den != 1) throw std::domain_error("interpolation has non-integer coefficients");
    out[i] = static_cast<std::int64_t>(coeffs[i].num);
  }
  return IntPoly(std::move(out));
}

}  // namespace lcd
