#pragma once

// Dense univariate polynomial over Rational, coefficients stored in
// ascending powers. The zero polynomial is the empty coefficient list;
// otherwise the leading coefficient is nonzero.

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bsl/rational.hpp"

namespace bsl {

class Poly {
 public:
  Poly() = default;  // zero polynomial
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(Rational value);
  static Poly x() { return monomial(1); }
  static Poly monomial(int degree, Rational coeff = Rational(1));

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of x^j; 0 beyond the stored length.
  Rational coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(j)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly derivative(int order = 1) const;

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
  friend Poly operator-(const Poly& a) { return Rational(-1) * a; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Human-readable form, descending powers: "x^3 - 3/2 x".
  std::string str(std::string_view var = "x") const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace bsl
