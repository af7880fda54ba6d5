#pragma once

// Exact rational scalar used throughout the library. Values are kept
// canonical at all times: denominator > 0 and gcd(|num|, den) = 1.
// GMP does the bignum work; this wrapper flattens gmpxx expression
// templates into a plain value type so it can serve as an Eigen scalar.

#include <gmpxx.h>

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace bsl {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // implicit: Scalar(0), Scalar(1) must work
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Parses the canonical string form "p/q" (optional sign on p, q > 0)
  // or a bare integer "p". Throws Error(ParseError) on anything else.
  static Rational parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Canonical string form: "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a);

 private:
  mpq_class v_;
};

inline std::string to_string(const Rational& a) { return a.str(); }

// C(n, k) as an exact rational; 0 outside 0 <= k <= n (the standing
// convention for out-of-range binomials in all formulas here).
Rational binomial(long n, long k);

// n! for n >= 0.
Rational factorial(long n);

// (-1)^k without touching floating point.
inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace bsl

namespace Eigen {

template <>
struct NumTraits<bsl::Rational> : GenericNumTraits<bsl::Rational> {
  using Real = bsl::Rational;
  using NonInteger = bsl::Rational;
  using Nested = bsl::Rational;
  using Literal = bsl::Rational;

  static inline Real epsilon() { return bsl::Rational(0); }
  static inline Real dummy_precision() { return bsl::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100,
  };
};

}  // namespace Eigen
