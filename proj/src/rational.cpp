#include "bsl/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "bsl/error.hpp"

namespace bsl {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational literal");

  std::string_view num = s;
  std::string_view den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }

  bool negative = false;
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    fail(ErrorCode::ParseError, "malformed rational \"" + std::string(text) + "\"");
  }

  mpz_class numerator{std::string(digits)};
  if (negative) numerator = -numerator;

  mpq_class v;
  if (den.empty() && s.find('/') == std::string_view::npos) {
    v = mpq_class(numerator);
  } else {
    if (!all_digits(den)) {
      fail(ErrorCode::ParseError, "malformed rational \"" + std::string(text) + "\"");
    }
    mpz_class d{std::string(den)};
    if (sgn(d) == 0) {
      fail(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
    }
    v = mpq_class(numerator, d);
    v.canonicalize();
  }
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

}  // namespace bsl
