#include "bsl/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace bsl {

Poly Poly::constant(Rational value) {
  if (value.is_zero()) return Poly();
  return Poly(std::vector<Rational>{std::move(value)});
}

Poly Poly::monomial(int degree, Rational coeff) {
  if (degree < 0) throw std::domain_error("Poly::monomial: negative degree");
  if (coeff.is_zero()) return Poly();
  std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
  c.back() = std::move(coeff);
  return Poly(std::move(c));
}

Poly Poly::derivative(int order) const {
  if (order < 0) throw std::domain_error("Poly::derivative: negative order");
  if (order == 0) return *this;
  if (order > degree()) return Poly();
  std::vector<Rational> out(c_.size() - static_cast<size_t>(order));
  for (size_t j = 0; j < out.size(); ++j) {
    // falling factorial (j+order)(j+order-1)...(j+1)
    Rational f(1);
    for (size_t t = j + 1; t <= j + static_cast<size_t>(order); ++t) {
      f *= Rational(static_cast<long>(t));
    }
    out[j] = f * c_[j + static_cast<size_t>(order)];
  }
  return Poly(std::move(out));
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(out));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s.is_zero()) return Poly();
  std::vector<Rational> out(p.c_);
  for (auto& c : out) c *= s;
  return Poly(std::move(out));
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = degree(); j >= 0; --j) {
    const Rational c = coeff(j);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = (mag == Rational(1));
    if (j == 0) {
      out += mag.str();
    } else {
      if (!unit) {
        out += mag.str();
        out += " ";
      }
      out += var;
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace bsl
