#include "bsl/diffop.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace bsl {

namespace {
const Poly kZeroPoly{};
}

DiffOperator::DiffOperator(std::vector<Poly> coeffs, std::string name)
    : a_(std::move(coeffs)), name_(std::move(name)) {
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].degree() > static_cast<int>(i)) {
      fail(ErrorCode::DegreeViolation,
           "deg(a_" + std::to_string(i) + ") = " + std::to_string(a_[i].degree()) +
               " exceeds " + std::to_string(i));
    }
  }
  while (a_.size() > 1 && a_.back().is_zero()) a_.pop_back();
  if (a_.size() <= 1) {
    fail(ErrorCode::OrderZero, "no nonzero coefficient a_i with i >= 1");
  }
  if (!a_[0].is_zero()) {
    shift_ = a_[0].coeff(0);
    a_[0] = Poly();
  }
}

DiffOperator DiffOperator::zero() {
  DiffOperator op;
  op.a_ = {Poly()};
  return op;
}

const Poly& DiffOperator::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(a_.size())) return kZeroPoly;
  return a_[static_cast<size_t>(i)];
}

DeltaTable::DeltaTable(const DiffOperator& op, int n_max) {
  if (n_max < 0) fail(ErrorCode::IndexError, "delta_table: n_max < 0");
  const int order = op.order();
  d_.resize(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto& row = d_[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
      Rational sum(0);
      for (int i = k; i <= std::min(n, order); ++i) {
        const Rational a = op.coeff(i).coeff(i - k);
        if (a.is_zero()) continue;
        sum += binomial(n, i) * factorial(i) * a;
      }
      row[static_cast<size_t>(k)] = sum;
    }
  }
}

Rational DeltaTable::operator()(int n, int k) const {
  if (n < 0 || n > n_max()) {
    fail(ErrorCode::IndexError, "delta_table: n = " + std::to_string(n) + " out of range");
  }
  if (k < 0 || k > n) return Rational(0);
  return d_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Spectrum spectrum(const DiffOperator& op, int n_max) {
  if (n_max < 0) fail(ErrorCode::IndexError, "spectrum: n_max < 0");
  Spectrum s;
  s.lambda.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    Rational v(0);
    for (int i = 1; i <= std::min(n, op.order()); ++i) {
      const Rational a = op.leading_coeff(i);
      if (a.is_zero()) continue;
      v += binomial(n, i) * factorial(i) * a;
    }
    s.lambda.push_back(v);
  }
  s.distinct = true;
  std::set<Rational> seen;
  seen.insert(Rational(0));  // lambda_0
  for (int n = 1; n <= n_max; ++n) {
    if (!seen.insert(s.lambda[static_cast<size_t>(n)]).second) {
      s.distinct = false;
      break;
    }
  }
  return s;
}

Poly apply_operator(const DiffOperator& op, const Poly& p) {
  Poly out;
  for (int i = 1; i <= op.order(); ++i) {
    if (op.coeff(i).is_zero()) continue;
    out += op.coeff(i) * p.derivative(i);
  }
  return out;
}

Rational eigenvalue_difference(const DiffOperator& op, int i, int j) {
  if (i < 0 || i >= j) {
    fail(ErrorCode::IndexError,
         "eigenvalue_difference: need 0 <= i < j, got (" + std::to_string(i) + ", " +
             std::to_string(j) + ")");
  }
  Rational sum(0);
  for (int s = 1; s <= std::min(j, op.order()); ++s) {
    const Rational a = op.leading_coeff(s);
    if (a.is_zero()) continue;
    Rational weight(0);
    for (int m = i; m < j; ++m) weight += binomial(m, s - 1);
    sum += weight * factorial(s) * a;
  }
  return sum;
}

}  // namespace bsl
