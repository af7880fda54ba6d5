#include "bsl/bispectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bsl {

CoeffTriangle transform_coeffs(const CoeffTriangle& b, const GammaSequence& gammas) {
  if (gammas.size() < b.n_max()) {
    fail(ErrorCode::DimensionMismatch,
         "transform_coeffs: need gamma_1..gamma_" + std::to_string(b.n_max()));
  }
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<size_t>(b.n_max()) + 1);
  for (int n = 0; n <= b.n_max(); ++n) {
    std::vector<Rational> row(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      row[static_cast<size_t>(i)] = b.b(n, i);
      if (n >= 1) row[static_cast<size_t>(i)] += gammas.gamma(n) * b.b(n - 1, i);
    }
    rows.push_back(std::move(row));
  }
  return CoeffTriangle(std::move(rows));
}

namespace {

void check_nk(const CoeffTriangle& t, int n, int k) {
  if (k < 1 || k > n || n > t.n_max()) {
    fail(ErrorCode::IndexError,
         "determinant indices (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) +
             ") out of range");
  }
}

// Rows 1.. of G and Delta coincide: entry (i, j) = q_{n-k+j+1, n-k+i}
// (0-indexed), which puts units on the subdiagonal since q_{m,m} = 1.
void fill_lower_rows(RationalMatrix& m, const CoeffTriangle& q, int n, int k) {
  for (int i = 1; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m(i, j) = q.b(n - k + j + 1, n - k + i);
    }
  }
}

}  // namespace

Rational det_G(const CoeffTriangle& b, const std::vector<Rational>& lambdas, int n, int k) {
  check_nk(b, n, k);
  if (static_cast<int>(lambdas.size()) <= n) {
    fail(ErrorCode::IndexError, "det_G: eigenvalue list too short");
  }
  RationalMatrix m(k, k);
  for (int j = 0; j < k; ++j) {
    m(0, j) = (lambdas[static_cast<size_t>(n - k)] - lambdas[static_cast<size_t>(n - k + j + 1)]) *
              b.b(n - k + j + 1, n - k);
  }
  fill_lower_rows(m, b, n, k);
  return determinant(m);
}

Rational det_Delta(const CoeffTriangle& q, int n, int k, int s) {
  check_nk(q, n, k);
  if (s < 1) fail(ErrorCode::IndexError, "det_Delta: s must be >= 1");
  RationalMatrix m(k, k);
  Rational weight(0);
  for (int j = 0; j < k; ++j) {
    weight += binomial(n - k + j, s - 1);
    m(0, j) = weight * q.b(n - k + j + 1, n - k);
  }
  fill_lower_rows(m, q, n, k);
  return determinant(m);
}

Rational det_E(const CoeffTriangle& q, int n, int k, int s) {
  check_nk(q, n, k);
  if (s < 0 || s > k - 1) {
    fail(ErrorCode::IndexError, "det_E: s = " + std::to_string(s) + " outside 0..k-1");
  }
  const int d = k - s - 1;
  if (d == 0) return Rational(1);
  RationalMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m(i, j) = q.b(n - k + s + 2 + j, n - k + s + 1 + i);
    }
  }
  return determinant(m);
}

Rational necessary_condition(const DiffOperator& op, const CoeffTriangle& b,
                             const GammaSequence& gammas, int n, int k) {
  check_nk(b, n, k);
  if (gammas.size() < n) {
    fail(ErrorCode::DimensionMismatch,
         "necessary_condition: need gamma_1..gamma_" + std::to_string(n));
  }
  Rational total(0);
  for (int j = 0; j < k; ++j) {
    const int m = n - k + j;
    const Rational coeff = b.b(m, n - k);
    if (coeff.is_zero()) continue;

    // The bracketed eigenvalue gap, summed to min(m+1, N); it must agree
    // with the cumulative-binomial route, which stays the source of truth.
    Rational bracket(0);
    for (int s = 1; s <= std::min(m + 1, op.order()); ++s) {
      bracket += binomial(m, s - 1) * factorial(s) * op.leading_coeff(s);
    }
    if (bracket != eigenvalue_difference(op, m, m + 1)) {
      throw std::logic_error("necessary_condition: bracket identity violated");
    }

    Rational inner(0);
    Rational gamma_prod(1);
    for (int r = 1; r <= k - j; ++r) {
      gamma_prod *= gammas.gamma(m + r);
      inner += gamma_prod * det_E(b, n, k, j + r - 1);
    }
    total += Rational(parity_sign(j)) * bracket * coeff * inner;
  }
  return total;
}

}  // namespace bsl
