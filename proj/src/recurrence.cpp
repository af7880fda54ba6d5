#include "bsl/recurrence.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace bsl {

BandedHessenberg::BandedHessenberg(int p, int n_max) : p_(p) {
  if (p < 1) fail(ErrorCode::IndexError, "BandedHessenberg: p must be positive");
  if (n_max < 0) fail(ErrorCode::IndexError, "BandedHessenberg: n_max < 0");
  rows_.resize(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    rows_[static_cast<size_t>(n)].assign(static_cast<size_t>(n - band_start(n)) + 1, Rational(0));
  }
}

Rational BandedHessenberg::alpha(int n, int k) const {
  if (n < 0 || n > n_max()) {
    fail(ErrorCode::IndexError, "alpha: row " + std::to_string(n) + " out of range");
  }
  if (k < band_start(n) || k > n) return Rational(0);
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k - band_start(n))];
}

void BandedHessenberg::set_alpha(int n, int k, Rational value) {
  if (n < 0 || n > n_max() || k < band_start(n) || k > n) {
    fail(ErrorCode::IndexError,
         "set_alpha: (" + std::to_string(n) + ", " + std::to_string(k) + ") outside the band");
  }
  rows_[static_cast<size_t>(n)][static_cast<size_t>(k - band_start(n))] = std::move(value);
}

Rational BandedHessenberg::entry(int i, int j) const {
  if (i < 0 || i > n_max() || j < 0) {
    fail(ErrorCode::IndexError, "entry: index out of range");
  }
  if (j == i + 1) return Rational(1);
  if (j > i + 1) return Rational(0);
  return alpha(i, j);
}

RationalMatrix BandedHessenberg::dense(int rows) const {
  if (rows < 1 || rows - 1 > n_max()) {
    fail(ErrorCode::IndexError, "dense: truncation size out of range");
  }
  RationalMatrix m = RationalMatrix::Zero(rows, rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < rows; ++j) m(i, j) = entry(i, j);
  }
  return m;
}

bool operator==(const BandedHessenberg& a, const BandedHessenberg& b) {
  return a.p_ == b.p_ && a.rows_ == b.rows_;
}

std::vector<Poly> polys_from_recurrence(const BandedHessenberg& j, int n_max) {
  if (n_max < 0) fail(ErrorCode::IndexError, "polys_from_recurrence: n_max < 0");
  if (n_max - 1 > j.n_max()) {
    fail(ErrorCode::IndexError, "polys_from_recurrence: recurrence data exhausted at row " +
                                    std::to_string(j.n_max()));
  }
  std::vector<Poly> family;
  family.reserve(static_cast<size_t>(n_max) + 1);
  family.push_back(Poly::constant(Rational(1)));
  for (int n = 0; n < n_max; ++n) {
    Poly next = (Poly::x() - Poly::constant(j.alpha(n, n))) * family[static_cast<size_t>(n)];
    for (int k = std::max(0, n - j.p()); k < n; ++k) {
      const Rational a = j.alpha(n, k);
      if (a.is_zero()) continue;
      next -= a * family[static_cast<size_t>(k)];
    }
    family.push_back(std::move(next));
  }
  return family;
}

Poly hessenberg_apply(const BandedHessenberg& j, const std::vector<Poly>& polys, int n) {
  if (n < 0 || n > j.n_max() || static_cast<size_t>(n) + 1 >= polys.size()) {
    fail(ErrorCode::IndexError, "hessenberg_apply: need polynomials through index n+1");
  }
  Poly out = polys[static_cast<size_t>(n) + 1];
  for (int k = std::max(0, n - j.p()); k <= n; ++k) {
    const Rational a = j.alpha(n, k);
    if (a.is_zero()) continue;
    out += a * polys[static_cast<size_t>(k)];
  }
  return out;
}

FitReport fit_recurrence(const std::vector<Poly>& polys, int p) {
  if (p < 1) fail(ErrorCode::IndexError, "fit_recurrence: p must be positive");
  if (polys.size() < static_cast<size_t>(p) + 3) {
    fail(ErrorCode::DimensionMismatch,
         "fit_recurrence: need at least p + 3 polynomials, got " + std::to_string(polys.size()));
  }
  for (size_t n = 0; n < polys.size(); ++n) {
    if (polys[n].degree() != static_cast<int>(n) ||
        polys[n].coeff(static_cast<int>(n)) != Rational(1)) {
      fail(ErrorCode::DimensionMismatch,
           "fit_recurrence: member " + std::to_string(n) + " is not monic of degree " +
               std::to_string(n));
    }
  }

  const int rows = static_cast<int>(polys.size()) - 2;
  FitReport report{true, BandedHessenberg(p, rows), -1, -1, Rational(0)};
  for (int n = 0; n <= rows; ++n) {
    // Expand x P_n - P_{n+1} in the family basis by repeated leading-term
    // elimination against the monic members.
    Poly r = Poly::x() * polys[static_cast<size_t>(n)] - polys[static_cast<size_t>(n) + 1];
    for (int k = n; k >= 0; --k) {
      const Rational c = r.coeff(k);
      if (!c.is_zero()) {
        r -= c * polys[static_cast<size_t>(k)];
        if (k >= std::max(0, n - p)) {
          report.matrix.set_alpha(n, k, c);
        } else {
          report.ok = false;
          report.fail_n = n;
          report.fail_k = k;
          report.residual = c;
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace bsl
