#pragma once

// The difference-operator side of the bispectral pair: banded lower
// Hessenberg matrices with unit superdiagonal, the (p+2)-term recurrence
// they encode, and the inverse problem of fitting a recurrence to a
// given monic family.

#include <vector>

#include "bsl/error.hpp"
#include "bsl/matrix.hpp"
#include "bsl/poly.hpp"

namespace bsl {

// Rows 0..n_max of a (p+2)-banded lower Hessenberg matrix: entries
// alpha_{n,k} for max(0, n-p) <= k <= n, superdiagonal implicitly 1,
// zero elsewhere.
class BandedHessenberg {
 public:
  BandedHessenberg(int p, int n_max);

  int p() const { return p_; }
  int n_max() const { return static_cast<int>(rows_.size()) - 1; }

  // alpha_{n,k}; 0 outside the band. IndexError when n is outside 0..n_max.
  Rational alpha(int n, int k) const;

  // IndexError when (n, k) falls outside the stored band.
  void set_alpha(int n, int k, Rational value);

  // Full matrix entry including the implicit unit superdiagonal.
  Rational entry(int i, int j) const;

  // rows x rows dense truncation.
  RationalMatrix dense(int rows) const;

  friend bool operator==(const BandedHessenberg& a, const BandedHessenberg& b);

 private:
  int band_start(int n) const { return n > p_ ? n - p_ : 0; }

  int p_ = 1;
  std::vector<std::vector<Rational>> rows_;  // row n holds alpha_{n, band_start(n)..n}
};

// P_0 = 1, P_{n+1} = (x - alpha_{n,n}) P_n - sum_{k=n-p}^{n-1} alpha_{n,k} P_k.
// Returns P_0..P_n_max; IndexError when the matrix has too few rows.
std::vector<Poly> polys_from_recurrence(const BandedHessenberg& j, int n_max);

// Row-n action sum_{k=n-p}^{n} alpha_{n,k} P_k + P_{n+1}; equals x P_n
// exactly when the family satisfies the recurrence.
Poly hessenberg_apply(const BandedHessenberg& j, const std::vector<Poly>& polys, int n);

struct FitReport {
  bool ok = false;
  BandedHessenberg matrix;   // rows fitted before any failure
  int fail_n = -1;           // first row whose expansion left a residual
  int fail_k = -1;           // basis index of that residual component
  Rational residual;
};

// Decides whether a monic family (deg P_n = n) satisfies a (p+2)-term
// recurrence for the given p by expanding x P_n - P_{n+1} in the family
// basis; any component below the band is a residual and fails the fit.
FitReport fit_recurrence(const std::vector<Poly>& polys, int p);

}  // namespace bsl
