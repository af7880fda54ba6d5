#pragma once

// UL (Geronimus) factorization of J - CI for tridiagonal J, cyclic
// recombination of bidiagonal factors, and conjugation by the unit lower
// bidiagonal transform T carrying a gamma sequence on its subdiagonal.
// The inverse transform is never materialized: a band recursion produces
// T J T^{-1} entry by entry.

#include <optional>
#include <vector>

#include "bsl/error.hpp"
#include "bsl/matrix.hpp"
#include "bsl/recurrence.hpp"

namespace bsl {

// gamma_1, gamma_2, ... (1-based access).
class GammaSequence {
 public:
  GammaSequence() = default;
  explicit GammaSequence(std::vector<Rational> gammas) : g_(std::move(gammas)) {}

  int size() const { return static_cast<int>(g_.size()); }

  // IndexError outside 1..size().
  const Rational& gamma(int i) const;

  const std::vector<Rational>& values() const { return g_; }

 private:
  std::vector<Rational> g_;
};

struct BidiagonalMatrix {
  enum class Kind { Upper, Lower };

  Kind kind = Kind::Lower;
  std::vector<Rational> diag;  // entries (i, i)
  std::vector<Rational> off;   // (i, i+1) for Upper, (i+1, i) for Lower; size() - 1 entries

  int size() const { return static_cast<int>(diag.size()); }

  // rows x rows dense truncation; IndexError when rows exceeds size().
  RationalMatrix dense(int rows) const;
};

struct BidiagonalPair {
  BidiagonalMatrix upper;  // diagonal u_0, u_1, ...; superdiagonal all 1
  BidiagonalMatrix lower;  // unit diagonal; subdiagonal l_1, l_2, ...
  // Rows of the truncation on which CI + U L reproduces J exactly.
  int trusted_rows = 0;
};

// Sequential solve of J - CI = UL for tridiagonal J given the free
// parameter l_1:
//   u_0 = (alpha_{0,0} - C) - l_1,
//   u_i = alpha_{i,i-1} / l_i,   l_{i+1} = (alpha_{i,i} - C) - u_i.
// SingularPivot when l_i = 0 meets alpha_{i,i-1} != 0; the 0/0 step takes
// u_i = 0. With check_truncations set, the truncation determinants
// det(C I_m - J_m), m <= n_max, are required to be nonzero first
// (SingularTruncation otherwise).
BidiagonalPair ul_factorize(const BandedHessenberg& j, const Rational& c, const Rational& l1,
                            int n_max, bool check_truncations = false);

// CI + L^(p-s+1)...L^(p) U L^(1)...L^(p-s) for factors = [U, L^(1), ..., L^(p)].
// All factors must share one truncation size with at least factors.size()
// rows of padding beyond the requested rows (PaddingInsufficient).
BandedHessenberg geronimus_transform(const std::vector<BidiagonalMatrix>& factors,
                                     const Rational& c, int s, int rows);

// All entries of T J T^{-1} for tridiagonal J through the band recursion
//   d_{m,r} = gamma_m alpha_{m-1,r} + alpha_{m,r} - gamma_{r+1} d_{m,r+1},
// d_{r,r+1} = 1. Returns the (n_max+1) x (n_max+1) lower Hessenberg
// truncation (unit superdiagonal, zero above). Needs gamma_1..gamma_{n_max+1}.
RationalMatrix conjugate_by_transform(const BandedHessenberg& j, const GammaSequence& gammas,
                                      int n_max);

}  // namespace bsl
