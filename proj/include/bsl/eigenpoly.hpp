#pragma once

// Monic eigenpolynomials of a differential operator, computed two
// independent ways: back substitution through the upper-triangular
// eigenvector system (the production path), and the explicit
// composition-indexed sum (the cross-checking oracle, exponential in n).

#include <vector>

#include "bsl/diffop.hpp"
#include "bsl/matrix.hpp"
#include "bsl/poly.hpp"

namespace bsl {

// Coefficient rows b_{n,i} (0 <= i <= n) of a monic polynomial family,
// b_{n,n} = 1. Reads off the end of a row yield 0.
class CoeffTriangle {
 public:
  explicit CoeffTriangle(std::vector<std::vector<Rational>> rows);

  static CoeffTriangle from_polys(const std::vector<Poly>& family);

  int n_max() const { return static_cast<int>(rows_.size()) - 1; }

  // b_{n,i}; 0 when i > n. IndexError outside 0 <= n <= n_max or i < 0.
  Rational b(int n, int i) const;

  Poly poly(int n) const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

// Leading (n+1) x (n+1) truncation of the upper-triangular matrix whose
// (m, m+k) entry is delta_{m+k}^(k). Eigenvector systems for the monic
// families live inside these truncations.
RationalMatrix m_truncation(const DeltaTable& dt, int n);

// Unique monic degree-n solution of the operator eigen-relation, by back
// substitution. EigenvalueCollision when some lambda_m = lambda_n (m < n)
// makes a pivot vanish.
Poly eigenpoly_backsub(const DiffOperator& op, int n);

// Rows 0..n_max of the backsub family over one shared delta table.
CoeffTriangle eigenpoly_family(const DiffOperator& op, int n_max);

// All ordered tuples of positive integers <= max_part summing to total.
std::vector<std::vector<int>> enumerate_compositions(int total, int max_part);

inline constexpr int kDefaultCompositionCap = 25;

// Same polynomial through the explicit composition-sum formula for each
// coefficient. Term count grows like an N-step Fibonacci sequence, hence
// the cap (CapExceeded beyond it).
Poly eigenpoly_explicit(const DiffOperator& op, int n, int cap = kDefaultCompositionCap);

// Exact check of apply_operator(op, p) == lambda * p.
bool verify_eigen(const DiffOperator& op, const Poly& p, const Rational& lambda);

}  // namespace bsl
