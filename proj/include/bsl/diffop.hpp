#pragma once

// Finite-order differential operator sum_i a_i(x) d^i/dx^i acting on
// polynomials, with the standing restrictions deg(a_i) <= i and a_0 = 0
// (a nonzero constant a_0 is subtracted away at construction and kept as
// metadata). The delta table derived from the coefficients drives both
// the eigenvalue sequence and the triangular eigenvector systems.

#include <optional>
#include <string>
#include <vector>

#include "bsl/error.hpp"
#include "bsl/poly.hpp"

namespace bsl {

class DiffOperator {
 public:
  // Validates and normalizes; a = {a_0, a_1, ..., a_N} in ascending order.
  // Throws DegreeViolation when deg(a_i) > i, OrderZero when every a_i
  // with i >= 1 vanishes.
  explicit DiffOperator(std::vector<Poly> coeffs, std::string name = {});

  // Degenerate operator with no terms. Not constructible through the
  // validating path; delta tables and spectra of it are identically zero.
  static DiffOperator zero();

  int order() const { return static_cast<int>(a_.size()) - 1; }

  // a_i; the zero polynomial for i > order (and for i = 0 post-normalization).
  const Poly& coeff(int i) const;

  // Leading coefficient a_{i,i}; 0 beyond the order.
  Rational leading_coeff(int i) const { return coeff(i).coeff(i); }

  // Constant removed from a_0 during normalization, if any.
  const std::optional<Rational>& constant_shift() const { return shift_; }

  const std::string& name() const { return name_; }

 private:
  DiffOperator() = default;

  std::vector<Poly> a_;
  std::optional<Rational> shift_;
  std::string name_;
};

// Triangle of the binomial-weighted coefficient sums
//   delta_n^(k) = sum_{i=k}^{n} C(n,i) i! a_{i,i-k},  0 <= k <= n <= n_max,
// with lambda_n = delta_n^(0).
class DeltaTable {
 public:
  DeltaTable(const DiffOperator& op, int n_max);

  int n_max() const { return static_cast<int>(d_.size()) - 1; }

  // delta_n^(k); 0 for k > n. IndexError outside 0 <= n <= n_max.
  Rational operator()(int n, int k) const;

  Rational lambda(int n) const { return (*this)(n, 0); }

 private:
  std::vector<std::vector<Rational>> d_;
};

inline DeltaTable delta_table(const DiffOperator& op, int n_max) { return DeltaTable(op, n_max); }

struct Spectrum {
  std::vector<Rational> lambda;  // lambda_0..lambda_n_max
  bool distinct = false;         // lambda_1.. pairwise distinct and all nonzero
};

// Eigenvalues lambda_n = sum_{i=1}^{min(n,N)} C(n,i) i! a_{i,i} together
// with the distinctness verdict solvers require.
Spectrum spectrum(const DiffOperator& op, int n_max);

// sum_{i>=1} a_i(x) (d^i p / dx^i), exact.
Poly apply_operator(const DiffOperator& op, const Poly& p);

// lambda_j - lambda_i evaluated through the cumulative binomial identity
//   sum_{s>=1} [C(i,s-1)+...+C(j-1,s-1)] s! a_{s,s},
// without forming either eigenvalue. Requires 0 <= i < j.
Rational eigenvalue_difference(const DiffOperator& op, int i, int j);

}  // namespace bsl
