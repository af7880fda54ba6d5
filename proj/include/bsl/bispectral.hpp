#pragma once

// Machinery for testing linear transformations P_n + gamma_n P_{n-1} of an
// eigenpolynomial family: the coefficient transform, the structured
// determinant families G, Delta, E built over a coefficient triangle, and
// the necessary condition a transformed family must satisfy to be the
// eigenpolynomials of any finite-order operator.

#include <vector>

#include "bsl/darboux.hpp"
#include "bsl/diffop.hpp"
#include "bsl/eigenpoly.hpp"

namespace bsl {

// Triangle of the transformed family: b'_{n,i} = b_{n,i} + gamma_n b_{n-1,i}.
CoeffTriangle transform_coeffs(const CoeffTriangle& b, const GammaSequence& gammas);

// k x k determinant whose first row is (lambda_{n-k} - lambda_{n-k+j}) b_{n-k+j,n-k}
// and whose lower rows carry the triangle columns with unit subdiagonal.
// Equals (-1)^k delta_n^(k) for an eigenpolynomial triangle.
Rational det_G(const CoeffTriangle& b, const std::vector<Rational>& lambdas, int n, int k);

// k x k determinant with cumulative binomial weights
// [C(n-k,s-1) + ... + C(n-k+j-1,s-1)] q_{n-k+j,n-k} on the first row.
Rational det_Delta(const CoeffTriangle& q, int n, int k, int s);

// Determinant of order k - s - 1 over columns n-k+s+2..n of the triangle;
// 1 when s = k - 1 (empty determinant).
Rational det_E(const CoeffTriangle& q, int n, int k, int s);

// Value of the transformation test at (n, k):
//   sum_{j=0}^{k-1} (-1)^j (lambda_{n-k+j+1} - lambda_{n-k+j}) b_{n-k+j,n-k}
//     sum_{r=1}^{k-j} gamma_{n-k+j+1}...gamma_{n-k+j+r} E_{k,n,j+r-1}.
// A nonzero value at some (n, k) with k greater than a candidate order
// rules out every operator of that order for the transformed family.
Rational necessary_condition(const DiffOperator& op, const CoeffTriangle& b,
                             const GammaSequence& gammas, int n, int k);

}  // namespace bsl
