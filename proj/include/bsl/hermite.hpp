#pragma once

// The Hermite instance end to end: the classical operator and its
// tridiagonal recurrence matrix, closed-form coefficients, the Geronimus
// gamma sequences, and the obstruction sum Sigma_H evaluated three
// independent ways (structured determinants, the parity-filtered double
// sum, and the S-based closed form).

#include "bsl/bispectral.hpp"
#include "bsl/darboux.hpp"
#include "bsl/diffop.hpp"
#include "bsl/eigenpoly.hpp"
#include "bsl/recurrence.hpp"

namespace bsl {

// a_1(x) = -2x, a_2(x) = 1; eigenvalues -2n.
DiffOperator hermite_operator();

// Tridiagonal recurrence matrix: zero diagonal, subdiagonal n/2.
BandedHessenberg hermite_recurrence_matrix(int n_max);

// b_{n,n-2s} = (-1)^s n! / (2^{2s} (n-2s)! s!); odd-gap coefficients vanish.
Rational hermite_coeff(int n, int s);

// Full coefficient triangle of the monic Hermite family from the closed form.
CoeffTriangle hermite_triangle(int n_max);

// gamma_1 given, gamma_m gamma_{m+1} = -m/2 thereafter (the constrained
// Geronimus chain). ZeroGamma on gamma_1 = 0.
GammaSequence gamma_sequence_constrained(const Rational& gamma1, int m_max);

// Two free parameters: gamma_m = gamma_2 + 1/(2 gamma_1) - (m-1)/(2 gamma_{m-1}).
// Reduces to the constrained chain when gamma_2 = -1/(2 gamma_1).
GammaSequence gamma_sequence_general(const Rational& gamma1, const Rational& gamma2, int m_max);

// Closed form of the E determinant over the Hermite triangle: 0 when
// k-j-r is odd, n! / ((n-k+j+r)! ((k-j-r)/2)! 2^{k-j-r}) when even.
Rational det_E_hermite_closed(int n, int k, int j, int r);

enum class SValueMode { Sum, Closed };

// S_M(m): the alternating binomial-weighted factorial sum, or its closed
// form S_M(m) = (2m-1)!/(m-1)! * prod_{t=1}^{M} (2t-3) / (M! 2^M).
Rational s_value(int M, int m, SValueMode mode);

enum class SigmaMode { Bruteforce, Sum, Closed };

// Sigma_H(n, k) over the constrained gamma chain with the given gamma_1.
//   Bruteforce: parity-filtered sum of gamma products against E determinants
//     evaluated on the Hermite triangle (no Hermite-specific closed forms).
//   Sum: same outer sum with the E determinants replaced by their closed form.
//   Closed: the single S-based expression; requires n even and k odd
//     (ParityError otherwise) and is known to differ from the other two
//     modes by sign at some (n, k) -- compare magnitudes.
Rational sigma_h(int n, int k, const Rational& gamma1, SigmaMode mode);

}  // namespace bsl
