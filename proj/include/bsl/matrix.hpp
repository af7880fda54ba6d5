#pragma once

// Dense exact-arithmetic matrix kit: Eigen dynamic matrices over Rational
// plus the fraction-free determinant everything downstream relies on.

#include <Eigen/Dense>

#include "bsl/rational.hpp"

namespace bsl {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Exact determinant via fraction-free (Bareiss) elimination with row swaps
// on vanishing pivots. det of a 0x0 matrix is 1.
Rational determinant(const RationalMatrix& m);

}  // namespace bsl
