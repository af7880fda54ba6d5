#include "bsl/matrix.hpp"

#include <stdexcept>

namespace bsl {

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Rational(1);

  RationalMatrix a = m;
  int sign = 1;
  Rational prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (!a(r, k).is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return Rational(0);
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Rational(0);
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

}  // namespace bsl
