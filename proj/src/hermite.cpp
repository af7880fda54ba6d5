#include "bsl/hermite.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bsl {

DiffOperator hermite_operator() {
  return DiffOperator({Poly(), Poly{Rational(0), Rational(-2)}, Poly{Rational(1)}}, "hermite");
}

BandedHessenberg hermite_recurrence_matrix(int n_max) {
  BandedHessenberg j(1, n_max);
  for (int n = 1; n <= n_max; ++n) j.set_alpha(n, n - 1, Rational(n, 2));
  return j;
}

Rational hermite_coeff(int n, int s) {
  if (n < 0 || s < 0 || 2 * s > n) {
    fail(ErrorCode::IndexError,
         "hermite_coeff: (n, s) = (" + std::to_string(n) + ", " + std::to_string(s) + ")");
  }
  Rational pow4(1);
  for (int t = 0; t < s; ++t) pow4 *= Rational(4);
  return Rational(parity_sign(s)) * factorial(n) / (pow4 * factorial(n - 2 * s) * factorial(s));
}

CoeffTriangle hermite_triangle(int n_max) {
  if (n_max < 0) fail(ErrorCode::IndexError, "hermite_triangle: n_max < 0");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Rational> row(static_cast<size_t>(n) + 1, Rational(0));
    for (int s = 0; 2 * s <= n; ++s) {
      row[static_cast<size_t>(n - 2 * s)] = hermite_coeff(n, s);
    }
    rows.push_back(std::move(row));
  }
  return CoeffTriangle(std::move(rows));
}

GammaSequence gamma_sequence_constrained(const Rational& gamma1, int m_max) {
  if (m_max < 1) fail(ErrorCode::IndexError, "gamma_sequence: m_max < 1");
  if (gamma1.is_zero()) fail(ErrorCode::ZeroGamma, "gamma_1 = 0");
  std::vector<Rational> g;
  g.reserve(static_cast<size_t>(m_max));
  g.push_back(gamma1);
  for (int m = 1; m < m_max; ++m) {
    // gamma_{m+1} = -(m/2) / gamma_m; the chain never hits zero once
    // gamma_1 is nonzero.
    g.push_back(Rational(-m, 2) / g.back());
  }
  return GammaSequence(std::move(g));
}

GammaSequence gamma_sequence_general(const Rational& gamma1, const Rational& gamma2, int m_max) {
  if (m_max < 1) fail(ErrorCode::IndexError, "gamma_sequence: m_max < 1");
  if (gamma1.is_zero()) fail(ErrorCode::ZeroGamma, "gamma_1 = 0");
  std::vector<Rational> g;
  g.reserve(static_cast<size_t>(m_max));
  g.push_back(gamma1);
  if (m_max >= 2) g.push_back(gamma2);
  const Rational offset = gamma2 + Rational(1, 2) / gamma1;
  for (int m = 3; m <= m_max; ++m) {
    const Rational& prev = g.back();
    if (prev.is_zero()) {
      fail(ErrorCode::ZeroGamma, "gamma_" + std::to_string(m - 1) + " = 0 in the recursion");
    }
    g.push_back(offset - Rational(m - 1, 2) / prev);
  }
  return GammaSequence(std::move(g));
}

Rational det_E_hermite_closed(int n, int k, int j, int r) {
  const int d = k - j - r;
  if (n < 0 || k < 1 || k > n || j < 0 || r < 1 || d < 0 || n - k + j + r < 0) {
    fail(ErrorCode::IndexError, "det_E_hermite_closed: indices out of range");
  }
  if (d % 2 != 0) return Rational(0);
  Rational pow2(1);
  for (int t = 0; t < d; ++t) pow2 *= Rational(2);
  return factorial(n) / (factorial(n - k + j + r) * factorial(d / 2) * pow2);
}

Rational s_value(int M, int m, SValueMode mode) {
  if (M < 0 || m < 1) {
    fail(ErrorCode::IndexError,
         "s_value: (M, m) = (" + std::to_string(M) + ", " + std::to_string(m) + ")");
  }
  if (mode == SValueMode::Sum) {
    Rational sum(0);
    Rational sign_pow(1);  // (-1/4)^r
    for (int r = 0; r <= M; ++r) {
      sum += sign_pow * factorial(2 * m + 2 * r - 1) / (factorial(r) * factorial(m + r - 1)) *
             binomial(m - 1 + M, m - 1 + r);
      sign_pow *= Rational(-1, 4);
    }
    return sum;
  }
  // Closed form: S_M(1) as a running product, then the ratio to general m.
  Rational s1(1);
  for (int t = 1; t <= M; ++t) s1 *= Rational(2 * t - 3);
  Rational pow2(1);
  for (int t = 0; t < M; ++t) pow2 *= Rational(2);
  s1 /= factorial(M) * pow2;
  return factorial(2 * m - 1) / factorial(m - 1) * s1;
}

namespace {

// Shared outer structure of the bruteforce and sum modes: the j-even outer
// sum with weights (-1)^{j/2} (n-k+j)! / (2^j (n-k)! (j/2)!).
template <typename InnerFn>
Rational sigma_outer(int n, int k, InnerFn&& inner) {
  Rational total(0);
  Rational pow2j(1);  // 2^j
  for (int j = 0; j <= k - 1; ++j, pow2j *= Rational(2)) {
    if (j % 2 != 0) continue;
    const Rational outer = Rational(parity_sign(j / 2)) * factorial(n - k + j) /
                           (pow2j * factorial(n - k) * factorial(j / 2));
    total += outer * inner(j);
  }
  return total;
}

}  // namespace

Rational sigma_h(int n, int k, const Rational& gamma1, SigmaMode mode) {
  if (k < 1 || k > n) {
    fail(ErrorCode::IndexError,
         "sigma_h: (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }

  if (mode == SigmaMode::Closed) {
    if (n % 2 != 0 || k % 2 != 1) {
      fail(ErrorCode::ParityError,
           "sigma_h closed form requires n even and k odd, got (n, k) = (" + std::to_string(n) +
               ", " + std::to_string(k) + ")");
    }
    if (gamma1.is_zero()) fail(ErrorCode::ZeroGamma, "gamma_1 = 0");
    Rational pow2n(1);
    for (int t = 0; t < n; ++t) pow2n *= Rational(2);
    const Rational prefactor = factorial(n) * Rational(parity_sign((k + 1) / 2)) /
                               (gamma1 * factorial(n / 2) * factorial(n - k) * pow2n);
    return prefactor * s_value((k - 1) / 2, (n - k + 1) / 2, SValueMode::Closed);
  }

  const GammaSequence gammas = gamma_sequence_constrained(gamma1, n);

  if (mode == SigmaMode::Bruteforce) {
    const CoeffTriangle triangle = eigenpoly_family(hermite_operator(), n);
    return sigma_outer(n, k, [&](int j) {
      Rational inner(0);
      Rational gamma_prod(1);
      for (int r = 1; r <= k - j; ++r) {
        gamma_prod *= gammas.gamma(n - k + j + r);
        inner += gamma_prod * det_E(triangle, n, k, j + r - 1);
      }
      return inner;
    });
  }

  // Sum mode: E determinants replaced by their Hermite closed form, the
  // inner index rewritten as s = k - j - r (s even).
  return sigma_outer(n, k, [&](int j) {
    Rational inner(0);
    Rational gamma_prod(1);
    int upto = n - k + j;  // gamma product currently covers indices up to here
    for (int s = k - j - 1; s >= 0; --s) {
      while (upto < n - s) gamma_prod *= gammas.gamma(++upto);
      if (s % 2 != 0) continue;
      Rational pow2s(1);
      for (int t = 0; t < s; ++t) pow2s *= Rational(2);
      inner += gamma_prod * factorial(n) / (factorial(n - s) * factorial(s / 2) * pow2s);
    }
    return inner;
  });
}

}  // namespace bsl
