#include "bsl/darboux.hpp"

#include <string>
#include <utility>

namespace bsl {

const Rational& GammaSequence::gamma(int i) const {
  if (i < 1 || i > size()) {
    fail(ErrorCode::IndexError, "gamma_" + std::to_string(i) + " not provided (have 1.." +
                                    std::to_string(size()) + ")");
  }
  return g_[static_cast<size_t>(i - 1)];
}

RationalMatrix BidiagonalMatrix::dense(int rows) const {
  if (rows < 1 || rows > size()) {
    fail(ErrorCode::IndexError, "bidiagonal dense: truncation size out of range");
  }
  RationalMatrix m = RationalMatrix::Zero(rows, rows);
  for (int i = 0; i < rows; ++i) m(i, i) = diag[static_cast<size_t>(i)];
  for (int i = 0; i + 1 < rows; ++i) {
    if (kind == Kind::Upper) {
      m(i, i + 1) = off[static_cast<size_t>(i)];
    } else {
      m(i + 1, i) = off[static_cast<size_t>(i)];
    }
  }
  return m;
}

BidiagonalPair ul_factorize(const BandedHessenberg& j, const Rational& c, const Rational& l1,
                            int n_max, bool check_truncations) {
  if (j.p() != 1) fail(ErrorCode::DimensionMismatch, "ul_factorize: matrix must be tridiagonal");
  if (n_max < 1 || n_max > j.n_max()) {
    fail(ErrorCode::IndexError, "ul_factorize: n_max out of range");
  }

  if (check_truncations) {
    // det(C I_m - J_m) by the tridiagonal three-term recursion.
    Rational prev(1);
    Rational cur = c - j.alpha(0, 0);
    for (int m = 1; m <= n_max; ++m) {
      if (cur.is_zero()) {
        fail(ErrorCode::SingularTruncation,
             "det(C I_m - J_m) = 0 at m = " + std::to_string(m));
      }
      if (m < n_max) {
        Rational next = (c - j.alpha(m, m)) * cur - j.alpha(m, m - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
    }
  }

  BidiagonalPair out;
  out.upper.kind = BidiagonalMatrix::Kind::Upper;
  out.lower.kind = BidiagonalMatrix::Kind::Lower;
  out.trusted_rows = n_max;

  auto& u = out.upper.diag;
  auto& l = out.lower.off;
  u.resize(static_cast<size_t>(n_max) + 1);
  l.resize(static_cast<size_t>(n_max));
  out.upper.off.assign(static_cast<size_t>(n_max), Rational(1));
  out.lower.diag.assign(static_cast<size_t>(n_max) + 1, Rational(1));

  l[0] = l1;
  u[0] = j.alpha(0, 0) - c - l1;
  for (int i = 1; i <= n_max; ++i) {
    const Rational& li = l[static_cast<size_t>(i - 1)];
    const Rational sub = j.alpha(i, i - 1);
    if (li.is_zero()) {
      if (!sub.is_zero()) {
        fail(ErrorCode::SingularPivot,
             "l_" + std::to_string(i) + " = 0 with alpha_{" + std::to_string(i) + "," +
                 std::to_string(i - 1) + "} = " + sub.str());
      }
      u[static_cast<size_t>(i)] = Rational(0);
    } else {
      u[static_cast<size_t>(i)] = sub / li;
    }
    if (i < n_max) {
      l[static_cast<size_t>(i)] = j.alpha(i, i) - c - u[static_cast<size_t>(i)];
    }
  }
  return out;
}

BandedHessenberg geronimus_transform(const std::vector<BidiagonalMatrix>& factors,
                                     const Rational& c, int s, int rows) {
  if (factors.size() < 2) {
    fail(ErrorCode::DimensionMismatch, "geronimus_transform: need [U, L^(1), ..., L^(p)]");
  }
  const int p = static_cast<int>(factors.size()) - 1;
  if (s < 1 || s > p) fail(ErrorCode::IndexError, "geronimus_transform: s out of range 1..p");
  if (rows < 1) fail(ErrorCode::IndexError, "geronimus_transform: rows must be positive");

  const int m = factors.front().size();
  if (factors.front().kind != BidiagonalMatrix::Kind::Upper) {
    fail(ErrorCode::DimensionMismatch, "geronimus_transform: first factor must be upper");
  }
  for (size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].kind != BidiagonalMatrix::Kind::Lower) {
      fail(ErrorCode::DimensionMismatch, "geronimus_transform: factor " + std::to_string(i) +
                                             " must be lower bidiagonal");
    }
    for (const auto& d : factors[i].diag) {
      if (d != Rational(1)) {
        fail(ErrorCode::DimensionMismatch, "geronimus_transform: lower factors need unit diagonal");
      }
    }
  }
  for (const auto& o : factors.front().off) {
    if (o != Rational(1)) {
      fail(ErrorCode::DimensionMismatch, "geronimus_transform: upper factor needs unit superdiagonal");
    }
  }
  for (const auto& f : factors) {
    if (f.size() != m) {
      fail(ErrorCode::DimensionMismatch, "geronimus_transform: factor truncations differ");
    }
  }
  // Band products corrupt the trailing rows of truncations; demand one row
  // of padding per factor.
  if (m < rows + p + 1) {
    fail(ErrorCode::PaddingInsufficient,
         "geronimus_transform: need truncations of size >= " + std::to_string(rows + p + 1) +
             ", got " + std::to_string(m));
  }

  // Rotated order L^(p-s+1) ... L^(p) U L^(1) ... L^(p-s).
  std::vector<const BidiagonalMatrix*> order;
  for (int i = p - s + 1; i <= p; ++i) order.push_back(&factors[static_cast<size_t>(i)]);
  order.push_back(&factors.front());
  for (int i = 1; i <= p - s; ++i) order.push_back(&factors[static_cast<size_t>(i)]);

  RationalMatrix prod = order.front()->dense(m);
  for (size_t i = 1; i < order.size(); ++i) prod = (prod * order[i]->dense(m)).eval();

  BandedHessenberg out(p, rows - 1);
  for (int n = 0; n < rows; ++n) {
    for (int k = std::max(0, n - p); k <= n; ++k) {
      Rational v = prod(n, k);
      if (k == n) v += c;
      out.set_alpha(n, k, std::move(v));
    }
  }
  return out;
}

RationalMatrix conjugate_by_transform(const BandedHessenberg& j, const GammaSequence& gammas,
                                      int n_max) {
  if (j.p() != 1) {
    fail(ErrorCode::DimensionMismatch, "conjugate_by_transform: matrix must be tridiagonal");
  }
  if (n_max < 2 || n_max > j.n_max()) {
    fail(ErrorCode::IndexError, "conjugate_by_transform: n_max out of range");
  }
  if (gammas.size() < n_max + 1) {
    fail(ErrorCode::IndexError, "conjugate_by_transform: need gamma_1..gamma_" +
                                    std::to_string(n_max + 1));
  }

  const auto alpha_full = [&](int r, int col) -> Rational {
    if (r < 0) return Rational(0);
    return j.entry(r, col);
  };

  RationalMatrix d = RationalMatrix::Zero(n_max + 1, n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    if (m + 1 <= n_max) d(m, m + 1) = Rational(1);
    const Rational gm = m >= 1 ? gammas.gamma(m) : Rational(0);
    for (int r = m; r >= 0; --r) {
      const Rational above = r + 1 > m ? Rational(1) : d(m, r + 1);
      d(m, r) = gm * alpha_full(m - 1, r) + alpha_full(m, r) - gammas.gamma(r + 1) * above;
    }
  }
  return d;
}

}  // namespace bsl
