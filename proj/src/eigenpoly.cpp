#include "bsl/eigenpoly.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace bsl {

CoeffTriangle::CoeffTriangle(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  for (size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) {
      fail(ErrorCode::DimensionMismatch,
           "coefficient row " + std::to_string(n) + " has length " +
               std::to_string(rows_[n].size()));
    }
    if (rows_[n].back() != Rational(1)) {
      fail(ErrorCode::DimensionMismatch, "row " + std::to_string(n) + " is not monic");
    }
  }
}

CoeffTriangle CoeffTriangle::from_polys(const std::vector<Poly>& family) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(family.size());
  for (size_t n = 0; n < family.size(); ++n) {
    if (family[n].degree() != static_cast<int>(n)) {
      fail(ErrorCode::DimensionMismatch,
           "family member " + std::to_string(n) + " has degree " +
               std::to_string(family[n].degree()));
    }
    std::vector<Rational> row(n + 1);
    for (size_t i = 0; i <= n; ++i) row[i] = family[n].coeff(static_cast<int>(i));
    rows.push_back(std::move(row));
  }
  return CoeffTriangle(std::move(rows));
}

Rational CoeffTriangle::b(int n, int i) const {
  if (n < 0 || n > n_max() || i < 0) {
    fail(ErrorCode::IndexError,
         "coefficient (" + std::to_string(n) + ", " + std::to_string(i) + ") out of range");
  }
  if (i > n) return Rational(0);
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

Poly CoeffTriangle::poly(int n) const {
  if (n < 0 || n > n_max()) fail(ErrorCode::IndexError, "poly: n out of range");
  return Poly(rows_[static_cast<size_t>(n)]);
}

RationalMatrix m_truncation(const DeltaTable& dt, int n) {
  if (n < 0 || n > dt.n_max()) {
    fail(ErrorCode::IndexError, "m_truncation: n = " + std::to_string(n) + " out of range");
  }
  RationalMatrix m = RationalMatrix::Zero(n + 1, n + 1);
  for (int r = 0; r <= n; ++r) {
    for (int c = r; c <= n; ++c) {
      m(r, c) = dt(c, c - r);
    }
  }
  return m;
}

namespace {

// Shared backsub core; table and spectrum must cover index n.
std::vector<Rational> backsub_row(const DiffOperator& op, const DeltaTable& dt,
                                  const std::vector<Rational>& lambda, int n) {
  for (int m = 0; m < n; ++m) {
    if (lambda[static_cast<size_t>(m)] == lambda[static_cast<size_t>(n)]) {
      fail(ErrorCode::EigenvalueCollision,
           "lambda_" + std::to_string(m) + " = lambda_" + std::to_string(n) +
               " leaves a zero pivot");
    }
  }
  std::vector<Rational> b(static_cast<size_t>(n) + 1, Rational(0));
  b[static_cast<size_t>(n)] = Rational(1);
  for (int m = n - 1; m >= 0; --m) {
    Rational acc(0);
    for (int k = 1; k <= std::min(op.order(), n - m); ++k) {
      const Rational d = dt(m + k, k);
      if (d.is_zero()) continue;
      acc += d * b[static_cast<size_t>(m + k)];
    }
    b[static_cast<size_t>(m)] =
        -acc / (lambda[static_cast<size_t>(m)] - lambda[static_cast<size_t>(n)]);
  }
  return b;
}

}  // namespace

Poly eigenpoly_backsub(const DiffOperator& op, int n) {
  if (n < 0) fail(ErrorCode::IndexError, "eigenpoly_backsub: n < 0");
  const DeltaTable dt(op, n);
  const Spectrum sp = spectrum(op, n);
  return Poly(backsub_row(op, dt, sp.lambda, n));
}

CoeffTriangle eigenpoly_family(const DiffOperator& op, int n_max) {
  if (n_max < 0) fail(ErrorCode::IndexError, "eigenpoly_family: n_max < 0");
  const DeltaTable dt(op, n_max);
  const Spectrum sp = spectrum(op, n_max);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) rows.push_back(backsub_row(op, dt, sp.lambda, n));
  return CoeffTriangle(std::move(rows));
}

std::vector<std::vector<int>> enumerate_compositions(int total, int max_part) {
  std::vector<std::vector<int>> out;
  if (total < 1 || max_part < 1) return out;
  std::vector<int> parts;
  auto recurse = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(parts);
      return;
    }
    for (int first = 1; first <= std::min(remaining, max_part); ++first) {
      parts.push_back(first);
      self(self, remaining - first);
      parts.pop_back();
    }
  };
  recurse(recurse, total);
  return out;
}

Poly eigenpoly_explicit(const DiffOperator& op, int n, int cap) {
  if (n < 0) fail(ErrorCode::IndexError, "eigenpoly_explicit: n < 0");
  if (n > cap) {
    fail(ErrorCode::CapExceeded,
         "n = " + std::to_string(n) + " exceeds the composition cap " + std::to_string(cap));
  }
  const DeltaTable dt(op, n);
  const Spectrum sp = spectrum(op, n);
  const auto& lambda = sp.lambda;
  for (int m = 0; m < n; ++m) {
    if (lambda[static_cast<size_t>(m)] == lambda[static_cast<size_t>(n)]) {
      fail(ErrorCode::EigenvalueCollision,
           "lambda_" + std::to_string(m) + " = lambda_" + std::to_string(n));
    }
  }

  std::vector<Rational> b(static_cast<size_t>(n) + 1, Rational(0));
  b[static_cast<size_t>(n)] = Rational(1);
  for (int i = 0; i < n; ++i) {
    Rational sum(0);
    // Parts above the operator order contribute nothing: delta^(k) = 0
    // for k > N kills those products.
    for (const auto& parts : enumerate_compositions(n - i, op.order())) {
      Rational term(1);
      int at = i;  // i + i_1 + ... + i_{s-1}
      for (int part : parts) {
        const Rational numer = dt(at + part, part);
        if (numer.is_zero()) {
          term = Rational(0);
          break;
        }
        term *= numer / (lambda[static_cast<size_t>(n)] - lambda[static_cast<size_t>(at)]);
        at += part;
      }
      sum += term;
    }
    b[static_cast<size_t>(i)] = sum;
  }
  return Poly(std::move(b));
}

bool verify_eigen(const DiffOperator& op, const Poly& p, const Rational& lambda) {
  return apply_operator(op, p) == lambda * p;
}

}  // namespace bsl
