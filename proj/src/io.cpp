#include "bsl/io.hpp"

#include <filesystem>
#include <fstream>
#include <utility>

namespace bsl {

namespace {

Rational rational_field(const nlohmann::json& v) {
  if (!v.is_string()) {
    fail(ErrorCode::ParseError, "rational entries must be \"p/q\" strings, got " + v.dump());
  }
  return Rational::parse(v.get<std::string>());
}

std::vector<Rational> rational_array(const nlohmann::json& v, const char* what) {
  if (!v.is_array()) fail(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(rational_field(e));
  return out;
}

nlohmann::json rationals_to_json(const std::vector<Rational>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) {
      fail(ErrorCode::FileNotFound, path);
    }
    fail(ErrorCode::ParseError, "cannot read " + path);
  }
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded()) fail(ErrorCode::ParseError, "invalid JSON in " + path);
  return doc;
}

DiffOperator load_operator(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("coeffs")) {
    fail(ErrorCode::ParseError, "operator document needs a \"coeffs\" array");
  }
  const auto& coeffs = doc.at("coeffs");
  if (!coeffs.is_array()) fail(ErrorCode::ParseError, "\"coeffs\" must be an array of arrays");

  std::vector<Poly> a;
  a.reserve(coeffs.size());
  for (const auto& row : coeffs) a.emplace_back(rational_array(row, "coefficient row"));

  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) fail(ErrorCode::ParseError, "\"name\" must be a string");
    name = doc.at("name").get<std::string>();
  }

  int declared = -1;
  if (doc.contains("order")) {
    if (!doc.at("order").is_number_integer()) {
      fail(ErrorCode::ParseError, "\"order\" must be an integer");
    }
    declared = doc.at("order").get<int>();
  }
  // Declared order is an upper bound: rows past it must be absent or zero,
  // and the effective order is derived from the highest nonzero a_i.
  int derived = 0;
  for (size_t i = 1; i < a.size(); ++i) {
    if (!a[i].is_zero()) derived = static_cast<int>(i);
  }
  if (declared >= 0 && derived > declared) {
    fail(ErrorCode::ParseError, "declared order " + std::to_string(declared) +
                                    " but a_" + std::to_string(derived) + " is nonzero");
  }
  return DiffOperator(std::move(a), std::move(name));
}

DiffOperator load_operator_file(const std::string& path) {
  return load_operator(read_json_file(path));
}

nlohmann::json operator_to_json(const DiffOperator& op) {
  nlohmann::json doc;
  if (!op.name().empty()) doc["name"] = op.name();
  doc["order"] = op.order();
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 0; i <= op.order(); ++i) coeffs.push_back(rationals_to_json(op.coeff(i).coeffs()));
  doc["coeffs"] = std::move(coeffs);
  return doc;
}

BandedHessenberg banded_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("rows")) {
    fail(ErrorCode::ParseError, "banded document needs \"p\" and \"rows\"");
  }
  if (!doc.at("p").is_number_integer()) fail(ErrorCode::ParseError, "\"p\" must be an integer");
  const int p = doc.at("p").get<int>();
  if (p < 1) fail(ErrorCode::ParseError, "\"p\" must be positive");
  const auto& rows = doc.at("rows");
  if (!rows.is_array() || rows.empty()) {
    fail(ErrorCode::ParseError, "\"rows\" must be a nonempty array");
  }

  int n_max = 0;
  for (const auto& row : rows) {
    if (!row.is_object() || !row.contains("n") || !row.at("n").is_number_integer()) {
      fail(ErrorCode::ParseError, "each row needs an integer \"n\"");
    }
    n_max = std::max(n_max, row.at("n").get<int>());
  }

  BandedHessenberg j(p, n_max);
  for (const auto& row : rows) {
    const int n = row.at("n").get<int>();
    if (n < 0) fail(ErrorCode::ParseError, "row index n must be nonnegative");
    const auto alpha = rational_array(row.at("alpha"), "alpha row");
    const int start = std::max(0, n - p);
    if (static_cast<int>(alpha.size()) != n - start + 1) {
      fail(ErrorCode::ParseError, "row n = " + std::to_string(n) + " must list " +
                                      std::to_string(n - start + 1) + " entries");
    }
    for (int k = start; k <= n; ++k) j.set_alpha(n, k, alpha[static_cast<size_t>(k - start)]);
  }
  return j;
}

BandedHessenberg banded_from_file(const std::string& path) {
  return banded_from_json(read_json_file(path));
}

nlohmann::json banded_to_json(const BandedHessenberg& j) {
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 0; n <= j.n_max(); ++n) {
    std::vector<Rational> alpha;
    for (int k = std::max(0, n - j.p()); k <= n; ++k) alpha.push_back(j.alpha(n, k));
    rows.push_back({{"n", n}, {"alpha", rationals_to_json(alpha)}});
  }
  return {{"p", j.p()}, {"rows", std::move(rows)}};
}

BidiagonalMatrix bidiagonal_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("diag") ||
      !doc.contains("offdiag")) {
    fail(ErrorCode::ParseError, "bidiagonal document needs \"kind\", \"diag\", \"offdiag\"");
  }
  BidiagonalMatrix m;
  const std::string kind = doc.at("kind").is_string() ? doc.at("kind").get<std::string>() : "";
  if (kind == "upper") {
    m.kind = BidiagonalMatrix::Kind::Upper;
  } else if (kind == "lower") {
    m.kind = BidiagonalMatrix::Kind::Lower;
  } else {
    fail(ErrorCode::ParseError, "\"kind\" must be \"upper\" or \"lower\"");
  }
  m.diag = rational_array(doc.at("diag"), "\"diag\"");
  m.off = rational_array(doc.at("offdiag"), "\"offdiag\"");
  if (m.diag.empty() || m.off.size() + 1 != m.diag.size()) {
    fail(ErrorCode::ParseError, "\"offdiag\" must have one entry fewer than \"diag\"");
  }
  return m;
}

BidiagonalMatrix bidiagonal_from_file(const std::string& path) {
  return bidiagonal_from_json(read_json_file(path));
}

nlohmann::json bidiagonal_to_json(const BidiagonalMatrix& m) {
  return {{"kind", m.kind == BidiagonalMatrix::Kind::Upper ? "upper" : "lower"},
          {"diag", rationals_to_json(m.diag)},
          {"offdiag", rationals_to_json(m.off)}};
}

nlohmann::json poly_to_json(const Poly& p) { return rationals_to_json(p.coeffs()); }

Poly poly_from_json(const nlohmann::json& doc) {
  return Poly(rational_array(doc, "polynomial"));
}

std::vector<Poly> polys_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) fail(ErrorCode::ParseError, "polynomial list must be an array");
  std::vector<Poly> out;
  out.reserve(doc.size());
  for (const auto& row : doc) out.push_back(poly_from_json(row));
  return out;
}

std::vector<Poly> polys_from_file(const std::string& path) {
  return polys_from_json(read_json_file(path));
}

nlohmann::json polys_to_json(const std::vector<Poly>& family) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : family) out.push_back(poly_to_json(p));
  return out;
}

GammaSequence gammas_from_json(const nlohmann::json& doc) {
  return GammaSequence(rational_array(doc, "gamma sequence"));
}

GammaSequence gammas_from_file(const std::string& path) {
  return gammas_from_json(read_json_file(path));
}

nlohmann::json gammas_to_json(const GammaSequence& g) { return rationals_to_json(g.values()); }

}  // namespace bsl
