#pragma once

// JSON document formats shared by the CLI and any external callers.
// Rationals travel as canonical "p/q" strings everywhere.
//
//   operator    { "name"?: str, "order": N, "coeffs": [[...], ...] }
//               coeffs[i] = ascending coefficients of a_i; missing trailing
//               rows mean zero polynomials
//   banded      { "p": int, "rows": [{ "n": int, "alpha": [...] }] }
//               alpha = alpha_{n, max(0,n-p)}..alpha_{n,n}; superdiagonal
//               is implicit; missing rows mean zero rows
//   bidiagonal  { "kind": "upper"|"lower", "diag": [...], "offdiag": [...] }
//   polys       [[...], [...], ...] ascending coefficients
//   gammas      ["g1", "g2", ...]

#include <string>
#include <vector>

#include <json.hpp>

#include "bsl/darboux.hpp"
#include "bsl/diffop.hpp"
#include "bsl/poly.hpp"
#include "bsl/recurrence.hpp"

namespace bsl {

// Parses and validates a JSON file; FileNotFound / ParseError.
nlohmann::json read_json_file(const std::string& path);

DiffOperator load_operator(const nlohmann::json& doc);
DiffOperator load_operator_file(const std::string& path);
nlohmann::json operator_to_json(const DiffOperator& op);

BandedHessenberg banded_from_json(const nlohmann::json& doc);
BandedHessenberg banded_from_file(const std::string& path);
nlohmann::json banded_to_json(const BandedHessenberg& j);

BidiagonalMatrix bidiagonal_from_json(const nlohmann::json& doc);
BidiagonalMatrix bidiagonal_from_file(const std::string& path);
nlohmann::json bidiagonal_to_json(const BidiagonalMatrix& m);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& doc);

std::vector<Poly> polys_from_json(const nlohmann::json& doc);
std::vector<Poly> polys_from_file(const std::string& path);
nlohmann::json polys_to_json(const std::vector<Poly>& family);

GammaSequence gammas_from_json(const nlohmann::json& doc);
GammaSequence gammas_from_file(const std::string& path);
nlohmann::json gammas_to_json(const GammaSequence& g);

}  // namespace bsl
