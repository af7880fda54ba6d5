#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "bsl/hermite.hpp"
#include "bsl/io.hpp"

using bsl::Rational;
using nlohmann::json;

TEST_CASE("operator documents") {
  const json doc = {{"name", "hermite"}, {"order", 2}, {"coeffs", {json::array(), {"0", "-2"}, {"1"}}}};
  const auto op = bsl::load_operator(doc);
  CHECK(op.order() == 2);
  CHECK(op.name() == "hermite");
  CHECK(op.coeff(1) == bsl::Poly{Rational(0), Rational(-2)});

  // round trip: emitted document re-parses to identical values
  const auto round = bsl::load_operator(bsl::operator_to_json(op));
  CHECK(round.order() == op.order());
  for (int i = 0; i <= 2; ++i) CHECK(round.coeff(i) == op.coeff(i));

  // missing trailing rows mean zero polynomials: declared order above the
  // derived one is fine, below it is not
  CHECK(bsl::load_operator({{"order", 4}, {"coeffs", {json::array(), {"1"}}}}).order() == 1);
  CHECK_THROWS_AS(bsl::load_operator({{"order", 1}, {"coeffs", {json::array(), {"0", "-2"}, {"1"}}}}),
                  bsl::Error);

  // a_0 normalization note
  const auto shifted = bsl::load_operator({{"coeffs", {{"5"}, {"0", "1"}}}});
  CHECK(shifted.constant_shift() == Rational(5));
  CHECK(shifted.coeff(0).is_zero());

  try {
    bsl::load_operator({{"coeffs", {json::array(), {"1/x"}}}});
    FAIL("expected ParseError");
  } catch (const bsl::Error& e) {
    CHECK(e.code() == bsl::ErrorCode::ParseError);
  }
  CHECK_THROWS_AS(bsl::load_operator({{"coeffs", {json::array(), {0.5}}}}), bsl::Error);
  CHECK_THROWS_AS(bsl::load_operator(json::array()), bsl::Error);
}

TEST_CASE("banded documents") {
  const auto j = bsl::hermite_recurrence_matrix(6);
  const auto round = bsl::banded_from_json(bsl::banded_to_json(j));
  CHECK(round == j);

  // rows may arrive in any order; missing rows are zero
  const json sparse = {{"p", 1}, {"rows", {{{"n", 3}, {"alpha", {"3/2", "0"}}}}}};
  const auto m = bsl::banded_from_json(sparse);
  CHECK(m.n_max() == 3);
  CHECK(m.alpha(3, 2) == Rational(3, 2));
  CHECK(m.alpha(1, 0) == Rational(0));

  CHECK_THROWS_AS(bsl::banded_from_json({{"p", 0}, {"rows", json::array()}}), bsl::Error);
  CHECK_THROWS_AS(bsl::banded_from_json({{"p", 1}, {"rows", {{{"n", 2}, {"alpha", {"1"}}}}}}),
                  bsl::Error);  // wrong row length
}

TEST_CASE("bidiagonal and gamma documents") {
  bsl::BidiagonalMatrix u{bsl::BidiagonalMatrix::Kind::Upper,
                          {Rational(-1), Rational(1, 2)},
                          {Rational(1)}};
  const auto round = bsl::bidiagonal_from_json(bsl::bidiagonal_to_json(u));
  CHECK(round.kind == u.kind);
  CHECK(round.diag == u.diag);
  CHECK(round.off == u.off);

  CHECK_THROWS_AS(bsl::bidiagonal_from_json({{"kind", "diagonal"}, {"diag", {"1"}}, {"offdiag", json::array()}}),
                  bsl::Error);
  CHECK_THROWS_AS(bsl::bidiagonal_from_json({{"kind", "upper"}, {"diag", {"1", "2"}}, {"offdiag", json::array()}}),
                  bsl::Error);

  const auto g = bsl::gammas_from_json(json::array({"1", "-1/2", "2"}));
  CHECK(g.gamma(2) == Rational(-1, 2));
  CHECK(bsl::gammas_from_json(bsl::gammas_to_json(g)).values() == g.values());
}

TEST_CASE("polynomial documents") {
  const std::vector<bsl::Poly> family = {bsl::Poly{Rational(1)}, bsl::Poly::x(),
                                         bsl::Poly{Rational(-1, 2), Rational(0), Rational(1)}};
  CHECK(bsl::polys_from_json(bsl::polys_to_json(family)) == family);
  CHECK_THROWS_AS(bsl::polys_from_json(json::object()), bsl::Error);
}

TEST_CASE("file handling") {
  try {
    bsl::read_json_file("/nonexistent/path.json");
    FAIL("expected FileNotFound");
  } catch (const bsl::Error& e) {
    CHECK(e.code() == bsl::ErrorCode::FileNotFound);
  }

  const std::string path = "/tmp/bsl_io_test_malformed.json";
  std::ofstream(path) << "{ not json";
  try {
    bsl::read_json_file(path);
    FAIL("expected ParseError");
  } catch (const bsl::Error& e) {
    CHECK(e.code() == bsl::ErrorCode::ParseError);
  }
  std::remove(path.c_str());
}
