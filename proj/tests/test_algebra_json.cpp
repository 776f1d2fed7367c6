#include <doctest.h>

#include <random>

#include "liecoh/algebra_json.hpp"
#include "liecoh/errors.hpp"
#include "liecoh/families.hpp"
#include "test_support.hpp"

using namespace liecoh;

TEST_CASE("parse Heisenberg h3") {
  auto g = algebra_from_json(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"0": "1"}}],
                                 "labels": ["Z", "X1", "X2"]})");
  CHECK(g.dim() == 3);
  CHECK(g.structure_constant(1, 2, 0) == Scalar(1));
  CHECK(g.labels() == heisenberg(1).labels());
}

TEST_CASE("coefficient encodings") {
  auto g = algebra_from_json(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"1": {"re": "1/2", "im": "-3"}}}]})");
  CHECK(g.structure_constant(0, 1, 1) == Scalar::parse("1/2-3i"));
  auto h = algebra_from_json(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"1": 4}}]})");
  CHECK(h.structure_constant(0, 1, 1) == Scalar(4));
  auto k = algebra_from_json(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "2+i"}}]})");
  CHECK(k.structure_constant(0, 1, 1) == Scalar::parse("2+i"));
  auto e = algebra_from_json(R"({"dim": 4, "brackets": []})");
  CHECK(e.bracket_count() == 0);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(algebra_from_json("not json"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"([])"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"brackets": []})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": "3", "brackets": []})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "brackets": [{"i": 0, "coeffs": {}}]})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"x": "1"}}]})"),
                  ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1/0"}}]})"),
                  ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "brackets": [], "labels": [1, 2]})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "brackets": [], "labels": ["A"]})"), DimensionMismatch);
}

TEST_CASE("algebra errors propagate") {
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "brackets": [{"i": 0, "j": 5, "coeffs": {"1": "1"}}]})"),
                  IndexOutOfRange);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1"}},
                                                              {"i": 0, "j": 1, "coeffs": {"0": "1"}}]})"),
                  DuplicatePair);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 3, "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "2"}},
                                                              {"i": 1, "j": 2, "coeffs": {"0": "3"}},
                                                              {"i": 0, "j": 2, "coeffs": {"0": "1"}}]})"),
                  JacobiViolation);
}

TEST_CASE("canonical round trip") {
  CHECK(algebra_to_json(aff_r()) ==
        R"({"dim":2,"brackets":[{"i":0,"j":1,"coeffs":{"1":"1"}}],"labels":["X","Y"]})");
  auto zoo = testing::family_zoo();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) zoo.emplace_back("random", testing::random_lie_algebra(rng, 1 + t % 6));
  for (const auto& [name, g] : zoo) {
    CAPTURE(name);
    const std::string text = algebra_to_json(g);
    auto back = algebra_from_json(text);
    CHECK(back.dim() == g.dim());
    CHECK(back.labels() == g.labels());
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j) CHECK(back.basis_bracket(i, j) == g.basis_bracket(i, j));
    CHECK(algebra_to_json(back) == text);
    CHECK(algebra_from_json(algebra_to_json(g, 2)).nonzero_brackets().size() == g.nonzero_brackets().size());
  }
}
