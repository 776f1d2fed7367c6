#include <doctest.h>

#include <random>

#include "liecoh/cochain.hpp"
#include "liecoh/errors.hpp"
#include "liecoh/families.hpp"
#include "liecoh/quadratic.hpp"
#include "test_support.hpp"

using namespace liecoh;

namespace {

// Dual-basis helpers for D_{2n+2}: alpha = X0*, alpha_i = Xi*, beta = Y0*, beta_i = Yi*.
struct DiamondForms {
  int n;
  int dim() const { return 2 * n + 2; }
  ExteriorForm alpha(int i = 0) const { return ExteriorForm::covector(dim(), diamond_x(i)); }
  ExteriorForm beta(int i = 0) const { return ExteriorForm::covector(dim(), diamond_y(n, i)); }
};

ExteriorForm omega(const DiamondForms& f, const std::vector<Scalar>& lambda) {
  ExteriorForm out(f.dim(), 2);
  for (int i = 1; i <= f.n; ++i)
    out += lambda[static_cast<std::size_t>(i - 1)] * wedge(f.alpha(i), f.beta(i));
  return out;
}

Matrix sl2_trace_form() {
  Matrix b(3, 3);
  b(0, 0) = 2;
  b(1, 2) = 1;
  b(2, 1) = 1;
  return b;
}

LieAlgebra sl2() {
  Vector he = zero_vector(3), hf = zero_vector(3), ef = zero_vector(3);
  he[1] = 2;
  hf[2] = -2;
  ef[0] = 1;
  return LieAlgebra::from_structure_constants(3, {{0, 1, he}, {0, 2, hf}, {1, 2, ef}});
}

void check_poisson_matches_coboundary(const QuadraticStructure& q) {
  const auto& g = q.algebra();
  const int n = g.dim();
  for (int k = 1; k <= n; ++k)
    for (auto idx : basis(n, k)) {
      auto w = ExteriorForm::monomial(n, idx);
      CHECK(coboundary_via_poisson(q, w) == apply_coboundary(g, w));
    }
}

std::vector<Scalar> random_nonzero_lambda(std::mt19937_64& rng, int n) {
  std::vector<Scalar> out;
  while (static_cast<int>(out.size()) < n) {
    Scalar s = testing::random_scalar(rng);
    if (!s.is_zero()) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(diamond({Scalar(1), Scalar(2)}));
  CHECK_NOTHROW(QuadraticStructure::validate(abelian(3), Matrix::identity(3)));
  CHECK_NOTHROW(QuadraticStructure::validate(sl2(), sl2_trace_form()));
  CHECK_THROWS_AS(QuadraticStructure::validate(aff_r(), Matrix::identity(2)), NotInvariant);

  Matrix asym = Matrix::identity(2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(QuadraticStructure::validate(abelian(2), asym), NotSymmetric);
  Matrix degenerate(2, 2);
  degenerate(0, 0) = 1;
  CHECK_THROWS_AS(QuadraticStructure::validate(abelian(2), degenerate), Degenerate);
  CHECK_THROWS_AS(QuadraticStructure::validate(abelian(2), Matrix::identity(3)), DimensionMismatch);
}

TEST_CASE("metric-dual basis") {
  Matrix two(1, 1);
  two(0, 0) = 2;
  auto q = QuadraticStructure::validate(abelian(1), two);
  CHECK(sharp_basis(q) == std::vector<Vector>{Vector{Scalar::from_fraction(1, 2)}});

  auto [g, d] = diamond({Scalar(3), Scalar::imaginary_unit()});
  auto ys = sharp_basis(d);
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      CHECK(d.pairing(ys[static_cast<std::size_t>(i)], unit_vector(g.dim(), j)) == Scalar(i == j ? 1 : 0));
  // X_i and Y_i are metric duals of each other.
  CHECK(ys[diamond_x(1)] == unit_vector(6, diamond_y(2, 1)));
}

TEST_CASE("associated three-form of the diamond") {
  auto [g4, q4] = diamond({Scalar(1)});
  DiamondForms f4{1};
  CHECK(associated_three_form(q4) == wedge(wedge(f4.beta(), f4.alpha(1)), f4.beta(1)));

  std::mt19937_64 rng(7);
  for (int n = 1; n <= 3; ++n) {
    auto lambda = random_nonzero_lambda(rng, n);
    auto q = diamond(lambda).second;
    DiamondForms f{n};
    CHECK(associated_three_form(q) == wedge(f.beta(), omega(f, lambda)));
  }
}

TEST_CASE("super-Poisson bracket with I on the diamond") {
  const std::vector<Scalar> lambda{Scalar(2), Scalar(-2), Scalar::parse("1+i")};
  const int n = 3;
  auto q = diamond(lambda).second;
  DiamondForms f{n};
  const auto I = associated_three_form(q);
  const auto om = omega(f, lambda);
  const auto a = f.alpha(), b = f.beta();
  auto lam = [&](int i) { return lambda[static_cast<std::size_t>(i - 1)]; };

  for (int i = 1; i <= n; ++i) {
    CAPTURE(i);
    CHECK(super_poisson(q, I, wedge(a, f.alpha(i))) ==
          wedge(f.alpha(i), om) - lam(i) * wedge(wedge(a, b), f.alpha(i)));
    CHECK(super_poisson(q, I, wedge(a, f.beta(i))) ==
          wedge(f.beta(i), om) + lam(i) * wedge(wedge(a, b), f.beta(i)));
    for (int j = 1; j <= n; ++j) {
      CAPTURE(j);
      if (i < j) {
        CHECK(super_poisson(q, I, wedge(f.alpha(i), f.alpha(j))) ==
              (lam(i) + lam(j)) * wedge(wedge(b, f.alpha(i)), f.alpha(j)));
        CHECK(super_poisson(q, I, wedge(f.beta(i), f.beta(j))) ==
              -(lam(i) + lam(j)) * wedge(wedge(b, f.beta(i)), f.beta(j)));
      }
      CHECK(super_poisson(q, I, wedge(f.alpha(i), f.beta(j))) ==
            (lam(i) - lam(j)) * wedge(wedge(b, f.alpha(i)), f.beta(j)));
    }
  }
  CHECK(super_poisson(q, I, wedge(a, b)) == I);
  CHECK(apply_coboundary(q.algebra(), wedge(a, b)) == -I);
}

TEST_CASE("bracket edge cases") {
  auto q = diamond({Scalar(1)}).second;
  auto w = ExteriorForm::covector(4, 1);
  CHECK(super_poisson(q, ExteriorForm(4, 2), w).is_zero());
  CHECK_THROWS_AS(super_poisson(q, ExteriorForm::constant(4, Scalar(1)), w), DegreeZero);
  CHECK_THROWS_AS(super_poisson(q, w, ExteriorForm::constant(4, Scalar(1))), DegreeZero);
  CHECK(coboundary_via_poisson(q, ExteriorForm::constant(4, Scalar(5))).is_zero());

  auto flat = QuadraticStructure::validate(abelian(3), Matrix::identity(3));
  CHECK(associated_three_form(flat).is_zero());
  check_poisson_matches_coboundary(flat);
}

TEST_CASE("coboundary equals minus the bracket with I") {
  check_poisson_matches_coboundary(diamond({Scalar(1)}).second);
  check_poisson_matches_coboundary(diamond({Scalar(1), Scalar(1)}).second);
  check_poisson_matches_coboundary(QuadraticStructure::validate(sl2(), sl2_trace_form()));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 6; ++t) check_poisson_matches_coboundary(diamond(random_nonzero_lambda(rng, 1 + t % 3)).second);
}

TEST_CASE("bracket with I squares to zero") {
  std::mt19937_64 rng(41);
  auto q = diamond(random_nonzero_lambda(rng, 2)).second;
  for (int k = 1; k <= 4; ++k)
    for (int t = 0; t < 5; ++t) {
      auto w = testing::random_form(rng, 6, k);
      auto once = coboundary_via_poisson(q, w);
      if (once.degree() == 0 || once.is_zero()) continue;
      CHECK(coboundary_via_poisson(q, once).is_zero());
    }
}
