// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Expected values come from oracles written here (Pascal's triangle,
// direct convolution, class counting), not from the library's closed forms.

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liecoh/closed_forms.hpp"
#include "liecoh/cochain.hpp"
#include "liecoh/families.hpp"
#include "liecoh/quadratic.hpp"
#include "liecoh/sampling.hpp"
#include "test_support.hpp"

using namespace liecoh;

namespace {

using Profile = std::vector<std::uint64_t>;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

std::string show(const Profile& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + std::to_string(p[i]);
  return s + ")";
}

Profile engine(const LieAlgebra& g) {
  auto b = betti_profile(g).b;
  return {b.begin(), b.end()};
}

std::int64_t pascal(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<std::int64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(r) + 1, 1);
    for (int c = 1; c < r; ++c) next[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c) - 1] + row[static_cast<std::size_t>(c)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Profile binomial_profile(int n) {
  Profile p;
  for (int k = 0; k <= n; ++k) p.push_back(static_cast<std::uint64_t>(pascal(n, k)));
  return p;
}

Profile convolve(const Profile& a, const Profile& b) {
  Profile c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// C(2m, k) - C(2m, k-2) on the lower half, mirrored above.
Profile heisenberg_oracle(int m) {
  const int n = 2 * m + 1;
  Profile p(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= m; ++k) {
    auto v = static_cast<std::uint64_t>(pascal(2 * m, k) - pascal(2 * m, k - 2));
    p[static_cast<std::size_t>(k)] = v;
    p[static_cast<std::size_t>(n - k)] = v;
  }
  return p;
}

// Σ n_j^2 - 1 with classes λ ~ ±λ, counted by pairwise comparison.
std::uint64_t class_count_oracle(const std::vector<Scalar>& lambda) {
  std::vector<bool> seen(lambda.size(), false);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t size = 0;
    for (std::size_t j = i; j < lambda.size(); ++j)
      if (!seen[j] && (lambda[j] == lambda[i] || lambda[j] == -lambda[i])) {
        seen[j] = true;
        ++size;
      }
    total += size * size;
  }
  return total - 1;
}

std::string show(const std::vector<Scalar>& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? ", " : "") + lambda[i].str();
  return s + ")";
}

bool duality_holds(const Profile& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != p[p.size() - 1 - k]) return false;
  return true;
}

// Inputs shared by criteria 3, 4, 6 and 10.
std::vector<std::pair<int, int>> heisenberg_ext_pairs() { return {{1, 5}, {1, 6}, {2, 7}, {2, 8}, {3, 9}, {3, 10}}; }

std::vector<std::vector<Scalar>> random_diamond_parameters() {
  std::mt19937_64 rng(20180101);
  std::vector<std::vector<Scalar>> out;
  for (int t = 0; t < 60; ++t) out.push_back(sample_lambda(rng, 1 + t % 4));
  return out;
}

std::vector<std::vector<Scalar>> special_diamond_parameters() {
  std::vector<std::vector<Scalar>> out;
  const Scalar c = Scalar::parse("2/3+1i");
  for (int n = 1; n <= 4; ++n) {
    std::vector<Scalar> same, distinct;
    for (int i = 0; i < n; ++i) {
      same.push_back(i % 3 == 1 ? -c : c);
      distinct.push_back(i % 2 ? Scalar(i + 1) * Scalar::imaginary_unit() : Scalar(-(i + 1)));
    }
    out.push_back(same);
    out.push_back(distinct);
  }
  return out;
}

Outcome aff_profile() {
  Outcome o;
  auto p = engine(aff_r());
  if (p != Profile{1, 1, 0}) o.fail("aff(R): got " + show(p));
  return o;
}

Outcome aff_ext_profiles() {
  Outcome o;
  for (int n = 3; n <= 10; ++n) {
    auto p = engine(direct_sum(aff_r(), abelian(n - 2)));
    auto expected = binomial_profile(n - 1);
    expected.push_back(0);
    if (p != expected) o.fail("n=" + std::to_string(n) + ": got " + show(p) + ", expected " + show(expected));
  }
  return o;
}

Outcome heisenberg_profiles() {
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    auto p = engine(heisenberg(m));
    if (p != heisenberg_oracle(m)) o.fail("m=" + std::to_string(m) + ": got " + show(p));
  }
  if (engine(heisenberg(1)) != Profile{1, 2, 2, 1}) o.fail("h3 literal");
  if (engine(heisenberg(2)) != Profile{1, 4, 5, 5, 4, 1}) o.fail("h5 literal");
  return o;
}

Outcome heisenberg_ext_profiles() {
  Outcome o;
  for (auto [m, n] : heisenberg_ext_pairs()) {
    auto p = engine(direct_sum(heisenberg(m), abelian(n - 2 * m - 1)));
    auto oracle = convolve(engine(heisenberg(m)), binomial_profile(n - 2 * m - 1));
    const std::string tag = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
    if (p != oracle) o.fail(tag + ": engine " + show(p) + " vs convolution " + show(oracle));
    for (int k = 0; k <= n; ++k)
      if (betti_heisenberg_ext(m, n, k) != p[static_cast<std::size_t>(k)])
        o.fail(tag + " k=" + std::to_string(k) + ": formula " + std::to_string(betti_heisenberg_ext(m, n, k)) +
               " vs engine " + std::to_string(p[static_cast<std::size_t>(k)]));
  }
  if (engine(direct_sum(heisenberg(2), abelian(2)))[3] != 19) o.fail("spot value (2,7,3) != 19");
  return o;
}

Outcome d4_second_cohomology() {
  Outcome o;
  auto g = diamond({Scalar(1)}).first;
  if (betti(g, 2) != 0) o.fail("b2(D4) = " + std::to_string(betti(g, 2)));
  if (!cohomology_representatives(g, 2).empty()) o.fail("nonempty degree-2 representatives");
  return o;
}

Outcome diamond_b2_sweep() {
  Outcome o;
  auto params = random_diamond_parameters();
  auto specials = special_diamond_parameters();
  params.insert(params.end(), specials.begin(), specials.end());
  for (const auto& lambda : params) {
    const auto b2 = betti(diamond(lambda).first, 2);
    const auto expected = class_count_oracle(lambda);
    if (b2 != expected)
      o.fail("Λ=" + show(lambda) + ": engine " + std::to_string(b2) + ", expected " + std::to_string(expected));
  }
  for (std::size_t i = 0; i < specials.size(); ++i) {
    const auto n = specials[i].size();
    const auto expected = i % 2 == 0 ? n * n - 1 : n - 1;
    if (betti(diamond(specials[i]).first, 2) != expected) o.fail("special case Λ=" + show(specials[i]));
  }
  o.detail = o.ok ? std::to_string(params.size()) + " parameter vectors" : o.detail;
  return o;
}

Outcome poisson_coboundary() {
  Outcome o;
  std::vector<std::vector<Scalar>> params{{Scalar(1)},
                                          {Scalar(1), Scalar(1)},
                                          {Scalar(1), Scalar(-1)},
                                          {Scalar(2), Scalar::imaginary_unit()},
                                          {Scalar(1), Scalar(2), Scalar(3)}};
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 6; ++t) {
    std::vector<Scalar> lambda;
    while (static_cast<int>(lambda.size()) < 1 + t % 3) lambda.push_back(testing::random_scalar(rng));
    params.push_back(lambda);
  }
  std::size_t checked = 0;
  for (const auto& lambda : params) {
    auto q = diamond(lambda).second;
    const auto& g = q.algebra();
    for (int k = 1; k <= g.dim(); ++k)
      for (auto idx : basis(g.dim(), k)) {
        auto w = ExteriorForm::monomial(g.dim(), idx);
        ++checked;
        if (coboundary_via_poisson(q, w) != apply_coboundary(g, w))
          o.fail("Λ=" + show(lambda) + " on " + render(w, g.dual_labels()));
      }
  }
  if (o.ok) o.detail = std::to_string(checked) + " monomials";
  return o;
}

Outcome z2_b2_structure() {
  Outcome o;
  std::vector<std::vector<Scalar>> params{{Scalar(1)},
                                          {Scalar(1), Scalar(-1)},
                                          {Scalar(1), Scalar(1)},
                                          {Scalar(2), Scalar(3)},
                                          {Scalar(1), Scalar(-1), Scalar(1)},
                                          {Scalar::imaginary_unit(), Scalar(2), -Scalar::imaginary_unit()}};
  std::mt19937_64 rng(99);
  for (int t = 0; t < 6; ++t) params.push_back(sample_lambda(rng, 1 + t % 3));

  for (const auto& lambda : params) {
    const int n = static_cast<int>(lambda.size());
    const int dim = 2 * n + 2;
    auto [g, q] = diamond(lambda);
    auto alpha = [&](int i) { return ExteriorForm::covector(dim, diamond_x(i)); };
    auto beta = [&](int i) { return ExteriorForm::covector(dim, diamond_y(n, i)); };
    auto lam = [&](int i) { return lambda[static_cast<std::size_t>(i - 1)]; };
    const std::string tag = "Λ=" + show(lambda);

    ExteriorForm omega(dim, 2);
    for (int i = 1; i <= n; ++i) omega += lam(i) * wedge(alpha(i), beta(i));

    auto b2 = coboundary_basis(g, 2);
    if (b2.size() != static_cast<std::size_t>(2 * n + 1)) o.fail(tag + ": dim B2 = " + std::to_string(b2.size()));
    const auto I = associated_three_form(q);
    std::vector<ExteriorForm> contractions;
    for (int x = 0; x < dim; ++x) contractions.push_back(interior_product(x, I));
    if (span_rank(contractions, dim, 2) != b2.size() || !span_contains(b2, contractions, dim, 2) ||
        !span_contains(contractions, b2, dim, 2))
      o.fail(tag + ": B2 differs from the contractions of I");

    std::vector<ExteriorForm> listed{omega};
    for (int i = 1; i <= n; ++i) {
      listed.push_back(wedge(beta(0), alpha(i)));
      listed.push_back(wedge(beta(0), beta(i)));
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i < j && (lam(i) + lam(j)).is_zero()) {
          listed.push_back(wedge(alpha(i), alpha(j)));
          listed.push_back(wedge(beta(i), beta(j)));
        }
        if ((lam(i) - lam(j)).is_zero()) listed.push_back(wedge(alpha(i), beta(j)));
      }
    auto z2 = cocycle_basis(g, 2);
    if (span_rank(listed, dim, 2) != z2.size())
      o.fail(tag + ": listed span has dim " + std::to_string(span_rank(listed, dim, 2)) + ", Z2 has " +
             std::to_string(z2.size()));
    if (!span_contains(z2, listed, dim, 2) || !span_contains(listed, z2, dim, 2))
      o.fail(tag + ": Z2 and the listed span are not mutually contained");
  }
  return o;
}

Outcome property_suite() {
  Outcome o;
  auto algebras = testing::family_zoo();
  for (int n = 2; n <= 6; ++n) algebras.emplace_back("aff+R", direct_sum(aff_r(), abelian(n - 2)));
  for (int m = 1; m <= 2; ++m) algebras.emplace_back("h", heisenberg(m));
  std::mt19937_64 rng(777);
  for (int t = 0; t < 100; ++t)
    algebras.emplace_back("random#" + std::to_string(t), testing::random_lie_algebra(rng, 1 + t % 6));

  for (const auto& [name, g] : algebras) {
    const int n = g.dim();
    for (int k = 0; k + 1 < n; ++k) {
      auto d0 = coboundary_matrix(g, k).dense();
      auto d1 = coboundary_matrix(g, k + 1).dense();
      if (!(d1 * d0).is_zero()) o.fail(name + ": δδ != 0 at degree " + std::to_string(k));
    }
    auto p = betti_profile(g);
    if (p.b[0] != 1) o.fail(name + ": b0 != 1");
    std::int64_t euler = 0;
    for (int k = 0; k <= n; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      euler += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(p.b[kk]);
      const auto columns = static_cast<std::size_t>(pascal(n, k));
      const auto rank = testing::rank_by_rref(coboundary_matrix(g, k).dense());
      if (p.kernels[kk] + rank != columns || p.ranks[kk] != rank)
        o.fail(name + ": rank-nullity at degree " + std::to_string(k));
    }
    // The alternating sum of C(n, k) vanishes only for n >= 1.
    if (n >= 1 && euler != 0) o.fail(name + ": Euler characteristic " + std::to_string(euler));
  }
  if (o.ok) o.detail = std::to_string(algebras.size()) + " algebras";
  return o;
}

Outcome poincare_duality() {
  Outcome o;
  for (int m = 1; m <= 3; ++m)
    if (!duality_holds(engine(heisenberg(m)))) o.fail("h" + std::to_string(2 * m + 1));
  for (auto [m, n] : heisenberg_ext_pairs())
    if (!duality_holds(engine(direct_sum(heisenberg(m), abelian(n - 2 * m - 1)))))
      o.fail("(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")");
  auto params = random_diamond_parameters();
  auto specials = special_diamond_parameters();
  params.insert(params.end(), specials.begin(), specials.end());
  for (const auto& lambda : params)
    if (!duality_holds(engine(diamond(lambda).first))) o.fail("Λ=" + show(lambda));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"aff(R) profile is (1, 1, 0)", aff_profile},
      {"aff(R) + R^(n-2) profile is C(n-1, k), n = 3..10", aff_ext_profiles},
      {"Heisenberg h_{2m+1} profiles, m = 1..3", heisenberg_profiles},
      {"Heisenberg + abelian: formula, engine and Kunneth agree", heisenberg_ext_profiles},
      {"D4 has trivial second cohomology", d4_second_cohomology},
      {"diamond b2 = sum n_j^2 - 1 over seeded and special parameters", diamond_b2_sweep},
      {"coboundary equals -{I, .} on every diamond monomial, n <= 3", poisson_coboundary},
      {"diamond Z2 and B2 match the listed spanning sets", z2_b2_structure},
      {"complex invariants on constructed and random algebras", property_suite},
      {"Poincare duality on Heisenberg and diamond inputs", poincare_duality},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
