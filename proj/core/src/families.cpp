#include "liecoh/families.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace liecoh {

namespace {

std::vector<std::string> numbered(const std::string& stem, int first, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

std::vector<std::string> lowercase_all(std::vector<std::string> names) {
  for (auto& s : names)
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return names;
}

}  // namespace

LieAlgebra aff_r() {
  return LieAlgebra::from_structure_constants(2, {{0, 1, unit_vector(2, 1)}}, {"X", "Y"})
      .with_dual_labels({"x", "y"});
}

LieAlgebra abelian(int d) {
  if (d < 0) throw DimensionMismatch("abelian algebra needs d >= 0");
  auto labels = numbered("Z", 1, d);
  return LieAlgebra::from_structure_constants(d, {}, labels).with_dual_labels(lowercase_all(labels));
}

LieAlgebra heisenberg(int m) {
  if (m < 1) throw DimensionMismatch("heisenberg(m) needs m >= 1");
  const int n = 2 * m + 1;
  std::vector<BracketSpec> brackets;
  for (int i = 1; i <= m; ++i) brackets.push_back({i, m + i, unit_vector(n, 0)});
  std::vector<std::string> labels{"Z"};
  for (auto& s : numbered("X", 1, 2 * m)) labels.push_back(s);
  return LieAlgebra::from_structure_constants(n, brackets, labels)
      .with_dual_labels(lowercase_all(labels));
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  const int n = g.dim() + h.dim();
  std::vector<BracketSpec> brackets;
  for (const auto& b : g.nonzero_brackets()) {
    Vector v = zero_vector(n);
    for (int k = 0; k < g.dim(); ++k) v[static_cast<std::size_t>(k)] = b.coeffs[static_cast<std::size_t>(k)];
    brackets.push_back({b.i, b.j, std::move(v)});
  }
  for (const auto& b : h.nonzero_brackets()) {
    Vector v = zero_vector(n);
    for (int k = 0; k < h.dim(); ++k)
      v[static_cast<std::size_t>(g.dim() + k)] = b.coeffs[static_cast<std::size_t>(k)];
    brackets.push_back({g.dim() + b.i, g.dim() + b.j, std::move(v)});
  }

  std::vector<std::string> labels, duals;
  for (int i = 0; i < g.dim(); ++i) labels.push_back(g.label(i));
  for (int i = 0; i < h.dim(); ++i) labels.push_back(h.label(i));
  const bool named_duals = !g.dual_labels().empty() || !h.dual_labels().empty();
  auto dual_name = [](const LieAlgebra& a, int i) {
    return a.dual_labels().empty() ? a.label(i) + "*" : a.dual_labels()[static_cast<std::size_t>(i)];
  };
  for (int i = 0; i < g.dim(); ++i) duals.push_back(dual_name(g, i));
  for (int i = 0; i < h.dim(); ++i) duals.push_back(dual_name(h, i));

  // Identical labels from the two summands would make rendering ambiguous.
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    for (int i = 0; i < n; ++i) {
      labels[static_cast<std::size_t>(i)] = "e" + std::to_string(i);
      duals[static_cast<std::size_t>(i)] = "e" + std::to_string(i) + "*";
    }
  }
  auto sum = LieAlgebra::from_structure_constants(n, brackets, labels);
  return named_duals ? sum.with_dual_labels(duals) : sum;
}

std::pair<LieAlgebra, QuadraticStructure> diamond(const std::vector<Scalar>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n < 1) throw DimensionMismatch("diamond needs at least one lambda");
  const int dim = 2 * n + 2;
  const int x0 = diamond_x(0);
  const int y0 = diamond_y(n, 0);

  std::vector<BracketSpec> brackets;
  for (int i = 1; i <= n; ++i) {
    const Scalar& l = lambda[static_cast<std::size_t>(i - 1)];
    if (l.is_zero()) continue;
    const int xi = diamond_x(i);
    const int yi = diamond_y(n, i);
    Vector v = zero_vector(dim);
    v[static_cast<std::size_t>(x0)] = l;
    brackets.push_back({xi, yi, v});  // [X_i, Y_i] = λ_i X0
    // Stored with the smaller index first: [X_i, Y0] = -λ_i X_i.
    Vector w = zero_vector(dim);
    w[static_cast<std::size_t>(xi)] = -l;
    brackets.push_back({xi, y0, w});
    Vector u = zero_vector(dim);
    u[static_cast<std::size_t>(yi)] = -l;
    brackets.push_back({y0, yi, u});  // [Y0, Y_i] = -λ_i Y_i
  }

  std::vector<std::string> labels = numbered("X", 0, n + 1);
  for (auto& s : numbered("Y", 0, n + 1)) labels.push_back(s);
  std::vector<std::string> duals{"a"};
  for (auto& s : numbered("a", 1, n)) duals.push_back(s);
  duals.push_back("b");
  for (auto& s : numbered("b", 1, n)) duals.push_back(s);

  auto g = LieAlgebra::from_structure_constants(dim, brackets, labels).with_dual_labels(duals);

  Matrix form(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (int i = 0; i <= n; ++i) {
    const auto xi = static_cast<std::size_t>(diamond_x(i));
    const auto yi = static_cast<std::size_t>(diamond_y(n, i));
    form(xi, yi) = 1;
    form(yi, xi) = 1;
  }
  auto q = QuadraticStructure::validate(g, std::move(form));
  return {std::move(g), std::move(q)};
}

}  // namespace liecoh
