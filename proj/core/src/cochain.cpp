#include "liecoh/cochain.hpp"

#include <sstream>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

struct BracketTerm {
  int x;
  int y;
  Scalar c;  // coefficient of the target basis element in [e_x, e_y], x < y
};

// For every basis index l, the pairs x < y with a nonzero e_l-component.
std::vector<std::vector<BracketTerm>> bracket_terms_by_target(const LieAlgebra& g) {
  std::vector<std::vector<BracketTerm>> by_target(static_cast<std::size_t>(g.dim()));
  for (int x = 0; x < g.dim(); ++x)
    for (int y = x + 1; y < g.dim(); ++y)
      for (const auto& [l, c] : g.basis_bracket(x, y))
        by_target[static_cast<std::size_t>(l)].push_back({x, y, c});
  return by_target;
}

// δ(e_M*), for a single monomial: f(e_l, rest) is nonzero only when
// {l} ∪ rest = M, with value (-1)^(rank of l in M).
void add_monomial_coboundary(const std::vector<std::vector<BracketTerm>>& by_target,
                             MultiIndex m, const Scalar& coeff, ExteriorForm& out) {
  for (int l : m.indices()) {
    const MultiIndex rest = m.without(l);
    const bool odd_l = m.rank_of(l) % 2;
    for (const auto& t : by_target[static_cast<std::size_t>(l)]) {
      if (rest.contains(t.x) || rest.contains(t.y)) continue;
      const MultiIndex target = rest.with(t.x).with(t.y);
      const bool odd = (target.rank_of(t.x) + target.rank_of(t.y) + (odd_l ? 1 : 0)) % 2;
      Scalar v = coeff * t.c;
      out.add_term(target, odd ? -v : v);
    }
  }
}

void check_degree(const LieAlgebra& g, int k) {
  if (k < 0 || k > g.dim())
    throw DegreeOutOfRange("degree " + std::to_string(k) + " outside [0, " +
                           std::to_string(g.dim()) + "]");
}

std::vector<ExteriorForm> as_forms(const std::vector<Vector>& vectors, int dim, int degree) {
  std::vector<ExteriorForm> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(ExteriorForm::from_coordinates(dim, degree, v));
  return out;
}

std::vector<Vector> as_vectors(const std::vector<ExteriorForm>& forms, int dim, int degree) {
  std::vector<Vector> out;
  out.reserve(forms.size());
  for (const auto& w : forms) {
    if (w.dim() != dim || w.degree() != degree)
      throw DegreeMismatch("form does not live in the requested Λ^k");
    out.push_back(w.coordinates());
  }
  return out;
}

std::size_t binomial_size(int n, int k) { return basis(n, k).size(); }

}  // namespace

Matrix CoboundaryMatrix::dense() const {
  Matrix d(rows, cols);
  for (const auto& [rc, v] : entries) d(rc.first, rc.second) = v;
  return d;
}

ExteriorForm apply_coboundary(const LieAlgebra& g, const ExteriorForm& w) {
  if (w.dim() != g.dim())
    throw DimensionMismatch("form dimension " + std::to_string(w.dim()) +
                            " differs from algebra dimension " + std::to_string(g.dim()));
  ExteriorForm out(g.dim(), w.degree() + 1);
  if (w.degree() == 0) return out;
  const auto by_target = bracket_terms_by_target(g);
  for (const auto& [idx, c] : w.terms()) add_monomial_coboundary(by_target, idx, c, out);
  return out;
}

CoboundaryMatrix coboundary_matrix(const LieAlgebra& g, int k) {
  check_degree(g, k);
  const int n = g.dim();
  CoboundaryMatrix m;
  m.k = k;
  const auto cols = basis(n, k);
  m.cols = cols.size();
  if (k == n) return m;

  const auto rows = basis(n, k + 1);
  m.rows = rows.size();
  std::map<MultiIndex, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);

  const auto by_target = bracket_terms_by_target(g);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    ExteriorForm image(n, k + 1);
    if (k > 0) add_monomial_coboundary(by_target, cols[c], Scalar(1), image);
    for (const auto& [idx, v] : image.terms()) m.entries.emplace(std::pair{row_of.at(idx), c}, v);
  }
  return m;
}

std::size_t rank_exact(const CoboundaryMatrix& m) {
  if (m.entries.empty()) return 0;
  return rank_fraction_free(m.dense());
}

BettiProfile betti_profile(const LieAlgebra& g) {
  const int n = g.dim();
  BettiProfile p;
  p.n = n;
  const auto size = static_cast<std::size_t>(n + 1);
  p.ranks.assign(size, 0);
  for (int k = 0; k < n; ++k) p.ranks[static_cast<std::size_t>(k)] = rank_exact(coboundary_matrix(g, k));
  p.b.resize(size);
  p.kernels.resize(size);
  p.images.resize(size);
  for (int k = 0; k <= n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const std::size_t dim_ck = binomial_size(n, k);
    p.images[ku] = k == 0 ? 0 : p.ranks[ku - 1];
    p.kernels[ku] = dim_ck - p.ranks[ku];
    p.b[ku] = dim_ck - p.images[ku] - p.ranks[ku];
  }
  return p;
}

std::size_t betti(const LieAlgebra& g, int k) {
  check_degree(g, k);
  const std::size_t into = k == 0 ? 0 : rank_exact(coboundary_matrix(g, k - 1));
  const std::size_t out = rank_exact(coboundary_matrix(g, k));
  return binomial_size(g.dim(), k) - into - out;
}

std::vector<ExteriorForm> cocycle_basis(const LieAlgebra& g, int k) {
  check_degree(g, k);
  const auto m = coboundary_matrix(g, k);
  if (m.rows == 0) return as_forms(kernel_basis(Matrix(0, m.cols)), g.dim(), k);
  return as_forms(kernel_basis(m.dense()), g.dim(), k);
}

std::vector<ExteriorForm> coboundary_basis(const LieAlgebra& g, int k) {
  check_degree(g, k);
  if (k == 0) return {};
  return as_forms(column_space_basis(coboundary_matrix(g, k - 1).dense()), g.dim(), k);
}

std::vector<ExteriorForm> cohomology_representatives(const LieAlgebra& g, int k) {
  const auto boundaries = coboundary_basis(g, k);
  const auto cycles = cocycle_basis(g, k);
  const auto n = static_cast<std::size_t>(binomial_size(g.dim(), k));

  std::vector<Vector> current = as_vectors(boundaries, g.dim(), k);
  std::size_t rank = current.size();
  std::vector<ExteriorForm> reps;
  for (const auto& z : cycles) {
    current.push_back(z.coordinates());
    std::size_t r = rank_of_vectors(current, n);
    if (r > rank) {
      rank = r;
      reps.push_back(z);
    } else {
      current.pop_back();
    }
  }
  return reps;
}

std::size_t span_rank(const std::vector<ExteriorForm>& forms, int dim, int degree) {
  return rank_of_vectors(as_vectors(forms, dim, degree), binomial_size(dim, degree));
}

bool span_contains(const std::vector<ExteriorForm>& space, const std::vector<ExteriorForm>& sub,
                   int dim, int degree) {
  std::vector<ExteriorForm> joined = space;
  joined.insert(joined.end(), sub.begin(), sub.end());
  return span_rank(joined, dim, degree) == span_rank(space, dim, degree);
}

std::string export_matrix(const CoboundaryMatrix& m) {
  std::ostringstream os;
  os << "% " << m.k << ' ' << m.rows << ' ' << m.cols << '\n';
  for (const auto& [rc, v] : m.entries) {
    std::string value = v.str();
    if (!v.is_real()) {
      // Keep one whitespace-free token per field.
      std::string compact;
      for (char ch : value)
        if (ch != ' ' && ch != '(' && ch != ')') compact += ch;
      value = compact;
    }
    os << rc.first << ' ' << rc.second << ' ' << value << '\n';
  }
  return os.str();
}

}  // namespace liecoh
