#include "liecoh/lie_algebra.hpp"

#include <set>
#include <sstream>

#include "liecoh/linalg.hpp"

namespace liecoh {

namespace {

std::string vector_str(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

const SparseVector kZero;

}  // namespace

JacobiViolation::JacobiViolation(int i, int j, int k, Vector residual)
    : Error("Jacobi identity fails on basis triple (" + std::to_string(i) + ", " +
            std::to_string(j) + ", " + std::to_string(k) + "): residual " + vector_str(residual)),
      i_(i),
      j_(j),
      k_(k),
      residual_(std::move(residual)) {}

LieAlgebra LieAlgebra::from_structure_constants(int dim, const std::vector<BracketSpec>& brackets,
                                                std::vector<std::string> labels) {
  if (dim < 0 || dim > kMaxDim)
    throw IndexOutOfRange("dimension " + std::to_string(dim) + " outside [0, " +
                          std::to_string(kMaxDim) + "]");
  if (!labels.empty() && static_cast<int>(labels.size()) != dim)
    throw DimensionMismatch("expected " + std::to_string(dim) + " labels, got " +
                            std::to_string(labels.size()));

  LieAlgebra g;
  g.dim_ = dim;
  g.table_.assign(static_cast<std::size_t>(dim * dim), {});
  g.labels_ = std::move(labels);

  std::set<std::pair<int, int>> seen;
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j >= dim || b.i >= b.j)
      throw IndexOutOfRange("bracket pair (" + std::to_string(b.i) + ", " + std::to_string(b.j) +
                            ") must satisfy 0 <= i < j < " + std::to_string(dim));
    if (static_cast<int>(b.coeffs.size()) != dim)
      throw DimensionMismatch("coefficient vector of [e" + std::to_string(b.i) + ", e" +
                              std::to_string(b.j) + "] has length " +
                              std::to_string(b.coeffs.size()) + ", expected " +
                              std::to_string(dim));
    if (!seen.insert({b.i, b.j}).second)
      throw DuplicatePair("bracket pair (" + std::to_string(b.i) + ", " + std::to_string(b.j) +
                          ") given twice");
    SparseVector forward, backward;
    for (int k = 0; k < dim; ++k) {
      const Scalar& c = b.coeffs[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      forward.emplace_back(k, c);
      backward.emplace_back(k, -c);
    }
    g.table_[g.slot(b.i, b.j)] = std::move(forward);
    g.table_[g.slot(b.j, b.i)] = std::move(backward);
  }

  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        Vector r = jacobiator(g, i, j, k);
        if (!is_zero(r)) throw JacobiViolation(i, j, k, std::move(r));
      }
  return g;
}

const SparseVector& LieAlgebra::basis_bracket(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw IndexOutOfRange("basis index outside [0, " + std::to_string(dim_) + ")");
  if (i == j) return kZero;
  return table_[slot(i, j)];
}

Scalar LieAlgebra::structure_constant(int i, int j, int k) const {
  for (const auto& [idx, c] : basis_bracket(i, j))
    if (idx == k) return c;
  return Scalar(0);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw DimensionMismatch("bracket arguments must have length " + std::to_string(dim_));
  Vector out = zero_vector(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (i == j || y[static_cast<std::size_t>(j)].is_zero()) continue;
      const auto& b = table_[slot(i, j)];
      if (b.empty()) continue;
      Scalar xy = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (const auto& [k, c] : b) out[static_cast<std::size_t>(k)] += xy * c;
    }
  }
  return out;
}

std::vector<BracketSpec> LieAlgebra::nonzero_brackets() const {
  std::vector<BracketSpec> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      const auto& b = table_[slot(i, j)];
      if (!b.empty()) out.push_back({i, j, to_dense(b, dim_)});
    }
  return out;
}

std::size_t LieAlgebra::bracket_count() const {
  std::size_t n = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (!table_[slot(i, j)].empty()) ++n;
  return n;
}

std::string LieAlgebra::label(int i) const {
  if (!labels_.empty()) return labels_.at(static_cast<std::size_t>(i));
  return "e" + std::to_string(i);
}

LieAlgebra LieAlgebra::with_dual_labels(std::vector<std::string> names) const {
  if (!names.empty() && static_cast<int>(names.size()) != dim_)
    throw DimensionMismatch("expected " + std::to_string(dim_) + " dual labels");
  LieAlgebra g = *this;
  g.dual_labels_ = std::move(names);
  return g;
}

Vector to_dense(const SparseVector& v, int dim) {
  Vector out = zero_vector(dim);
  for (const auto& [k, c] : v) out.at(static_cast<std::size_t>(k)) = c;
  return out;
}

Vector jacobiator(const LieAlgebra& g, int i, int j, int k) {
  const int n = g.dim();
  Vector total = zero_vector(n);
  auto add = [&](int a, int b, int c) {
    // [[e_a, e_b], e_c]
    for (const auto& [l, coeff] : g.basis_bracket(a, b))
      for (const auto& [m, coeff2] : g.basis_bracket(l, c))
        total[static_cast<std::size_t>(m)] += coeff * coeff2;
  };
  add(i, j, k);
  add(j, k, i);
  add(k, i, j);
  return total;
}

int derived_ideal_dim(const LieAlgebra& g) {
  std::vector<Vector> spans;
  for (auto& b : g.nonzero_brackets()) spans.push_back(std::move(b.coeffs));
  return static_cast<int>(rank_of_vectors(spans, static_cast<std::size_t>(g.dim())));
}

}  // namespace liecoh
