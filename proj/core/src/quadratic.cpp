#include "liecoh/quadratic.hpp"

#include <string>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

Scalar basis_pairing(const Matrix& form, const SparseVector& x, std::size_t z) {
  Scalar s;
  for (const auto& [k, c] : x)
    if (!form(static_cast<std::size_t>(k), z).is_zero()) s += c * form(static_cast<std::size_t>(k), z);
  return s;
}

}  // namespace

QuadraticStructure QuadraticStructure::validate(LieAlgebra g, Matrix form) {
  const auto n = static_cast<std::size_t>(g.dim());
  if (form.rows() != n || form.cols() != n)
    throw DimensionMismatch("bilinear form must be " + std::to_string(n) + "x" + std::to_string(n));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (form(i, j) != form(j, i))
        throw NotSymmetric("B(e" + std::to_string(i) + ", e" + std::to_string(j) + ") = " +
                           form(i, j).str() + " but B(e" + std::to_string(j) + ", e" +
                           std::to_string(i) + ") = " + form(j, i).str());

  if (determinant(form).is_zero()) throw Degenerate("bilinear form has zero determinant");

  const int dim = g.dim();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        // B([e_i, e_j], e_k) against B(e_i, [e_j, e_k])
        Scalar lhs = basis_pairing(form, g.basis_bracket(i, j), static_cast<std::size_t>(k));
        Scalar rhs = basis_pairing(form, g.basis_bracket(j, k), static_cast<std::size_t>(i));
        if (lhs != rhs)
          throw NotInvariant(i, j, k,
                             "B([e" + std::to_string(i) + ", e" + std::to_string(j) + "], e" +
                                 std::to_string(k) + ") = " + lhs.str() + " but B(e" +
                                 std::to_string(i) + ", [e" + std::to_string(j) + ", e" +
                                 std::to_string(k) + "]) = " + rhs.str());
      }

  // B(Y_i, e_j) = δ_ij means form^T * sharp = I, and B symmetric.
  Matrix sharp = *inverse(form);
  Matrix gram = sharp.transpose() * form * sharp;
  return QuadraticStructure(std::move(g), std::move(form), std::move(sharp), std::move(gram));
}

Scalar QuadraticStructure::pairing(const Vector& x, const Vector& y) const {
  const auto n = form_.rows();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("pairing arguments have wrong length");
  Scalar s;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!y[j].is_zero() && !form_(i, j).is_zero()) s += x[i] * form_(i, j) * y[j];
  }
  return s;
}

std::vector<Vector> sharp_basis(const QuadraticStructure& q) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < q.sharp().cols(); ++i) out.push_back(q.sharp().column(i));
  return out;
}

ExteriorForm associated_three_form(const QuadraticStructure& q) {
  const LieAlgebra& g = q.algebra();
  const int n = g.dim();
  ExteriorForm out(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& b = g.basis_bracket(i, j);
      if (b.empty()) continue;
      for (int k = j + 1; k < n; ++k)
        out.add_term(MultiIndex{i, j, k}, basis_pairing(q.form(), b, static_cast<std::size_t>(k)));
    }
  return out;
}

ExteriorForm super_poisson(const QuadraticStructure& q, const ExteriorForm& a,
                           const ExteriorForm& b) {
  const int n = q.algebra().dim();
  if (a.dim() != n || b.dim() != n)
    throw DimensionMismatch("forms must live over the algebra's dimension");
  if (a.degree() == 0 || b.degree() == 0)
    throw DegreeZero("super-Poisson bracket needs forms of degree >= 1");

  std::vector<ExteriorForm> contracted_a, contracted_b;
  for (int i = 0; i < n; ++i) {
    contracted_a.push_back(interior_product(i, a));
    contracted_b.push_back(interior_product(i, b));
  }
  ExteriorForm out(n, a.degree() + b.degree() - 2);
  for (int i = 0; i < n; ++i) {
    if (contracted_a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      const Scalar& gij = q.gram()(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (gij.is_zero() || contracted_b[static_cast<std::size_t>(j)].is_zero()) continue;
      out += gij * wedge(contracted_a[static_cast<std::size_t>(i)],
                         contracted_b[static_cast<std::size_t>(j)]);
    }
  }
  if (a.degree() % 2 == 0) out = -out;  // (-1)^{deg a + 1}
  return out;
}

ExteriorForm coboundary_via_poisson(const QuadraticStructure& q, const ExteriorForm& w) {
  if (w.degree() == 0) return ExteriorForm(w.dim(), 1);
  return -super_poisson(q, associated_three_form(q), w);
}

}  // namespace liecoh
