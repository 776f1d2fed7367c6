#pragma once

#include <vector>

#include "liecoh/exterior.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

/// A Lie algebra together with a non-degenerate invariant symmetric bilinear
/// form B. Immutable; the metric-dual basis and its Gram matrix are computed
/// once at validation.
class QuadraticStructure {
 public:
  /// Checks symmetry, non-degeneracy and B([x,y],z) = B(x,[y,z]) on every
  /// basis triple. Throws NotSymmetric, Degenerate or NotInvariant.
  static QuadraticStructure validate(LieAlgebra g, Matrix form);

  const LieAlgebra& algebra() const { return algebra_; }
  const Matrix& form() const { return form_; }
  /// Column i is Y_i with B(Y_i, ·) = e_i*.
  const Matrix& sharp() const { return sharp_; }
  /// gram()(i, j) = B(Y_i, Y_j).
  const Matrix& gram() const { return gram_; }

  Scalar pairing(const Vector& x, const Vector& y) const;

 private:
  QuadraticStructure(LieAlgebra g, Matrix form, Matrix sharp, Matrix gram)
      : algebra_(std::move(g)), form_(std::move(form)), sharp_(std::move(sharp)), gram_(std::move(gram)) {}

  LieAlgebra algebra_;
  Matrix form_;
  Matrix sharp_;
  Matrix gram_;
};

/// Y_0..Y_{n-1} as coefficient vectors.
std::vector<Vector> sharp_basis(const QuadraticStructure& q);

/// I(x, y, z) = B([x, y], z) as a degree-3 form.
ExteriorForm associated_three_form(const QuadraticStructure& q);

/// {a, b} = (-1)^{deg a + 1} Σ_{i,j} B(Y_i, Y_j) ι_{e_i}(a) ^ ι_{e_j}(b).
/// Throws DegreeZero when either argument has degree 0.
ExteriorForm super_poisson(const QuadraticStructure& q, const ExteriorForm& a,
                           const ExteriorForm& b);

/// -{I, w}; zero on degree-0 input.
ExteriorForm coboundary_via_poisson(const QuadraticStructure& q, const ExteriorForm& w);

}  // namespace liecoh
