#pragma once

#include <utility>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/quadratic.hpp"

namespace liecoh {

/// aff(R): basis (X, Y), [X, Y] = Y.
LieAlgebra aff_r();

/// Abelian algebra of dimension d (basis Z1..Zd).
LieAlgebra abelian(int d);

/// Heisenberg algebra h_{2m+1}: basis (Z, X1..X2m), [X_i, X_{m+i}] = Z.
LieAlgebra heisenberg(int m);

/// g ⊕ h with g's basis first and no cross brackets.
LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

/// Generalized diamond algebra D_{2n+2}(Λ) on the basis (X0..Xn, Y0..Yn):
///   [Y0, X_i] = λ_i X_i,  [Y0, Y_i] = -λ_i Y_i,  [X_i, Y_i] = λ_i X0,
/// with B(X_i, Y_i) = 1 and every other basis pairing zero. Zero entries of
/// Λ are allowed. The dual basis is labelled (a, a1..an, b, b1..bn).
std::pair<LieAlgebra, QuadraticStructure> diamond(const std::vector<Scalar>& lambda);

/// Index helpers for the diamond basis with n = |Λ|.
constexpr int diamond_x(int i) { return i; }
constexpr int diamond_y(int n, int i) { return n + 1 + i; }

}  // namespace liecoh
