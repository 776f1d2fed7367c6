#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/exterior.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

/// Matrix of δ_k : Λ^k(g*) → Λ^{k+1}(g*) with trivial coefficients. Rows and
/// columns follow basis(n, k+1) and basis(n, k).
struct CoboundaryMatrix {
  int k = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> entries;

  Matrix dense() const;
};

/// δw, evaluated from
///   δf(X_0..X_k) = Σ_{i<j} (-1)^{i+j} f([X_i, X_j], X_0, .., ^X_i, .., ^X_j, .., X_k).
ExteriorForm apply_coboundary(const LieAlgebra& g, const ExteriorForm& w);

/// Assembled column by column from apply_coboundary on basis monomials.
CoboundaryMatrix coboundary_matrix(const LieAlgebra& g, int k);

std::size_t rank_exact(const CoboundaryMatrix& m);

/// Per-degree ranks and Betti numbers. Vectors are indexed by degree 0..n;
/// ranks[k] = rank δ_k (ranks[n] = 0), images[k] = dim B^k = rank δ_{k-1},
/// kernels[k] = dim Z^k.
struct BettiProfile {
  int n = 0;
  std::vector<std::size_t> b;
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> kernels;
  std::vector<std::size_t> images;
};

BettiProfile betti_profile(const LieAlgebra& g);
std::size_t betti(const LieAlgebra& g, int k);

/// Basis of Z^k = ker δ_k.
std::vector<ExteriorForm> cocycle_basis(const LieAlgebra& g, int k);
/// Basis of B^k = im δ_{k-1} (empty for k = 0).
std::vector<ExteriorForm> coboundary_basis(const LieAlgebra& g, int k);
/// Cocycles completing coboundary_basis(g, k) to a basis of Z^k; one per class
/// of a basis of H^k.
std::vector<ExteriorForm> cohomology_representatives(const LieAlgebra& g, int k);

/// Rank of a family of degree-k forms, as coordinate vectors.
std::size_t span_rank(const std::vector<ExteriorForm>& forms, int dim, int degree);
/// True when every form in `sub` lies in span(`space`).
bool span_contains(const std::vector<ExteriorForm>& space, const std::vector<ExteriorForm>& sub,
                   int dim, int degree);

/// Coordinate list: header `% k rows cols`, then one `row col value` line per
/// nonzero entry in (row, col) order.
std::string export_matrix(const CoboundaryMatrix& m);

}  // namespace liecoh
