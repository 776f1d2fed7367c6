#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liecoh/errors.hpp"
#include "liecoh/scalar.hpp"

namespace liecoh {

/// Sparse vector: (basis index, nonzero coefficient), sorted by index.
using SparseVector = std::vector<std::pair<int, Scalar>>;

/// One bracket [e_i, e_j] as given to the constructor; i < j required.
struct BracketSpec {
  int i = 0;
  int j = 0;
  Vector coeffs;
};

class JacobiViolation : public Error {
 public:
  JacobiViolation(int i, int j, int k, Vector residual);
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }
  const Vector& residual() const { return residual_; }

 private:
  int i_, j_, k_;
  Vector residual_;
};

/// Finite-dimensional Lie algebra given by structure constants on a fixed
/// basis e_0..e_{n-1}. Only [e_i, e_j] with i < j is stored; the rest follows
/// by antisymmetry. Immutable once constructed.
class LieAlgebra {
 public:
  /// Largest supported dimension (multi-indices are 64-bit masks).
  static constexpr int kMaxDim = 64;

  /// Validates indices, coefficient lengths, duplicates and the Jacobi
  /// identity on every triple i < j < k.
  static LieAlgebra from_structure_constants(int dim, const std::vector<BracketSpec>& brackets,
                                             std::vector<std::string> labels = {});

  int dim() const { return dim_; }

  /// [e_i, e_j] for any i, j (sign-adjusted, empty when zero).
  const SparseVector& basis_bracket(int i, int j) const;
  /// Coefficient of e_k in [e_i, e_j].
  Scalar structure_constant(int i, int j, int k) const;

  /// Bilinear extension to arbitrary coefficient vectors.
  Vector bracket(const Vector& x, const Vector& y) const;

  /// The nonzero [e_i, e_j] with i < j, in (i, j) lexicographic order.
  std::vector<BracketSpec> nonzero_brackets() const;
  std::size_t bracket_count() const;

  const std::vector<std::string>& labels() const { return labels_; }
  /// labels()[i] when labels are present, otherwise "e<i>".
  std::string label(int i) const;

  /// Names of the dual basis used when rendering forms.
  const std::vector<std::string>& dual_labels() const { return dual_labels_; }
  LieAlgebra with_dual_labels(std::vector<std::string> names) const;

 private:
  LieAlgebra() = default;
  std::size_t slot(int i, int j) const { return static_cast<std::size_t>(i * dim_ + j); }

  int dim_ = 0;
  // Dense table of dim*dim sparse vectors, both orders filled.
  std::vector<SparseVector> table_;
  std::vector<std::string> labels_;
  std::vector<std::string> dual_labels_;
};

/// Sparse → dense.
Vector to_dense(const SparseVector& v, int dim);

/// Sum of [[e_i,e_j],e_k] over the cyclic permutations of (i, j, k).
Vector jacobiator(const LieAlgebra& g, int i, int j, int k);

/// dim [g, g].
int derived_ideal_dim(const LieAlgebra& g);

}  // namespace liecoh
