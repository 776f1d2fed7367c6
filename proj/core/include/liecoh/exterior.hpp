#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liecoh/scalar.hpp"

namespace liecoh {

/// Strictly increasing tuple of basis indices, naming the monomial
/// e_{i1}* ^ ... ^ e_{ik}* of the exterior algebra. The empty tuple is 1.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws IndexOutOfRange unless strictly increasing within [0, 64).
  MultiIndex(std::initializer_list<int> indices);
  explicit MultiIndex(std::span<const int> indices);

  static MultiIndex from_mask(std::uint64_t mask) {
    MultiIndex m;
    m.mask_ = mask;
    return m;
  }

  std::uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const { return (mask_ >> i) & 1U; }
  /// Number of entries smaller than i.
  int rank_of(int i) const { return std::popcount(mask_ & ((std::uint64_t{1} << i) - 1)); }
  /// Largest index + 1 (0 for the empty tuple).
  int bound() const { return mask_ ? 64 - std::countl_zero(mask_) : 0; }

  std::vector<int> indices() const;

  MultiIndex with(int i) const { return from_mask(mask_ | (std::uint64_t{1} << i)); }
  MultiIndex without(int i) const { return from_mask(mask_ & ~(std::uint64_t{1} << i)); }

  friend bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }
  /// Shorter tuples first, then lexicographic on the index tuples.
  friend std::strong_ordering operator<=>(MultiIndex a, MultiIndex b);

 private:
  std::uint64_t mask_ = 0;
};

/// Sign (+1/-1) of the permutation sorting the concatenation a ++ b, or 0 if
/// a and b share an index.
int merge_sign(MultiIndex a, MultiIndex b);

/// All C(n, k) multi-indices of length k in lexicographic order.
/// This order is the row/column convention of every matrix in the library.
std::vector<MultiIndex> basis(int n, int k);

/// Sparse element of Λ^k(g*): terms keyed by multi-index, zero terms purged.
class ExteriorForm {
 public:
  using Terms = std::map<MultiIndex, Scalar>;

  ExteriorForm(int dim, int degree);

  static ExteriorForm monomial(int dim, MultiIndex index, Scalar coeff = Scalar(1));
  /// The dual basis covector e_i*.
  static ExteriorForm covector(int dim, int i);
  static ExteriorForm constant(int dim, Scalar value);
  /// Degree-1 form with the given coordinates on the dual basis.
  static ExteriorForm linear(const Vector& coords);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(MultiIndex index) const;

  /// Adds c * e_index; drops the term if it cancels.
  void add_term(MultiIndex index, const Scalar& c);

  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);
  ExteriorForm& operator*=(const Scalar& s);
  ExteriorForm operator-() const;

  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  friend ExteriorForm operator*(const Scalar& s, ExteriorForm a) { return a *= s; }
  friend ExteriorForm operator*(ExteriorForm a, const Scalar& s) { return a *= s; }

  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Coordinates in basis(dim, degree) order.
  Vector coordinates() const;
  static ExteriorForm from_coordinates(int dim, int degree, const Vector& coords);

 private:
  void check_compatible(const ExteriorForm& o) const;

  int dim_;
  int degree_;
  Terms terms_;
};

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

/// Contraction ι_x w with a vector x; lowers the degree by one.
ExteriorForm interior_product(const Vector& x, const ExteriorForm& w);
/// Contraction with the basis vector e_j.
ExteriorForm interior_product(int j, const ExteriorForm& w);

/// Evaluates w on basis vectors (e_{args[0]}, ..., e_{args[k-1]}), where the
/// monomial e_I* takes value 1 on (e_{i1}, ..., e_{ik}) in increasing order.
Scalar evaluate(const ExteriorForm& w, std::span<const int> args);

/// Default dual names: "e0*", "e1*", ...
std::vector<std::string> default_dual_names(int dim);

/// Text rendering, e.g. `a1^b1 - 2 a^b + (1 + 1/2 i) b^b2`; `0` for zero and
/// `1` for the empty monomial.
std::string render(const ExteriorForm& w, const std::vector<std::string>& names);
std::string render(const ExteriorForm& w);

/// Inverse of render. `degree` is required to type the zero form.
ExteriorForm parse_form(std::string_view text, const std::vector<std::string>& names,
                        int degree = -1);

}  // namespace liecoh
