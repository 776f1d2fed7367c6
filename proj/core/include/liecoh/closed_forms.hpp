#pragma once

#include <cstdint>
#include <vector>

#include "liecoh/cochain.hpp"
#include "liecoh/scalar.hpp"

namespace liecoh {

/// Binomial coefficient, 0 whenever k < 0, k > n or n < 0.
std::uint64_t binom(long n, long k);

/// b_k(aff(R) ⊕ R^{n-2}) = C(n-1, k), n >= 2.
std::uint64_t betti_aff_ext(int n, int k);

/// b_k(h_{2m+1}) = C(2m, k) - C(2m, k-2) for k <= m; the upper half by
/// b_k = b_{2m+1-k}.
std::uint64_t betti_heisenberg(int m, int k);

/// b_k(h_{2m+1} ⊕ R^{n-2m-1}), n > 2m+1.
///  - m = 1: C(n-1, k) + C(n-2, k-2) for every k.
///  - m > 1: C(n-1, k) - C(n-1, k-2) for k <= m, the floor-bracket sum
///      Σ_{i=0}^{min(k, 2m+1)} (C(2m, i - ⌊i/(m+1)⌋) - C(2m, i + 3⌊i/(m+1)⌋ - 2)) C(n-2m-1, k-i)
///    for m+1 <= k <= ⌊n/2⌋, and b_k = b_{n-k} above ⌊n/2⌋.
std::uint64_t betti_heisenberg_ext(int m, int n, int k);

/// The floor-bracket sum by itself, for any k.
std::int64_t heisenberg_ext_floor_sum(int m, int n, int k);

/// c_k = Σ_i a_i b_{k-i}.
std::vector<std::uint64_t> kunneth_convolution(const std::vector<std::uint64_t>& a,
                                               const std::vector<std::uint64_t>& b);
BettiProfile kunneth_convolution(const BettiProfile& a, const BettiProfile& b);

/// Partition of Λ under λ_i ~ λ_j  ⟺  λ_i = ±λ_j.
struct LambdaClass {
  Scalar representative;     // first occurrence in Λ
  std::vector<int> members;  // 0-based positions in Λ, increasing
  int p = 0;                 // entries equal to +representative
  int q = 0;                 // entries equal to -representative
  int size() const { return p + q; }
};

struct LambdaSpec {
  std::vector<Scalar> entries;
  std::vector<LambdaClass> classes;  // ordered by first occurrence
};

/// Throws ZeroLambda on a zero entry.
LambdaSpec lambda_classes(const std::vector<Scalar>& entries);

/// b_2(D_{2n+2}(Λ)) = Σ n_j^2 - 1.
std::uint64_t diamond_b2(const LambdaSpec& spec);

/// b_2 of D_{2n+2}(Λ) for arbitrary Λ: the zero entries split off an abelian
/// summand of dimension 2·#zeros; the reduced diamond's profile comes from the
/// cochain engine and is convolved with the binomial profile.
std::uint64_t diamond_b2_general(const std::vector<Scalar>& entries);

}  // namespace liecoh
