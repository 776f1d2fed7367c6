#include "liecoh/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "liecoh/errors.hpp"
#include "liecoh/families.hpp"

namespace liecoh {

namespace {

std::vector<std::uint64_t> binomial_profile(int n) {
  std::vector<std::uint64_t> p;
  for (int k = 0; k <= n; ++k) p.push_back(binom(n, k));
  return p;
}

void check_degree(int k, int n) {
  if (k < 0 || k > n)
    throw DegreeOutOfRange("degree " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

std::int64_t sbinom(long n, long k) { return static_cast<std::int64_t>(binom(n, k)); }

}  // namespace

std::uint64_t binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t betti_aff_ext(int n, int k) {
  if (n < 2) throw DimensionMismatch("aff(R) ⊕ R^{n-2} needs n >= 2");
  check_degree(k, n);
  return binom(n - 1, k);
}

std::uint64_t betti_heisenberg(int m, int k) {
  if (m < 1) throw DimensionMismatch("heisenberg needs m >= 1");
  check_degree(k, 2 * m + 1);
  if (k > m) k = 2 * m + 1 - k;
  return binom(2 * m, k) - binom(2 * m, k - 2);
}

std::int64_t heisenberg_ext_floor_sum(int m, int n, int k) {
  std::int64_t total = 0;
  for (int i = 0; i <= std::min(k, 2 * m + 1); ++i) {
    const int f = i / (m + 1);
    total += (sbinom(2 * m, i - f) - sbinom(2 * m, i + 3 * f - 2)) * sbinom(n - 2 * m - 1, k - i);
  }
  return total;
}

std::uint64_t betti_heisenberg_ext(int m, int n, int k) {
  if (m < 1) throw DimensionMismatch("heisenberg needs m >= 1");
  if (n <= 2 * m + 1)
    throw DimensionMismatch("h_{2m+1} ⊕ R^{n-2m-1} needs n > 2m+1 (got m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
  check_degree(k, n);
  if (m == 1) return binom(n - 1, k) + binom(n - 2, k - 2);
  if (k > n / 2) k = n - k;
  if (k <= m) return binom(n - 1, k) - binom(n - 1, k - 2);
  return static_cast<std::uint64_t>(heisenberg_ext_floor_sum(m, n, k));
}

std::vector<std::uint64_t> kunneth_convolution(const std::vector<std::uint64_t>& a,
                                               const std::vector<std::uint64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

BettiProfile kunneth_convolution(const BettiProfile& a, const BettiProfile& b) {
  std::vector<std::uint64_t> av(a.b.begin(), a.b.end()), bv(b.b.begin(), b.b.end());
  auto c = kunneth_convolution(av, bv);
  BettiProfile p;
  p.n = a.n + b.n;
  p.b.assign(c.begin(), c.end());
  return p;
}

LambdaSpec lambda_classes(const std::vector<Scalar>& entries) {
  LambdaSpec spec;
  spec.entries = entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Scalar& l = entries[i];
    if (l.is_zero()) throw ZeroLambda("lambda entry " + std::to_string(i + 1) + " is zero");
    auto it = std::find_if(spec.classes.begin(), spec.classes.end(), [&](const LambdaClass& c) {
      return c.representative == l || c.representative == -l;
    });
    if (it == spec.classes.end()) {
      spec.classes.push_back(LambdaClass{l, {}, 0, 0});
      it = std::prev(spec.classes.end());
    }
    it->members.push_back(static_cast<int>(i));
    (it->representative == l ? it->p : it->q) += 1;
  }
  return spec;
}

std::uint64_t diamond_b2(const LambdaSpec& spec) {
  if (spec.classes.empty()) throw ZeroLambda("diamond_b2 needs at least one nonzero lambda");
  std::uint64_t total = 0;
  for (const auto& c : spec.classes) {
    if (c.representative.is_zero()) throw ZeroLambda("zero lambda class");
    total += static_cast<std::uint64_t>(c.size()) * static_cast<std::uint64_t>(c.size());
  }
  return total - 1;
}

std::uint64_t diamond_b2_general(const std::vector<Scalar>& entries) {
  std::vector<Scalar> reduced;
  for (const auto& l : entries)
    if (!l.is_zero()) reduced.push_back(l);
  const int zeros = static_cast<int>(entries.size() - reduced.size());

  // With no nonzero entry the reduced factor is span{X0, Y0}, abelian.
  const LieAlgebra factor = reduced.empty() ? abelian(2) : diamond(reduced).first;
  const BettiProfile p = betti_profile(factor);
  std::vector<std::uint64_t> pv(p.b.begin(), p.b.end());
  const auto total = kunneth_convolution(pv, binomial_profile(2 * zeros));
  return total.size() > 2 ? total[2] : 0;
}

}  // namespace liecoh
