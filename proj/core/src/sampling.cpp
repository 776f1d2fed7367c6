#include "liecoh/sampling.hpp"

#include <array>
#include <string_view>

namespace liecoh {

std::vector<Scalar> sample_lambda(std::mt19937_64& rng, int n) {
  static constexpr std::array<std::string_view, 8> kPool{"1",    "2",      "3",   "1/2",
                                                         "0+1i", "1+1i", "2-1i", "1/3+2/3i"};
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Raw engine output keeps the draw sequence identical across standard libraries.
    const auto draw = rng();
    Scalar v = Scalar::parse(kPool[draw % kPool.size()]);
    if ((draw >> 32) & 1U) v = -v;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace liecoh
