#pragma once

#include <random>
#include <vector>

#include "liecoh/scalar.hpp"

namespace liecoh {

/// n nonzero Gaussian rationals drawn with random sign from a small pool, so
/// that ± coincidences (the interesting case for diamond Betti numbers) occur
/// often. Deterministic for a given engine state.
std::vector<Scalar> sample_lambda(std::mt19937_64& rng, int n);

}  // namespace liecoh
