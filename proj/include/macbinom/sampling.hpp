#pragma once

// Deterministic source of small exact rationals for sampled-exact checks.
// Sampling only picks evaluation points; every comparison made at those
// points is still exact arithmetic.

#include "macbinom/field.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace macbinom {

class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    // Nonzero rational with |num| <= 10^4 and 1 <= den <= 10^4.
    Rat rational();

    // n pairwise distinct nonzero rationals.  Distinctness keeps every
    // cross factor x_i - x_j t^k of the difference operators invertible.
    std::vector<FieldElement> point(int n);

  private:
    std::mt19937_64 rng_;
};

}  // namespace macbinom
