#pragma once

#include <cstdint>
#include <vector>

#include "orbits/exact.hpp"

namespace orbits {

// Ground truth at tiny scale. Deliberately shares only rank/unrank and the
// generating-function evaluator with the production path: no conjugacy-class
// collapsing, no Moebius inversion.

// Literal Burnside over all n!^2 ordered pairs (g1,g2): each pair's action on
// S_n is materialized, its cycle histogram expanded into a fixed-subset row,
// everything summed and divided by n!^2. n <= 4.
std::vector<ExactInt> t_row_oracle(unsigned n);

struct OrbitEnumeration {
    ExactInt orbit_count;
    std::vector<std::uint64_t> orbit_sizes;  // one per orbit, unsorted
};

// Direct orbit construction from the action definition: every k-subset of
// S_n is reduced to its canonical form (minimum over all n!^2 translates)
// and distinct canonical forms are counted. No counting theory at all.
// Budget: binom(n!, k) <= 10^7 subsets.
OrbitEnumeration orbit_enumeration(unsigned n, std::uint64_t k);

}  // namespace orbits
