#pragma once

#include <cstdint>
#include <vector>

#include "orbits/partitions.hpp"

namespace orbits {

// One-line notation over {0,...,n-1}: f[i] is the image of i. n <= 20 so that
// lexicographic ranks fit in 64 bits.
using Perm = std::vector<std::uint8_t>;

Perm identity_perm(std::uint32_t n);
Perm compose(const Perm& f, const Perm& g);  // (f o g)(i) = f(g(i))
Perm perm_power(const Perm& f, std::uint64_t m);
Partition cycle_type_of(const Perm& f);
// A permutation with the given cycle type, cycles laid out consecutively.
Perm permutation_with_type(const Partition& type);

std::uint64_t factorial_u64(std::uint32_t n);  // n <= 20

// Identifies a permutation by the lexicographic rank of its one-line form;
// the canonical bijection [0, n!) <-> S_n used by every oracle.
struct PermutationRank {
    std::uint32_t n = 0;
    std::uint64_t rank = 0;
};

std::uint64_t perm_rank(const Perm& f);
Perm perm_unrank(std::uint32_t n, std::uint64_t rank);
inline Perm to_perm(const PermutationRank& pr) { return perm_unrank(pr.n, pr.rank); }
inline PermutationRank from_perm(const Perm& f) {
    return {static_cast<std::uint32_t>(f.size()), perm_rank(f)};
}

}  // namespace orbits
