#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "orbits/exact.hpp"
#include "orbits/partitions.hpp"
#include "orbits/perm.hpp"

namespace orbits {

// Exact-period census of one group element (or pair) acting on a finite set:
// entries[j] counts the elements whose orbit under the acting element has
// size exactly j. Zero counts are omitted. Checked on construction:
// every count is nonnegative (a naive Moebius inversion bug shows up as a
// negative count), j divides entries[j], and the counts sum to the set size.
class PeriodProfile {
public:
    using EntryMap = std::map<std::uint64_t, ExactInt>;

    static PeriodProfile checked(ExactInt total, EntryMap entries);

    const ExactInt& total() const { return total_; }
    const EntryMap& entries() const { return entries_; }
    // entries[j], or 0 when j carries no elements.
    ExactInt count(std::uint64_t j) const;
    // Sum over j of entries[j]/j = number of orbits of the acting element.
    ExactInt orbit_count() const;

    friend bool operator==(const PeriodProfile&, const PeriodProfile&) = default;

private:
    ExactInt total_ = 0;
    EntryMap entries_;
};

// |T_{nu1,nu2}(j)| for the two-sided action of a pair with cycle types
// (nu1, nu2) on S_n, for every j dividing lcm of the two element orders:
// Moebius inversion of |~T(m)| = z_{nu1^m} [nu1^m == nu2^m].
PeriodProfile profile_pair(const Partition& nu1, const Partition& nu2);

// Ground-truth profile: materializes sigma -> g1 sigma g2 as a permutation of
// the n! group elements (indexed by lexicographic rank) and reads the cycle
// length histogram. n <= 8.
PeriodProfile profile_from_pair_action(const Perm& g1, const Perm& g2);

inline constexpr std::uint64_t kPartitionSumKLimit = 30;

// Number of fixed k-subsets, summed over partitions lambda of k:
//   sum_{lambda |- k} prod_j binom(entries[j]/j, m_j(lambda)).
// Mirrors the closed formula term by term; costs p(k) terms, so k is capped.
ExactInt fixed_count_partition_sum(const PeriodProfile& p, std::uint64_t k,
                                   std::uint64_t k_limit = kPartitionSumKLimit);

// Coefficients 0..k_max of prod_j (1 + x^j)^{entries[j]/j}: the same numbers
// as the partition sum, produced by truncated schoolbook polynomial products
// in exact arithmetic. Production path for full rows.
std::vector<ExactInt> fixed_count_genfun(const PeriodProfile& p, std::uint64_t k_max);

// k-subsets of [n] fixed by a permutation of the given cycle type: the
// single-sided special case, evaluated through the same generating function
// with profile {j : j*m_j}.
ExactInt fixed_ksubsets_single(const Partition& sigma_type, std::uint64_t k);

}  // namespace orbits
