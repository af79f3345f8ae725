#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "orbits/exact.hpp"

namespace orbits {

struct PartMult {
    std::uint32_t part;  // >= 1
    std::uint32_t mult;  // >= 1
    friend bool operator==(const PartMult&, const PartMult&) = default;
    friend auto operator<=>(const PartMult&, const PartMult&) = default;
};

// Integer partition of n stored as a sparse multiplicity list with parts
// strictly increasing. Doubles as the cycle type of a permutation in S_n;
// partitions of k reuse the same type.
class Partition {
public:
    Partition() = default;  // the empty partition of 0

    // Validates: parts >= 1 strictly increasing, mults >= 1.
    static Partition from_mults(std::vector<PartMult> mults);
    // Parts in any order.
    static Partition from_parts(const std::vector<std::uint32_t>& parts);
    static Partition ones(std::uint32_t n);          // (1^n)
    static Partition single_cycle(std::uint32_t n);  // (n)

    std::uint32_t n() const { return n_; }
    const std::vector<PartMult>& mults() const { return mults_; }
    std::uint32_t multiplicity(std::uint32_t part) const;
    std::vector<std::uint32_t> parts_desc() const;  // expanded part list, descending
    std::string to_string() const;                  // e.g. "(3,1^2)"

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << p.to_string();
    }

private:
    std::uint32_t n_ = 0;
    std::vector<PartMult> mults_;
};

inline constexpr std::uint32_t kPartitionEnumLimit = 64;

// Every partition of n exactly once, in reverse-lexicographic order of the
// descending part lists: (n), (n-1,1), ..., (1^n). The order is part of the
// contract; caches and parallel reductions rely on it being stable.
void for_each_partition(std::uint32_t n, const std::function<void(const Partition&)>& fn,
                        std::uint32_t limit = kPartitionEnumLimit);
std::vector<Partition> enumerate_partitions(std::uint32_t n,
                                            std::uint32_t limit = kPartitionEnumLimit);
std::uint64_t partition_count(std::uint32_t n);  // p(n), by enumeration

// z_nu = prod_j j^{m_j} m_j!, the centralizer order of a permutation with
// cycle type nu.
ExactInt z_value(const Partition& nu);

// n!/z_nu; the division must be exact.
ExactInt class_size(const Partition& nu);

// Cycle type of g^m for g of cycle type nu: a part l with multiplicity c
// contributes gcd(l,m)*c copies of part l/gcd(l,m).
Partition power_cycle_type(const Partition& nu, std::uint64_t m);

// Moebius function; d in [1, 2^31].
int mobius(std::uint64_t d);

// lcm of the parts = order of any permutation with cycle type nu.
std::uint64_t order_lcm(const Partition& nu);

}  // namespace orbits
