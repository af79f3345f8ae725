#include "orbits/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace orbits {

Partition Partition::from_mults(std::vector<PartMult> mults) {
    std::uint64_t n = 0;
    std::uint32_t prev_part = 0;
    for (const auto& pm : mults) {
        if (pm.part <= prev_part) throw std::invalid_argument("partition parts must be strictly increasing");
        if (pm.mult == 0) throw std::invalid_argument("partition multiplicities must be positive");
        prev_part = pm.part;
        n += static_cast<std::uint64_t>(pm.part) * pm.mult;
    }
    if (n > UINT32_MAX) throw std::invalid_argument("partition too large");
    Partition p;
    p.n_ = static_cast<std::uint32_t>(n);
    p.mults_ = std::move(mults);
    return p;
}

Partition Partition::from_parts(const std::vector<std::uint32_t>& parts) {
    std::map<std::uint32_t, std::uint32_t> freq;
    for (std::uint32_t part : parts) {
        if (part == 0) throw std::invalid_argument("partition parts must be positive");
        ++freq[part];
    }
    std::vector<PartMult> mults;
    mults.reserve(freq.size());
    for (auto [part, mult] : freq) mults.push_back({part, mult});
    return from_mults(std::move(mults));
}

Partition Partition::ones(std::uint32_t n) {
    if (n == 0) return {};
    return from_mults({{1, n}});
}

Partition Partition::single_cycle(std::uint32_t n) {
    if (n == 0) return {};
    return from_mults({{n, 1}});
}

std::uint32_t Partition::multiplicity(std::uint32_t part) const {
    for (const auto& pm : mults_)
        if (pm.part == part) return pm.mult;
    return 0;
}

std::vector<std::uint32_t> Partition::parts_desc() const {
    std::vector<std::uint32_t> out;
    for (auto it = mults_.rbegin(); it != mults_.rend(); ++it)
        out.insert(out.end(), it->mult, it->part);
    return out;
}

std::string Partition::to_string() const {
    std::string s = "(";
    bool first = true;
    for (auto it = mults_.rbegin(); it != mults_.rend(); ++it) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(it->part);
        if (it->mult > 1) s += "^" + std::to_string(it->mult);
    }
    return s + ")";
}

void for_each_partition(std::uint32_t n, const std::function<void(const Partition&)>& fn,
                        std::uint32_t limit) {
    if (n > limit)
        throw ResourceError("partition enumeration refused: n=" + std::to_string(n) +
                            " exceeds limit " + std::to_string(limit));
    if (n == 0) {
        fn(Partition{});
        return;
    }
    std::vector<std::uint32_t> a{n};  // current partition, parts descending
    for (;;) {
        fn(Partition::from_parts(a));
        // Decrement the rightmost part > 1 and redistribute the tail greedily;
        // this steps through partitions in reverse-lexicographic order.
        std::size_t i = a.size();
        while (i > 0 && a[i - 1] == 1) --i;
        if (i == 0) break;
        std::uint32_t rem = static_cast<std::uint32_t>(a.size() - i) + 1;
        std::uint32_t next = a[i - 1] - 1;
        a.resize(i);
        a[i - 1] = next;
        while (rem > next) {
            a.push_back(next);
            rem -= next;
        }
        if (rem) a.push_back(rem);
    }
}

std::vector<Partition> enumerate_partitions(std::uint32_t n, std::uint32_t limit) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, limit);
    return out;
}

std::uint64_t partition_count(std::uint32_t n) {
    std::uint64_t c = 0;
    for_each_partition(n, [&](const Partition&) { ++c; });
    return c;
}

ExactInt z_value(const Partition& nu) {
    ExactInt z = 1;
    for (const auto& pm : nu.mults()) {
        z *= pow_uint(ExactInt(pm.part), pm.mult);
        z *= factorial(pm.mult);
    }
    return z;
}

ExactInt class_size(const Partition& nu) {
    return exact_div(factorial(nu.n()), z_value(nu));
}

Partition power_cycle_type(const Partition& nu, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("power_cycle_type requires m >= 1");
    std::map<std::uint32_t, std::uint64_t> acc;
    for (const auto& pm : nu.mults()) {
        std::uint64_t g = std::gcd(static_cast<std::uint64_t>(pm.part), m);
        acc[pm.part / static_cast<std::uint32_t>(g)] += g * pm.mult;
    }
    std::vector<PartMult> mults;
    mults.reserve(acc.size());
    for (auto [part, mult] : acc) mults.push_back({part, static_cast<std::uint32_t>(mult)});
    return Partition::from_mults(std::move(mults));
}

int mobius(std::uint64_t d) {
    if (d == 0 || d > (std::uint64_t(1) << 31))
        throw std::invalid_argument("mobius argument out of range");
    int prime_factors = 0;
    for (std::uint64_t p = 2; p * p <= d; p == 2 ? p = 3 : p += 2) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            ++prime_factors;
        }
    }
    if (d > 1) ++prime_factors;
    return (prime_factors % 2 == 0) ? 1 : -1;
}

std::uint64_t order_lcm(const Partition& nu) {
    std::uint64_t l = 1;
    for (const auto& pm : nu.mults()) l = std::lcm(l, static_cast<std::uint64_t>(pm.part));
    return l;
}

}  // namespace orbits
