#include "orbits/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbits {

Perm identity_perm(std::uint32_t n) {
    Perm f(n);
    for (std::uint32_t i = 0; i < n; ++i) f[i] = static_cast<std::uint8_t>(i);
    return f;
}

Perm compose(const Perm& f, const Perm& g) {
    if (f.size() != g.size()) throw std::invalid_argument("compose: size mismatch");
    Perm h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
    return h;
}

Perm perm_power(const Perm& f, std::uint64_t m) {
    Perm acc = identity_perm(static_cast<std::uint32_t>(f.size()));
    Perm base = f;
    while (m) {
        if (m & 1) acc = compose(acc, base);
        base = compose(base, base);
        m >>= 1;
    }
    return acc;
}

Partition cycle_type_of(const Perm& f) {
    std::vector<bool> seen(f.size(), false);
    std::vector<std::uint32_t> lengths;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (seen[i]) continue;
        std::uint32_t len = 0;
        for (std::size_t j = i; !seen[j]; j = f[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_parts(lengths);
}

Perm permutation_with_type(const Partition& type) {
    Perm f(type.n());
    std::uint32_t base = 0;
    for (const auto& pm : type.mults()) {
        for (std::uint32_t c = 0; c < pm.mult; ++c) {
            for (std::uint32_t i = 0; i < pm.part; ++i) {
                std::uint32_t from = base + i;
                std::uint32_t to = base + (i + 1) % pm.part;
                f[from] = static_cast<std::uint8_t>(to);
            }
            base += pm.part;
        }
    }
    return f;
}

std::uint64_t factorial_u64(std::uint32_t n) {
    if (n > 20) throw std::invalid_argument("factorial_u64: n > 20 overflows");
    std::uint64_t r = 1;
    for (std::uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}

std::uint64_t perm_rank(const Perm& f) {
    const std::uint32_t n = static_cast<std::uint32_t>(f.size());
    std::uint64_t rank = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t smaller_after = 0;
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (f[j] < f[i]) ++smaller_after;
        rank += smaller_after * factorial_u64(n - 1 - i);
    }
    return rank;
}

Perm perm_unrank(std::uint32_t n, std::uint64_t rank) {
    if (rank >= factorial_u64(n)) throw std::invalid_argument("perm_unrank: rank out of range");
    std::vector<std::uint8_t> remaining;
    remaining.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) remaining.push_back(static_cast<std::uint8_t>(i));
    Perm f;
    f.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint64_t fact = factorial_u64(n - 1 - i);
        std::uint64_t idx = rank / fact;
        rank %= fact;
        f.push_back(remaining[idx]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return f;
}

}  // namespace orbits
