#include "orbits/profile.hpp"

#include <numeric>
#include <stdexcept>

namespace orbits {

PeriodProfile PeriodProfile::checked(ExactInt total, EntryMap entries) {
    PeriodProfile p;
    ExactInt sum = 0;
    for (auto& [j, c] : entries) {
        internal_check(j >= 1, "period profile: period must be positive");
        internal_check(c >= 0, "period profile: negative count");
        if (c == 0) continue;
        internal_check(mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(j)) != 0,
                       "period profile: count not divisible by its period");
        sum += c;
        p.entries_.emplace(j, std::move(c));
    }
    internal_check(sum == total, "period profile: counts do not sum to the set size");
    p.total_ = std::move(total);
    return p;
}

ExactInt PeriodProfile::count(std::uint64_t j) const {
    auto it = entries_.find(j);
    return it == entries_.end() ? ExactInt(0) : it->second;
}

ExactInt PeriodProfile::orbit_count() const {
    ExactInt n = 0;
    for (const auto& [j, c] : entries_) n += exact_div_ui(c, j);
    return n;
}

PeriodProfile profile_pair(const Partition& nu1, const Partition& nu2) {
    if (nu1.n() != nu2.n())
        throw std::invalid_argument("profile_pair: cycle types of different n");
    const std::uint64_t order = std::lcm(order_lcm(nu1), order_lcm(nu2));

    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d <= order; ++d)
        if (order % d == 0) divisors.push_back(d);

    // |~T(m)| = z_(nu1^m) when nu1^m == nu2^m, else 0.
    std::map<std::uint64_t, ExactInt> all_period;
    for (std::uint64_t m : divisors) {
        Partition p1 = power_cycle_type(nu1, m);
        Partition p2 = power_cycle_type(nu2, m);
        all_period.emplace(m, p1 == p2 ? z_value(p1) : ExactInt(0));
    }

    PeriodProfile::EntryMap exact_period;
    for (std::uint64_t j : divisors) {
        ExactInt t = 0;
        for (std::uint64_t m : divisors) {
            if (m > j) break;
            if (j % m != 0) continue;
            int mu = mobius(j / m);
            if (mu == 1)
                t += all_period.at(m);
            else if (mu == -1)
                t -= all_period.at(m);
        }
        exact_period.emplace(j, std::move(t));
    }
    return PeriodProfile::checked(factorial(nu1.n()), std::move(exact_period));
}

PeriodProfile profile_from_pair_action(const Perm& g1, const Perm& g2) {
    const std::uint32_t n = static_cast<std::uint32_t>(g1.size());
    if (g2.size() != n) throw std::invalid_argument("profile_from_pair_action: size mismatch");
    if (n > 8)
        throw ResourceError("profile_from_pair_action materializes all n! elements; n <= 8");
    const std::uint64_t nf = factorial_u64(n);

    std::vector<std::uint32_t> image(nf);
    for (std::uint64_t r = 0; r < nf; ++r) {
        Perm sigma = perm_unrank(n, r);
        image[r] = static_cast<std::uint32_t>(perm_rank(compose(g1, compose(sigma, g2))));
    }

    PeriodProfile::EntryMap entries;
    std::vector<bool> seen(nf, false);
    for (std::uint64_t r = 0; r < nf; ++r) {
        if (seen[r]) continue;
        std::uint64_t len = 0;
        for (std::uint64_t s = r; !seen[s]; s = image[s]) {
            seen[s] = true;
            ++len;
        }
        entries[len] += ExactInt(static_cast<unsigned long>(len));
    }
    return PeriodProfile::checked(factorial(n), std::move(entries));
}

ExactInt fixed_count_partition_sum(const PeriodProfile& p, std::uint64_t k,
                                   std::uint64_t k_limit) {
    if (p.total() < static_cast<unsigned long>(k))
        throw std::invalid_argument("fixed_count_partition_sum: k exceeds the set size");
    if (k > k_limit)
        throw ResourceError("fixed_count_partition_sum enumerates p(k) partitions; k=" +
                            std::to_string(k) + " exceeds limit " + std::to_string(k_limit) +
                            " -- use fixed_count_genfun");

    std::map<std::uint64_t, ExactInt> orbits;  // j -> entries[j]/j
    for (const auto& [j, c] : p.entries()) orbits.emplace(j, exact_div_ui(c, j));

    ExactInt acc = 0;
    for_each_partition(static_cast<std::uint32_t>(k), [&](const Partition& lambda) {
        ExactInt term = 1;
        for (const auto& pm : lambda.mults()) {
            auto it = orbits.find(pm.part);
            if (it == orbits.end()) {
                term = 0;  // binom(0, m>0) = 0
                break;
            }
            term *= binomial(it->second, pm.mult);
            if (term == 0) break;
        }
        acc += term;
    });
    return acc;
}

std::vector<ExactInt> fixed_count_genfun(const PeriodProfile& p, std::uint64_t k_max) {
    if (p.total() < static_cast<unsigned long>(k_max))
        throw std::invalid_argument("fixed_count_genfun: k_max exceeds the set size");

    std::vector<ExactInt> acc(k_max + 1);
    acc[0] = 1;
    for (const auto& [j, c] : p.entries()) {
        const ExactInt s = exact_div_ui(c, j);  // number of j-orbits
        // (1 + x^j)^s truncated: coefficient of x^{j*i} is binom(s, i).
        std::uint64_t terms = k_max / j;
        if (s < static_cast<unsigned long>(terms)) terms = s.get_ui();
        std::vector<ExactInt> binom_row(terms + 1);
        binom_row[0] = 1;
        for (std::uint64_t i = 1; i <= terms; ++i)
            binom_row[i] = exact_div_ui(binom_row[i - 1] * (s - static_cast<unsigned long>(i - 1)), i);

        std::vector<ExactInt> next(k_max + 1);
        for (std::uint64_t a = 0; a <= k_max; ++a) {
            if (acc[a] == 0) continue;
            for (std::uint64_t i = 0; i <= terms && a + j * i <= k_max; ++i)
                next[a + j * i] += acc[a] * binom_row[i];
        }
        acc.swap(next);
    }
    return acc;
}

ExactInt fixed_ksubsets_single(const Partition& sigma_type, std::uint64_t k) {
    if (k > sigma_type.n())
        throw std::invalid_argument("fixed_ksubsets_single: k exceeds n");
    PeriodProfile::EntryMap entries;
    for (const auto& pm : sigma_type.mults())
        entries.emplace(pm.part, ExactInt(pm.part) * pm.mult);
    PeriodProfile p =
        PeriodProfile::checked(ExactInt(sigma_type.n()), std::move(entries));
    return fixed_count_genfun(p, k)[k];
}

}  // namespace orbits
