#include "orbits/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "orbits/perm.hpp"
#include "orbits/profile.hpp"

namespace orbits {

namespace {

// left_table[a][r]  = rank(g_a o sigma_r), right_table[b][r] = rank(sigma_r o g_b);
// a pair translate is then left[a][right[b][r]].
struct TranslateTables {
    std::uint64_t nf;
    std::vector<std::vector<std::uint32_t>> left, right;
};

TranslateTables make_tables(unsigned n) {
    const std::uint64_t nf = factorial_u64(n);
    std::vector<Perm> elems(nf);
    for (std::uint64_t r = 0; r < nf; ++r) elems[r] = perm_unrank(n, r);
    TranslateTables t;
    t.nf = nf;
    t.left.assign(nf, std::vector<std::uint32_t>(nf));
    t.right.assign(nf, std::vector<std::uint32_t>(nf));
    for (std::uint64_t a = 0; a < nf; ++a)
        for (std::uint64_t r = 0; r < nf; ++r) {
            t.left[a][r] = static_cast<std::uint32_t>(perm_rank(compose(elems[a], elems[r])));
            t.right[a][r] = static_cast<std::uint32_t>(perm_rank(compose(elems[r], elems[a])));
        }
    return t;
}

}  // namespace

std::vector<ExactInt> t_row_oracle(unsigned n) {
    if (n < 1 || n > 4)
        throw ResourceError("t_row_oracle iterates all n!^2 pairs on an n!-element set; n <= 4");
    const TranslateTables t = make_tables(n);
    const std::uint64_t nf = t.nf;

    std::vector<ExactInt> sum(nf + 1);
    std::vector<std::uint32_t> image(nf);
    std::vector<bool> seen(nf);
    for (std::uint64_t a = 0; a < nf; ++a) {
        for (std::uint64_t b = 0; b < nf; ++b) {
            for (std::uint64_t r = 0; r < nf; ++r) image[r] = t.left[a][t.right[b][r]];
            PeriodProfile::EntryMap entries;
            std::fill(seen.begin(), seen.end(), false);
            for (std::uint64_t r = 0; r < nf; ++r) {
                if (seen[r]) continue;
                std::uint64_t len = 0;
                for (std::uint64_t s = r; !seen[s]; s = image[s]) {
                    seen[s] = true;
                    ++len;
                }
                entries[len] += ExactInt(static_cast<unsigned long>(len));
            }
            PeriodProfile prof = PeriodProfile::checked(factorial(n), std::move(entries));
            std::vector<ExactInt> fixed = fixed_count_genfun(prof, nf);
            for (std::uint64_t k = 0; k <= nf; ++k) sum[k] += fixed[k];
        }
    }
    const ExactInt group_order = factorial(n) * factorial(n);
    std::vector<ExactInt> row(nf + 1);
    for (std::uint64_t k = 0; k <= nf; ++k) row[k] = exact_div(sum[k], group_order);
    return row;
}

namespace {

// Combination unrank in the combinatorial number system: the idx-th k-subset
// of [0,m) in lexicographic order. All binomials involved are <= binom(m,k).
std::vector<std::uint32_t> combination_unrank(std::uint64_t m, std::uint64_t k,
                                              std::uint64_t idx,
                                              const std::vector<std::vector<std::uint64_t>>& choose) {
    std::vector<std::uint32_t> out;
    out.reserve(k);
    std::uint64_t x = 0;
    for (std::uint64_t slots = k; slots > 0; --slots) {
        for (;; ++x) {
            std::uint64_t c = choose[m - 1 - x][slots - 1];  // subsets starting with x
            if (idx < c) break;
            idx -= c;
        }
        out.push_back(static_cast<std::uint32_t>(x));
        ++x;
    }
    return out;
}

}  // namespace

OrbitEnumeration orbit_enumeration(unsigned n, std::uint64_t k) {
    if (n < 1) throw std::invalid_argument("orbit_enumeration requires n >= 1");
    const std::uint64_t nf = factorial_u64(n);
    if (k > nf) throw std::invalid_argument("orbit_enumeration: k out of range [0, n!]");
    if (k == 0 || k == nf) return {ExactInt(1), {1}};
    if (k == 1) return {ExactInt(1), {nf}};  // the action is transitive on single elements

    const ExactInt total = binomial_uint(nf, k);
    if (total > 10'000'000)
        throw ResourceError("orbit_enumeration budget exceeded: binom(n!,k) = " + total.get_str() +
                            " > 10^7");
    const std::uint64_t subsets = total.get_ui();

    // choose[i][j] = binom(i, j) for i <= nf, j <= k; saturated, only values
    // below the budget are ever consumed.
    std::vector<std::vector<std::uint64_t>> choose(nf + 1,
                                                   std::vector<std::uint64_t>(k + 1, 0));
    for (std::uint64_t i = 0; i <= nf; ++i) {
        choose[i][0] = 1;
        for (std::uint64_t j = 1; j <= std::min<std::uint64_t>(i, k); ++j) {
            std::uint64_t v = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
            choose[i][j] = std::min<std::uint64_t>(v, std::uint64_t(1) << 62);
        }
    }

    const TranslateTables t = make_tables(n);

    std::map<std::vector<std::uint32_t>, std::uint64_t> orbit_of;
#pragma omp parallel
    {
        std::map<std::vector<std::uint32_t>, std::uint64_t> local;
        std::vector<std::uint32_t> translated(k), best(k);
#pragma omp for schedule(static) nowait
        for (long long idx = 0; idx < static_cast<long long>(subsets); ++idx) {
            std::vector<std::uint32_t> subset =
                combination_unrank(nf, k, static_cast<std::uint64_t>(idx), choose);
            bool have_best = false;
            for (std::uint64_t a = 0; a < nf; ++a) {
                for (std::uint64_t b = 0; b < nf; ++b) {
                    for (std::uint64_t i = 0; i < k; ++i)
                        translated[i] = t.left[a][t.right[b][subset[i]]];
                    std::sort(translated.begin(), translated.end());
                    if (!have_best || translated < best) {
                        best = translated;
                        have_best = true;
                    }
                }
            }
            ++local[best];
        }
#pragma omp critical(orbits_enum_merge)
        {
            for (auto& [canon, cnt] : local) orbit_of[canon] += cnt;
        }
    }

    OrbitEnumeration out;
    out.orbit_count = ExactInt(static_cast<unsigned long>(orbit_of.size()));
    out.orbit_sizes.reserve(orbit_of.size());
    std::uint64_t covered = 0;
    for (const auto& [canon, cnt] : orbit_of) {
        out.orbit_sizes.push_back(cnt);
        covered += cnt;
    }
    internal_check(covered == subsets, "orbit_enumeration: orbits do not cover all subsets");
    return out;
}

}  // namespace orbits
