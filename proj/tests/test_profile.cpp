#include <doctest.h>

#include <random>

#include "orbits/partitions.hpp"
#include "orbits/perm.hpp"
#include "orbits/profile.hpp"

using namespace orbits;

namespace {

// Every profile with total t corresponds to a partition of t: part j with
// multiplicity s contributes entries[j] = j*s.
PeriodProfile profile_from_partition(const Partition& p) {
    PeriodProfile::EntryMap entries;
    for (const auto& pm : p.mults()) entries.emplace(pm.part, ExactInt(pm.part) * pm.mult);
    return PeriodProfile::checked(ExactInt(p.n()), std::move(entries));
}

// Brute-force oracle: realize the profile as a permutation of [0,total) with
// entries[j]/j cycles of length j and count the k-subsets it maps to
// themselves, enumerating all 2^total subsets.
std::vector<std::uint64_t> fixed_subset_row_by_masks(const Partition& shape) {
    const std::uint32_t total = shape.n();
    REQUIRE(total <= 16);
    Perm pi = permutation_with_type(shape);
    std::vector<std::uint64_t> row(total + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
        std::uint32_t image = 0;
        for (std::uint32_t i = 0; i < total; ++i)
            if (mask & (1u << i)) image |= 1u << pi[i];
        if (image == mask) ++row[static_cast<std::uint32_t>(__builtin_popcount(mask))];
    }
    return row;
}

}  // namespace

TEST_CASE("profile construction checks its invariants") {
    // counts must divide, sum, and be nonnegative
    CHECK_THROWS_AS(PeriodProfile::checked(ExactInt(4), {{2, ExactInt(3)}}), InternalError);
    CHECK_THROWS_AS(PeriodProfile::checked(ExactInt(4), {{2, ExactInt(2)}}), InternalError);
    CHECK_THROWS_AS(PeriodProfile::checked(ExactInt(2), {{2, ExactInt(-2)}, {1, ExactInt(4)}}),
                    InternalError);
    PeriodProfile ok = PeriodProfile::checked(ExactInt(6), {{1, ExactInt(2)}, {2, ExactInt(4)}});
    CHECK(ok.count(1) == 2);
    CHECK(ok.count(4) == 0);
    CHECK(ok.orbit_count() == 4);
}

TEST_CASE("pair profile of the identity pair") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        PeriodProfile p = profile_pair(Partition::ones(n), Partition::ones(n));
        CHECK(p.entries().size() == 1);
        CHECK(p.count(1) == factorial(n));
    }
}

TEST_CASE("pair profile with distinct types has no fixed points") {
    for (std::uint32_t n = 2; n <= 6; ++n) {
        PeriodProfile p = profile_pair(Partition::ones(n), Partition::single_cycle(n));
        CHECK(p.count(1) == 0);
    }
}

TEST_CASE("pair profile matches the explicit pair action exhaustively (n <= 4)") {
    for (std::uint32_t n = 1; n <= 4; ++n) {
        const std::uint64_t nf = factorial_u64(n);
        for (std::uint64_t a = 0; a < nf; ++a) {
            Perm g1 = perm_unrank(n, a);
            for (std::uint64_t b = 0; b < nf; ++b) {
                Perm g2 = perm_unrank(n, b);
                CHECK(profile_from_pair_action(g1, g2) ==
                      profile_pair(cycle_type_of(g1), cycle_type_of(g2)));
            }
        }
    }
}

TEST_CASE("pair profile is symmetric in the two types (n <= 4)") {
    for (std::uint32_t n = 1; n <= 4; ++n) {
        auto types = enumerate_partitions(n);
        for (const auto& nu1 : types)
            for (const auto& nu2 : types) {
                PeriodProfile a = profile_pair(nu1, nu2);
                PeriodProfile b = profile_pair(nu2, nu1);
                CHECK(fixed_count_genfun(a, factorial_u64(n)) ==
                      fixed_count_genfun(b, factorial_u64(n)));
            }
    }
}

TEST_CASE("pair action oracle rejects large n") {
    CHECK_THROWS_AS(profile_from_pair_action(identity_perm(9), identity_perm(9)), ResourceError);
}

TEST_CASE("partition-sum evaluator on the pure fixed-point profile") {
    PeriodProfile p = PeriodProfile::checked(ExactInt(24), {{1, ExactInt(24)}});
    for (std::uint64_t k = 0; k <= 24; ++k)
        CHECK(fixed_count_partition_sum(p, k) == binomial_uint(24, k));
    CHECK(fixed_count_partition_sum(p, 0) == 1);
}

TEST_CASE("partition-sum evaluator refuses k beyond its budget") {
    PeriodProfile p = PeriodProfile::checked(ExactInt(100), {{1, ExactInt(100)}});
    CHECK_THROWS_AS(fixed_count_partition_sum(p, 40), ResourceError);
    CHECK_THROWS_AS(fixed_count_partition_sum(p, 101), std::invalid_argument);
}

TEST_CASE("genfun of a fixed-point-only profile is a binomial row") {
    PeriodProfile p = PeriodProfile::checked(ExactInt(9), {{1, ExactInt(9)}});
    std::vector<ExactInt> row = fixed_count_genfun(p, 9);
    for (std::uint64_t k = 0; k <= 9; ++k) CHECK(row[k] == binomial_uint(9, k));
}

TEST_CASE("both evaluators match the subset-enumeration oracle, all profiles with total <= 12") {
    for (std::uint32_t total = 0; total <= 12; ++total) {
        for (const Partition& shape : enumerate_partitions(total)) {
            PeriodProfile prof = profile_from_partition(shape);
            std::vector<std::uint64_t> expected = fixed_subset_row_by_masks(shape);
            std::vector<ExactInt> genfun = fixed_count_genfun(prof, total);
            for (std::uint64_t k = 0; k <= total; ++k) {
                CHECK(genfun[k] == ExactInt(static_cast<unsigned long>(expected[k])));
                CHECK(fixed_count_partition_sum(prof, k) == genfun[k]);
            }
        }
    }
}

TEST_CASE("full genfun row sums to 2^orbits and is symmetric") {
    for (std::uint32_t total = 0; total <= 12; ++total) {
        for (const Partition& shape : enumerate_partitions(total)) {
            PeriodProfile prof = profile_from_partition(shape);
            std::vector<ExactInt> row = fixed_count_genfun(prof, total);
            ExactInt sum = 0;
            for (const ExactInt& c : row) sum += c;
            CHECK(sum == pow_uint(ExactInt(2), prof.orbit_count().get_ui()));
            for (std::uint64_t k = 0; k <= total; ++k) CHECK(row[k] == row[total - k]);
        }
    }
}

TEST_CASE("evaluators agree on random profiles with total <= 60") {
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint32_t total = 1 + static_cast<std::uint32_t>(rng() % 60);
        std::vector<std::uint32_t> parts;
        std::uint32_t left = total;
        while (left > 0) {
            std::uint32_t part = 1 + static_cast<std::uint32_t>(rng() % left);
            parts.push_back(part);
            left -= part;
        }
        PeriodProfile prof = profile_from_partition(Partition::from_parts(parts));
        std::uint64_t k_cap = std::min<std::uint64_t>(20, total);
        std::uint64_t k = rng() % (k_cap + 1);
        std::vector<ExactInt> genfun = fixed_count_genfun(prof, k);
        CHECK(genfun[k] == fixed_count_partition_sum(prof, k));
    }
}

TEST_CASE("single-sided counts: identity and full cycles") {
    for (std::uint32_t n = 1; n <= 8; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k)
            CHECK(fixed_ksubsets_single(Partition::ones(n), k) == binomial_uint(n, k));
        for (std::uint64_t k = 1; k < n; ++k)
            CHECK(fixed_ksubsets_single(Partition::single_cycle(n), k) == 0);
        CHECK(fixed_ksubsets_single(Partition::single_cycle(n), 0) == 1);
        CHECK(fixed_ksubsets_single(Partition::single_cycle(n), n) == 1);
    }
}

TEST_CASE("single-sided counts match subset enumeration for all types with n <= 7") {
    for (std::uint32_t n = 0; n <= 7; ++n) {
        for (const Partition& sigma : enumerate_partitions(n)) {
            std::vector<std::uint64_t> expected = fixed_subset_row_by_masks(sigma);
            for (std::uint64_t k = 0; k <= n; ++k)
                CHECK(fixed_ksubsets_single(sigma, k) ==
                      ExactInt(static_cast<unsigned long>(expected[k])));
        }
    }
}
