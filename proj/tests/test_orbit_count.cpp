#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "orbits/known_rows.hpp"
#include "orbits/orbit_count.hpp"
#include "orbits/partitions.hpp"
#include "orbits/profile.hpp"

using namespace orbits;

namespace {

void check_known_row(const RowCache& rc) {
    if (rc.n == 3) {
        REQUIRE(rc.row.size() == 7);
        for (std::size_t k = 0; k < 7; ++k)
            CHECK(rc.row[k] == ExactInt(static_cast<unsigned long>(kKnownRow3[k])));
    } else if (rc.n == 4) {
        REQUIRE(rc.row.size() == 25);
        for (std::size_t k = 0; k <= 24; ++k)
            CHECK(rc.row[k] ==
                  ExactInt(static_cast<unsigned long>(kKnownRow4Half[k <= 12 ? k : 24 - k])));
    }
}

struct CacheDirGuard {
    std::string dir;
    explicit CacheDirGuard(const std::string& d) : dir(d) {
        std::filesystem::remove_all(dir);
        setenv("ORBITS_CACHE", dir.c_str(), 1);
    }
    ~CacheDirGuard() {
        unsetenv("ORBITS_CACHE");
        std::filesystem::remove_all(dir);
    }
};

}  // namespace

TEST_CASE("rows for n=3 and n=4 match the reference values") {
    check_known_row(compute_row(3));
    check_known_row(compute_row(4));
}

TEST_CASE("parallel kernel equals the serial reference") {
    for (unsigned n : {1u, 2u, 3u, 4u, 5u}) {
        RowCache serial = compute_row_serial(n);
        RowCache parallel = compute_row(n);
        CHECK(serial.row == parallel.row);
        CHECK(serial.checksum == parallel.checksum);
    }
}

TEST_CASE("row limits are enforced") {
    CHECK_THROWS_AS(compute_row(9), ResourceError);
    CHECK_THROWS_AS(compute_row(8, /*force_large=*/false), ResourceError);
    CHECK_THROWS_AS(compute_row(0), std::invalid_argument);
}

TEST_CASE("row invariants for n <= 5") {
    for (unsigned n = 1; n <= 5; ++n) {
        RowCache rc = compute_row(n);
        const std::uint64_t nf = factorial_u64(n);
        CHECK(rc.row[0] == 1);
        CHECK(rc.row[1] == 1);
        CHECK(rc.row[nf] == 1);
        if (n >= 2)
            CHECK(rc.row[2] == ExactInt(static_cast<unsigned long>(partition_count(n) - 1)));
        for (std::uint64_t k = 0; k <= nf; ++k) CHECK(rc.row[k] == rc.row[nf - k]);
        // every count dominates the trivial lower bound binom(n!,k)/n!^2
        const ExactInt nf2 = factorial(n) * factorial(n);
        for (std::uint64_t k = 0; k <= nf; ++k) CHECK(rc.row[k] * nf2 >= binomial_uint(nf, k));
    }
}

TEST_CASE("rows grow monotonically toward the middle for n=4,5") {
    for (unsigned n : {4u, 5u}) {
        RowCache rc = compute_row(n);
        const std::uint64_t nf = factorial_u64(n);
        for (std::uint64_t k = 0; k < nf / 2; ++k) CHECK(rc.row[k] <= rc.row[k + 1]);
    }
}

TEST_CASE("row sum equals the average of 2^orbits over all pairs") {
    for (unsigned n = 1; n <= 5; ++n) {
        RowCache rc = compute_row(n);
        ExactInt row_sum = 0;
        for (const ExactInt& v : rc.row) row_sum += v;

        // independent aggregation of 2^{#orbits} per conjugacy-class pair
        ExactInt pair_sum = 0;
        auto types = enumerate_partitions(n);
        for (const Partition& nu1 : types)
            for (const Partition& nu2 : types) {
                PeriodProfile prof = profile_pair(nu1, nu2);
                pair_sum += class_size(nu1) * class_size(nu2) *
                            pow_uint(ExactInt(2), prof.orbit_count().get_ui());
            }
        CHECK(row_sum == exact_div(pair_sum, factorial(n) * factorial(n)));
    }
}

TEST_CASE("n=3 row sum is 10") {
    RowCache rc = compute_row(3);
    ExactInt sum = 0;
    for (const ExactInt& v : rc.row) sum += v;
    CHECK(sum == 10);
}

TEST_CASE("t_value spot values and its partition-sum cross-check") {
    CacheDirGuard guard("./.orbits-test-cache-value");
    for (unsigned n = 1; n <= 5; ++n) {
        CHECK(t_value(n, 0) == 1);
        CHECK(t_value(n, 1) == 1);
    }
    CHECK(t_value(4, 7) == 691);
    CHECK(t_value(5, 2) == 6);  // p(5) - 1
    CHECK_THROWS_AS(t_value(4, 25), std::invalid_argument);
}

TEST_CASE("burnside sums are divisible by n!^2 at every k") {
    for (unsigned n = 1; n <= 4; ++n) {
        std::vector<ExactInt> sums = burnside_pair_sum(n);
        const ExactInt nf2 = factorial(n) * factorial(n);
        for (const ExactInt& s : sums) CHECK(s % nf2 == 0);
    }
}

TEST_CASE("serialization round-trips bit-identically") {
    RowCache rc = compute_row(4);
    std::string text = serialize_row(rc);
    RowCache back = parse_row(text);
    CHECK(back.n == rc.n);
    CHECK(back.row == rc.row);
    CHECK(back.checksum == rc.checksum);
    CHECK(serialize_row(back) == text);
}

TEST_CASE("parser rejects corrupted cache files") {
    RowCache rc = compute_row(3);
    std::string text = serialize_row(rc);

    std::string bad_value = text;
    bad_value.replace(bad_value.find("2 2"), 3, "2 3");
    CHECK_THROWS_AS(parse_row(bad_value), IoError);

    std::string bad_checksum = text;
    bad_checksum[bad_checksum.size() - 2] = bad_checksum[bad_checksum.size() - 2] == 'a' ? 'b' : 'a';
    CHECK_THROWS_AS(parse_row(bad_checksum), IoError);

    CHECK_THROWS_AS(parse_row("garbage\n"), IoError);
    CHECK_THROWS_AS(parse_row(""), IoError);
}

TEST_CASE("disk cache: save, load, and reuse") {
    CacheDirGuard guard("./.orbits-test-cache-disk");
    CHECK(!load_row(4).has_value());

    RowCache first = t_row(4);  // computes and saves
    CHECK(std::filesystem::exists(row_cache_path(4)));

    auto loaded = load_row(4);
    REQUIRE(loaded.has_value());
    CHECK(loaded->row == first.row);
    CHECK(loaded->checksum == first.checksum);

    RowCache second = t_row(4);  // served from disk
    CHECK(second.row == first.row);

    // corrupt the file: t_row must fall back to recomputation
    {
        std::ofstream f(row_cache_path(4), std::ios::binary | std::ios::trunc);
        f << "orbits-row v1 n=4\nnot a row\n";
    }
    CHECK(!load_row(4).has_value());
    RowCache third = t_row(4);
    CHECK(third.row == first.row);
}
