#include <doctest.h>

#include <map>
#include <numeric>

#include "orbits/partitions.hpp"
#include "orbits/perm.hpp"

using namespace orbits;

namespace {
// p(0..20)
constexpr std::uint64_t kPartitionCounts[21] = {1,  1,  2,  3,   5,   7,   11,  15,  22,  30, 42,
                                                56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
}

TEST_CASE("enumeration counts match p(n)") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0] == Partition{});
    for (std::uint32_t n = 0; n <= 20; ++n) CHECK(partition_count(n) == kPartitionCounts[n]);
}

TEST_CASE("enumeration order is reverse-lexicographic in the parts") {
    std::vector<std::vector<std::uint32_t>> expected = {
        {6},       {5, 1},       {4, 2},    {4, 1, 1},       {3, 3},    {3, 2, 1},
        {3, 1, 1, 1}, {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    std::vector<Partition> got = enumerate_partitions(6);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == Partition::from_parts(expected[i]));
}

TEST_CASE("enumeration refuses beyond the configured limit") {
    CHECK_THROWS_AS(enumerate_partitions(80), ResourceError);
    CHECK_THROWS_AS(enumerate_partitions(10, 9), ResourceError);
}

TEST_CASE("partition invariants") {
    Partition p = Partition::from_parts({3, 1, 1});
    CHECK(p.n() == 5);
    CHECK(p.multiplicity(1) == 2);
    CHECK(p.multiplicity(3) == 1);
    CHECK(p.multiplicity(2) == 0);
    CHECK(p.to_string() == "(3,1^2)");
    CHECK_THROWS_AS(Partition::from_mults({{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_mults({{3, 1}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_parts({0}), std::invalid_argument);
}

TEST_CASE("z values") {
    CHECK(z_value(Partition::ones(5)) == 120);
    CHECK(z_value(Partition::from_parts({2, 1})) == 2);
    for (std::uint32_t n = 1; n <= 9; ++n) CHECK(z_value(Partition::single_cycle(n)) == n);
}

TEST_CASE("class sizes") {
    CHECK(class_size(Partition::ones(3)) == 1);
    CHECK(class_size(Partition::from_parts({2, 1})) == 3);
    // conjugacy classes partition S_n
    for (std::uint32_t n = 0; n <= 10; ++n) {
        ExactInt total = 0;
        for_each_partition(n, [&](const Partition& nu) { total += class_size(nu); });
        CHECK(total == factorial(n));
    }
}

TEST_CASE("power map basics") {
    Partition six = Partition::single_cycle(6);
    CHECK(power_cycle_type(six, 1) == six);
    CHECK(power_cycle_type(six, 2) == Partition::from_parts({3, 3}));
    CHECK(power_cycle_type(six, 3) == Partition::from_parts({2, 2, 2}));
    CHECK(power_cycle_type(Partition::from_parts({4, 3}), 12) == Partition::ones(7));
}

TEST_CASE("power map matches explicit permutation powers") {
    // gcd splitting is adopted as the definition; the oracle is the cycle
    // decomposition of an explicit g^m.
    for (std::uint32_t n = 1; n <= 8; ++n) {
        for (const Partition& nu : enumerate_partitions(n)) {
            Perm g = permutation_with_type(nu);
            REQUIRE(cycle_type_of(g) == nu);
            for (std::uint64_t m = 1; m <= 12; ++m)
                CHECK(power_cycle_type(nu, m) == cycle_type_of(perm_power(g, m)));
        }
    }
}

TEST_CASE("power map composes: nu^(ab) = (nu^a)^b") {
    for (std::uint32_t n = 1; n <= 8; ++n)
        for (const Partition& nu : enumerate_partitions(n))
            for (std::uint64_t a = 1; a <= 12; ++a)
                for (std::uint64_t b = 1; b <= 12; ++b)
                    CHECK(power_cycle_type(nu, a * b) ==
                          power_cycle_type(power_cycle_type(nu, a), b));
}

TEST_CASE("powers only grow the centralizer") {
    for (std::uint32_t n = 1; n <= 10; ++n)
        for (const Partition& nu : enumerate_partitions(n)) {
            ExactInt z = z_value(nu);
            for (std::uint64_t m = 1; m <= 12; ++m)
                CHECK(z_value(power_cycle_type(nu, m)) >= z);
        }
}

TEST_CASE("power map preserves n") {
    for (std::uint32_t n = 0; n <= 10; ++n)
        for (const Partition& nu : enumerate_partitions(n))
            for (std::uint64_t m = 1; m <= 12; ++m)
                CHECK(power_cycle_type(nu, m).n() == n);
}

TEST_CASE("mobius values and the divisor-sum identity") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    for (std::uint64_t j = 1; j <= 10000; ++j) {
        int sum = 0;
        for (std::uint64_t d = 1; d * d <= j; ++d) {
            if (j % d != 0) continue;
            sum += mobius(d);
            if (d != j / d) sum += mobius(j / d);
        }
        CHECK(sum == (j == 1 ? 1 : 0));
    }
}

TEST_CASE("order is the lcm of the parts and is minimal") {
    CHECK(order_lcm(Partition::ones(7)) == 1);
    CHECK(order_lcm(Partition::from_parts({2, 3})) == 6);
    for (std::uint32_t n = 1; n <= 10; ++n)
        for (const Partition& nu : enumerate_partitions(n)) {
            std::uint64_t ord = order_lcm(nu);
            // scan m = 1..2*ord: nu^m is trivial exactly when ord | m
            for (std::uint64_t m = 1; m <= 2 * ord; ++m) {
                bool trivial = power_cycle_type(nu, m) == Partition::ones(n);
                CHECK(trivial == (m % ord == 0));
            }
        }
}
