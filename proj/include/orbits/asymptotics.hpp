#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbits/exact.hpp"
#include "orbits/orbit_count.hpp"
#include "orbits/partitions.hpp"

namespace orbits {

// Lambda_n(k) = binom(n!, k) / n!^2, the all-orbits-maximal lower bound for
// T(n,k).
ExactRatio lambda_nk(unsigned n, std::uint64_t k);

// B_n(x) = T(n, k_n(x)) / Lambda_n with k_n(x) = floor(n!/2 + x*sqrt(n!/4))
// and Lambda_n = binom(n!, n!/2)/n!^2; 0 when k_n(x) falls outside [0, n!].
// Converges to exp(-x^2/2). Evaluated exactly, converted at the end.
double bulk_profile(const RowCache& row, double x);

// R(n,k) = T(n,k) n!^2 / binom(n!,k) - 1, exact and signed. Only defined on
// k in [3, n!-3]; anything else is rejected.
ExactRatio relative_excess(const RowCache& row, std::int64_t k);

// X_n = sum_{nu |- n} z_nu - n!, which grows like 2 n!/n^2. The ratio column
// X_n n^2 / (2 n!) must drift toward 1.
struct ZSumExcessRow {
    unsigned n;
    ExactInt excess;
    double ratio;
};
std::vector<ZSumExcessRow> z_sum_excess(unsigned n_max);  // n_max <= 40

// --- exact inequality sweeps -------------------------------------------------
// Every pass/fail decision below is made in exact integer arithmetic after
// clearing roots and fractional powers by raising both sides to integer
// powers; floats appear only in the reported ratios.

struct CheckRow {
    std::string params;
    std::string lhs;
    std::string rhs;
    bool pass;
};

struct CheckReport {
    std::string name;
    std::vector<CheckRow> rows;
    std::size_t checked = 0;
    std::size_t failed = 0;
    double max_ratio = 0.0;  // max observed lhs/rhs
    bool pass() const { return failed == 0; }
    const CheckRow* first_failure() const;
};

// z_{nu^p} <= n! p^{(1-n)/p} z_nu for primes p, verified as
// z_{nu^p}^p * p^{n-1} <= n!^p * z_nu^p. n_max <= 14, p_max <= 13.
CheckReport check_prime_power_z_bound(unsigned n_max, unsigned p_max);

// Pair-profile bounds for all ordered pairs (nu1, nu2) of partitions of n:
// |T(1)| = z_{nu1}[nu1==nu2] exactly, |T(j)| <= n! for every j, and for
// prime j: |T(j)|^{2j} j^{2(n-1)} <= (n!^2 z_{nu1} z_{nu2})^j. n <= 6.
CheckReport check_period_profile_bounds(unsigned n);

// Classical binomial estimates, exhaustively within fixed sweeps:
//   (i)   (n/k)^k <= binom(n,k) <= n^k/k!            n <= 60
//   (ii)  binom(n,m)^k <= binom(kn,km)               n <= 20, k <= 5
//   (iii) Chu-Vandermonde over compositions          p <= 3, n_i <= 8
//   (iv)  2^{2n}/(2 sqrt n) <= binom(2n,n) <= 2^{2n}/sqrt(pi n)   n <= 60
//   (v)   binom(n,k)^2 >= binom(n,k-1) binom(n,k+1)  n <= 60
CheckReport check_classical();

// Brute-force max over nu |- n of z_{nu^m}/z_nu, against the conjectured
// closed form n!/((n-tm)! m^t t!) with t = ceil((n+2-(n+2)^{1/m})/m) - 1,
// available for m in {2,3}. Disagreement is a finding, not an error.
struct MaxPowerRatio {
    Partition maximizer;
    ExactRatio ratio;
    std::optional<ExactInt> closed_form;  // m in {2,3} only
    std::uint64_t t_nm = 0;
    bool agree = false;
};
MaxPowerRatio max_power_ratio(unsigned n, unsigned m);  // n <= 25, m <= 6

std::string report_csv(const CheckReport& report);
std::string report_json_summary(const CheckReport& report);

}  // namespace orbits
