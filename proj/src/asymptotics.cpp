#include "orbits/asymptotics.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "orbits/perm.hpp"
#include "orbits/profile.hpp"

namespace orbits {

ExactRatio lambda_nk(unsigned n, std::uint64_t k) {
    if (n < 1) throw std::invalid_argument("lambda_nk requires n >= 1");
    const std::uint64_t nf = factorial_u64(n);
    if (k > nf) throw std::invalid_argument("lambda_nk: k out of range [0, n!]");
    return {binomial_uint(nf, k), factorial(n) * factorial(n)};
}

double bulk_profile(const RowCache& row, double x) {
    if (row.n < 2) throw std::invalid_argument("bulk_profile requires n >= 2");
    const std::uint64_t nf = factorial_u64(row.n);
    const double nfd = static_cast<double>(nf);
    const double kf = std::floor(nfd / 2.0 + x * std::sqrt(nfd / 4.0));
    if (kf < 0.0 || kf > nfd) return 0.0;
    const std::uint64_t k = static_cast<std::uint64_t>(kf);
    // T(n,k) n!^2 / binom(n!, n!/2)
    ExactRatio b{row.row[k] * factorial(row.n) * factorial(row.n), binomial_uint(nf, nf / 2)};
    return ratio_to_float(b);
}

ExactRatio relative_excess(const RowCache& row, std::int64_t k) {
    const std::uint64_t nf = factorial_u64(row.n);
    if (k < 3 || static_cast<std::uint64_t>(k) > nf - 3)
        throw std::invalid_argument("relative_excess: k must lie in [3, n!-3]");
    ExactInt denom = binomial_uint(nf, static_cast<std::uint64_t>(k));
    ExactInt num = row.row[static_cast<std::uint64_t>(k)] * factorial(row.n) * factorial(row.n) -
                   denom;
    return {std::move(num), std::move(denom)};
}

std::vector<ZSumExcessRow> z_sum_excess(unsigned n_max) {
    if (n_max > 40) throw ResourceError("z_sum_excess: n_max <= 40");
    std::vector<ZSumExcessRow> out;
    for (unsigned n = 1; n <= n_max; ++n) {
        ExactInt sum = 0;
        for_each_partition(n, [&](const Partition& nu) { sum += z_value(nu); });
        ExactInt excess = sum - factorial(n);
        double ratio =
            ratio_to_float({excess * (static_cast<unsigned long>(n) * n), 2 * factorial(n)});
        out.push_back({n, std::move(excess), ratio});
    }
    return out;
}

const CheckRow* CheckReport::first_failure() const {
    for (const auto& row : rows)
        if (!row.pass) return &row;
    return nullptr;
}

namespace {

void record(CheckReport& rep, std::string params, ExactInt lhs, ExactInt rhs, bool pass) {
    double ratio = rhs > 0 ? ratio_to_float({lhs, rhs}) : 0.0;
    if (ratio > rep.max_ratio) rep.max_ratio = ratio;
    rep.rows.push_back({std::move(params), lhs.get_str(), rhs.get_str(), pass});
    ++rep.checked;
    if (!pass) ++rep.failed;
}

// lhs <= rhs checks
void record_le(CheckReport& rep, std::string params, ExactInt lhs, ExactInt rhs) {
    bool pass = lhs <= rhs;
    record(rep, std::move(params), std::move(lhs), std::move(rhs), pass);
}

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

}  // namespace

CheckReport check_prime_power_z_bound(unsigned n_max, unsigned p_max) {
    if (n_max > 14 || p_max > 13)
        throw ResourceError("check_prime_power_z_bound: n_max <= 14, p_max <= 13");
    CheckReport rep;
    rep.name = "prime_power_z_bound";
    for (unsigned n = 1; n <= n_max; ++n) {
        const ExactInt nfact = factorial(n);
        for (std::uint64_t p = 2; p <= p_max; ++p) {
            if (!is_prime(p)) continue;
            for_each_partition(n, [&](const Partition& nu) {
                const ExactInt z = z_value(nu);
                const ExactInt zp = z_value(power_cycle_type(nu, p));
                // z_{nu^p} <= n! p^{(1-n)/p} z_nu, p-th power cleared:
                ExactInt lhs = pow_uint(zp, p) * pow_uint(ExactInt(p), n - 1);
                ExactInt rhs = pow_uint(nfact, p) * pow_uint(z, p);
                record_le(rep, "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                   " nu=" + nu.to_string(),
                          std::move(lhs), std::move(rhs));
            });
        }
    }
    return rep;
}

CheckReport check_period_profile_bounds(unsigned n) {
    if (n > 6) throw ResourceError("check_period_profile_bounds: n <= 6");
    CheckReport rep;
    rep.name = "period_profile_bounds";
    const std::vector<Partition> types = enumerate_partitions(n);
    const ExactInt nfact = factorial(n);
    for (const Partition& nu1 : types) {
        const ExactInt z1 = z_value(nu1);
        for (const Partition& nu2 : types) {
            const ExactInt z2 = z_value(nu2);
            const PeriodProfile prof = profile_pair(nu1, nu2);
            const std::string pair_tag = "nu1=" + nu1.to_string() + " nu2=" + nu2.to_string();

            // |T(1)| = z_{nu1} [nu1 == nu2], exactly.
            ExactInt t1 = prof.count(1);
            ExactInt expect1 = (nu1 == nu2) ? z1 : ExactInt(0);
            record(rep, pair_tag + " j=1 exact", t1, expect1, t1 == expect1);

            for (const auto& [j, c] : prof.entries()) {
                record_le(rep, pair_tag + " j=" + std::to_string(j) + " trivial", c, nfact);
                if (is_prime(j)) {
                    // |T(j)| <= j^{(1-n)/j} n! sqrt(z1 z2), power-cleared by 2j:
                    ExactInt lhs = pow_uint(c, 2 * j) * pow_uint(ExactInt(j), 2 * (n - 1));
                    ExactInt rhs = pow_uint(nfact * nfact * z1 * z2, j);
                    record_le(rep, pair_tag + " j=" + std::to_string(j) + " prime",
                              std::move(lhs), std::move(rhs));
                }
            }
        }
    }
    return rep;
}

CheckReport check_classical() {
    CheckReport rep;
    rep.name = "classical";

    // (i) (n/k)^k <= binom(n,k) <= n^k / k!
    for (std::uint64_t n = 1; n <= 60; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
            ExactInt b = binomial_uint(n, k);
            ExactInt nk = pow_uint(ExactInt(n), k);
            record_le(rep, "(i-lower) n=" + std::to_string(n) + " k=" + std::to_string(k),
                      nk, b * pow_uint(ExactInt(k), k));
            record_le(rep, "(i-upper) n=" + std::to_string(n) + " k=" + std::to_string(k),
                      b * factorial(k), std::move(nk));
        }
    }

    // (ii) binom(n,m)^k <= binom(kn,km)
    for (std::uint64_t n = 1; n <= 20; ++n)
        for (std::uint64_t k = 1; k <= 5; ++k)
            for (std::uint64_t m = 0; m <= n; ++m)
                record_le(rep,
                          "(ii) n=" + std::to_string(n) + " k=" + std::to_string(k) +
                              " m=" + std::to_string(m),
                          pow_uint(binomial_uint(n, m), k), binomial_uint(k * n, k * m));

    // (iii) generalized Chu-Vandermonde: the sum over compositions
    // k_1+...+k_p = m of prod binom(n_i,k_i) equals binom(sum n_i, m).
    for (int p = 2; p <= 3; ++p) {
        std::vector<std::uint64_t> ns(p, 1);
        for (;;) {
            std::uint64_t total = 0;
            for (std::uint64_t v : ns) total += v;
            for (std::uint64_t m = 0; m <= total; ++m) {
                ExactInt sum = 0;
                std::vector<std::uint64_t> ks(p, 0);
                std::function<void(int, std::uint64_t)> walk = [&](int pos, std::uint64_t left) {
                    if (pos == p - 1) {
                        ks[pos] = left;
                        ExactInt term = 1;
                        for (int i = 0; i < p; ++i) term *= binomial_uint(ns[i], ks[i]);
                        sum += term;
                        return;
                    }
                    for (std::uint64_t v = 0; v <= left; ++v) {
                        ks[pos] = v;
                        walk(pos + 1, left - v);
                    }
                };
                walk(0, m);
                std::string tag = "(iii) n=[";
                for (int i = 0; i < p; ++i) tag += (i ? "," : "") + std::to_string(ns[i]);
                tag += "] m=" + std::to_string(m);
                ExactInt rhs = binomial_uint(total, m);
                bool pass = sum == rhs;
                record(rep, std::move(tag), std::move(sum), std::move(rhs), pass);
            }
            int pos = p - 1;
            while (pos >= 0 && ns[pos] == 8) {
                ns[pos] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++ns[pos];
        }
    }

    // (iv) 2^{2n}/(2 sqrt n) <= binom(2n,n) <= 2^{2n}/sqrt(pi n).
    // Lower bound squared: 2^{4n} <= binom^2 * 4n. Upper bound squared uses
    // the rational over-approximation pi < 355/113: binom^2 n 355 <= 2^{4n} 113.
    for (std::uint64_t n = 1; n <= 60; ++n) {
        ExactInt b2 = binomial_uint(2 * n, n);
        b2 *= b2;
        ExactInt p4 = pow_uint(ExactInt(2), 4 * n);
        record_le(rep, "(iv-lower) n=" + std::to_string(n), p4, b2 * (4 * n));
        record_le(rep, "(iv-upper) n=" + std::to_string(n), b2 * n * 355, p4 * 113);
    }

    // (v) log-concavity of k -> binom(n,k) on 1 <= k <= n-1.
    for (std::uint64_t n = 2; n <= 60; ++n)
        for (std::uint64_t k = 1; k + 1 <= n; ++k)
            record_le(rep, "(v) n=" + std::to_string(n) + " k=" + std::to_string(k),
                      binomial_uint(n, k - 1) * binomial_uint(n, k + 1),
                      binomial_uint(n, k) * binomial_uint(n, k));

    return rep;
}

namespace {

// Largest r with r^m <= s.
std::uint64_t integer_mth_root(std::uint64_t s, unsigned m) {
    std::uint64_t r = 0;
    while (pow_uint(ExactInt(r + 1), m) <= static_cast<unsigned long>(s)) ++r;
    return r;
}

// t_{n,m} = ceil((s - s^{1/m})/m) - 1 with s = n+2, evaluated without floats:
// the ceiling is the smallest c >= 0 with s - c*m <= s^{1/m}, and comparisons
// of integers against the (possibly irrational) root reduce to m-th powers.
std::uint64_t t_nm_exact(unsigned n, unsigned m) {
    const std::uint64_t s = n + 2;
    const std::uint64_t r = integer_mth_root(s, m);
    const bool exact_root = pow_uint(ExactInt(r), m) == static_cast<unsigned long>(s);
    std::uint64_t c = 0;
    for (;; ++c) {
        if (s <= c * static_cast<std::uint64_t>(m)) break;  // s - c*m <= 0 < root
        const std::uint64_t a = s - c * m;
        if (exact_root ? (a <= r) : (pow_uint(ExactInt(a), m) < static_cast<unsigned long>(s)))
            break;
    }
    internal_check(c >= 1, "t_nm: ceiling must be >= 1");
    return c - 1;
}

}  // namespace

MaxPowerRatio max_power_ratio(unsigned n, unsigned m) {
    if (n < 1 || n > 25) throw ResourceError("max_power_ratio: n in [1, 25]");
    if (m < 1 || m > 6) throw ResourceError("max_power_ratio: m in [1, 6]");

    MaxPowerRatio out;
    bool have = false;
    for_each_partition(n, [&](const Partition& nu) {
        ExactRatio r{z_value(power_cycle_type(nu, m)), z_value(nu)};
        if (!have || compare(r, out.ratio) > 0) {
            out.maximizer = nu;
            out.ratio = std::move(r);
            have = true;
        }
    });

    if (m == 2 || m == 3) {
        const std::uint64_t t = t_nm_exact(n, m);
        internal_check(t * m <= n, "t_nm exceeds n/m");
        ExactInt closed = exact_div(
            factorial(n),
            factorial(n - t * m) * pow_uint(ExactInt(m), t) * factorial(t));
        out.agree = compare(out.ratio, ExactRatio{closed, 1}) == 0;
        out.closed_form = std::move(closed);
        out.t_nm = t;
    }
    return out;
}

std::string report_csv(const CheckReport& report) {
    std::ostringstream os;
    os << "params,lhs,rhs,pass\n";
    for (const auto& row : report.rows)
        os << '"' << row.params << "\"," << row.lhs << ',' << row.rhs << ','
           << (row.pass ? "true" : "false") << '\n';
    return os.str();
}

std::string report_json_summary(const CheckReport& report) {
    std::ostringstream os;
    os << "{\"name\":\"" << report.name << "\",\"checked\":" << report.checked
       << ",\"failed\":" << report.failed << ",\"max_ratio\":" << report.max_ratio
       << ",\"pass\":" << (report.pass() ? "true" : "false");
    if (const CheckRow* f = report.first_failure())
        os << ",\"first_failure\":{\"params\":\"" << f->params << "\",\"lhs\":\"" << f->lhs
           << "\",\"rhs\":\"" << f->rhs << "\"}";
    os << "}";
    return os.str();
}

}  // namespace orbits
