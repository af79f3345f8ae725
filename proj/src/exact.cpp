#include "orbits/exact.hpp"

namespace orbits {

void internal_fail(const std::string& msg) {
    throw InternalError("internal invariant violated: " + msg);
}

ExactInt factorial(std::uint64_t n) {
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
    internal_check(b != 0, "exact_div by zero");
    ExactInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    internal_check(r == 0, "exact_div with nonzero remainder");
    return q;
}

ExactInt exact_div_ui(const ExactInt& a, std::uint64_t b) {
    return exact_div(a, ExactInt(static_cast<unsigned long>(b)));
}

ExactInt binomial(const ExactInt& n, std::uint64_t k) {
    if (n < 0) internal_fail("binomial with negative top argument");
    if (n < static_cast<unsigned long>(k)) return 0;
    ExactInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r *= n - static_cast<unsigned long>(i);
        // r held binom(n,i)*(n-i); binom(n,i+1)*(i+1) equals that exactly.
        r = exact_div_ui(r, i + 1);
    }
    return r;
}

ExactInt binomial_uint(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

ExactInt pow_uint(const ExactInt& base, std::uint64_t e) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

int compare(const ExactRatio& a, const ExactRatio& b) {
    internal_check(a.den > 0 && b.den > 0, "ExactRatio with nonpositive denominator");
    ExactInt lhs = a.num * b.den;
    ExactInt rhs = b.num * a.den;
    return cmp(lhs, rhs);
}

double ratio_to_float(const ExactRatio& r) {
    internal_check(r.den != 0, "ratio_to_float with zero denominator");
    mpq_class q(r.num, r.den);
    q.canonicalize();
    return q.get_d();
}

}  // namespace orbits
