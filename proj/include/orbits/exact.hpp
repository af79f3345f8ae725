#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "orbits/errors.hpp"

namespace orbits {

// Every census quantity in this project (n!, z_nu, binomials, T(n,k)) is an
// exact integer; no pass/fail decision is ever made in floating point.
using ExactInt = mpz_class;

ExactInt factorial(std::uint64_t n);

// a/b with the remainder checked to be zero.
ExactInt exact_div(const ExactInt& a, const ExactInt& b);
ExactInt exact_div_ui(const ExactInt& a, std::uint64_t b);

// binom(n,k) for an arbitrary-precision top argument: falling-factorial
// product with an exact division at every step, so intermediates never exceed
// the final value times the current factor. Returns 0 when n < k.
ExactInt binomial(const ExactInt& n, std::uint64_t k);
ExactInt binomial_uint(std::uint64_t n, std::uint64_t k);

ExactInt pow_uint(const ExactInt& base, std::uint64_t e);

// Unreduced exact ratio. den must stay positive; num may be signed.
struct ExactRatio {
    ExactInt num;
    ExactInt den{1};
};

// Sign of a - b, by cross multiplication.
int compare(const ExactRatio& a, const ExactRatio& b);

// double conversion with relative error <= 1e-12; reporting only.
double ratio_to_float(const ExactRatio& r);

}  // namespace orbits
