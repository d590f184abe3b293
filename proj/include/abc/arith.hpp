#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abc/bigint.hpp"

namespace abc {

using u32 = uint32_t;
using u64 = uint64_t;

// Thrown when a request exceeds a configured memory or runtime budget.
// Maps to CLI exit code 3; plain domain/validation errors map to 2.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational, always kept reduced with positive denominator.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t p, int64_t q);

    // Accepts "p/q" or a bare integer "k". Anything else is a domain error.
    static Rational parse(const std::string& text);

    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& rhs) const;
    bool operator<=(const Rational& rhs) const;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

// Range parameters of the exceptional-set inequality rad(abc) < c^{1-eps}.
// epsilon must be a reduced rational in (0,1) with denominator <= 1000 so
// that membership is decided by exact integer comparisons.
struct BoundParams {
    Rational epsilon;
    u64 n_max = 0;

    BoundParams(Rational eps, u64 n);
};

struct Factorization {
    u64 value = 1;
    std::vector<std::pair<u64, u32>> factors;  // (prime, exponent), primes increasing
};

// Trial division by 2, 3, then a 6k+-1 wheel up to sqrt(n). Meant for
// single values and oracles; bulk work goes through the sieve tables.
Factorization factorize(u64 n);

u64 radical(u64 n);        // product of distinct prime divisors, radical(1) = 1
u64 divisor_count(u64 n);  // tau(n)
bool is_coprime(u64 a, u64 b);

// rad of a product of pairwise coprime parts, as the product of the
// individual radicals. The full product is never formed.
u128 radical_of_coprime_product(std::span<const u64> parts);

// Strict test rad_value < c^{1-eps}, decided exactly as
// rad_value^q < c^{q-p} for eps = p/q. A long-double filter screens
// inputs; anything within relative margin 1e-9 of equality falls through
// to the integer comparison.
bool below_threshold(u128 rad_value, u64 c, const BoundParams& params);

// The pure big-integer route, no floating-point filter.
bool below_threshold_exact(u128 rad_value, u64 c, const BoundParams& params);

// Largest integer t with t^q < c^{q-p}; every radical value <= t passes
// below_threshold and every larger one fails.
u64 threshold_cap(u64 c, const Rational& eps);

}  // namespace abc
