#include "abc/arith.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

namespace abc {

Rational::Rational(int64_t p, int64_t q) : num(p), den(q) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    auto parse_int = [](std::string_view s) -> int64_t {
        int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw std::domain_error("not a rational: '" + std::string(s) + "'");
        return v;
    };
    std::string_view s(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s), 1);
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

bool Rational::operator<(const Rational& rhs) const {
    return static_cast<__int128>(num) * rhs.den < static_cast<__int128>(rhs.num) * den;
}

bool Rational::operator<=(const Rational& rhs) const { return !(rhs < *this); }

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

BoundParams::BoundParams(Rational eps, u64 n) : epsilon(eps), n_max(n) {
    if (epsilon.num <= 0 || epsilon.num >= epsilon.den)
        throw std::domain_error("epsilon must lie strictly in (0,1), got " + epsilon.str());
    if (epsilon.den > 1000)
        throw std::domain_error("epsilon denominator exceeds 1000 after reduction");
    if (n_max < 2) throw std::domain_error("n_max must be at least 2");
}

Factorization factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize(0)");
    Factorization f;
    f.value = n;
    auto strip = [&](u64 p) {
        if (n % p) return;
        u32 e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (u64 p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

u64 radical(u64 n) {
    Factorization f = factorize(n);
    u64 r = 1;
    for (auto [p, e] : f.factors) r *= p;
    return r;
}

u64 divisor_count(u64 n) {
    Factorization f = factorize(n);
    u64 t = 1;
    for (auto [p, e] : f.factors) t *= e + 1;
    return t;
}

bool is_coprime(u64 a, u64 b) {
    if (a == 0 || b == 0) throw std::domain_error("is_coprime requires positive arguments");
    return std::gcd(a, b) == 1;
}

u128 radical_of_coprime_product(std::span<const u64> parts) {
    for (u64 p : parts)
        if (p == 0) throw std::domain_error("radical_of_coprime_product: zero part");
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (std::gcd(parts[i], parts[j]) != 1)
                throw std::invalid_argument("radical_of_coprime_product: parts not pairwise coprime");
    u128 acc = 1;
    for (u64 p : parts) {
        u64 r = radical(p);
        if (acc > ~static_cast<u128>(0) / r)
            throw std::domain_error("radical_of_coprime_product: product exceeds 128 bits");
        acc *= r;
    }
    return acc;
}

namespace {

void check_threshold_args(u128 rad_value, u64 c) {
    if (rad_value == 0) throw std::domain_error("below_threshold: rad_value must be positive");
    if (c < 2) throw std::domain_error("below_threshold: c must be at least 2");
}

}  // namespace

bool below_threshold_exact(u128 rad_value, u64 c, const BoundParams& params) {
    check_threshold_args(rad_value, c);
    const u64 p = static_cast<u64>(params.epsilon.num);
    const u64 q = static_cast<u64>(params.epsilon.den);
    return pow_less(rad_value, q, BigUint::pow(BigUint(c), q - p));
}

bool below_threshold(u128 rad_value, u64 c, const BoundParams& params) {
    check_threshold_args(rad_value, c);
    const long double eps =
        static_cast<long double>(params.epsilon.num) / static_cast<long double>(params.epsilon.den);
    const long double t = powl(static_cast<long double>(c), 1.0L - eps);
    const long double r = static_cast<long double>(rad_value);
    if (r < t * (1.0L - 1e-9L)) return true;
    if (r > t * (1.0L + 1e-9L)) return false;
    return below_threshold_exact(rad_value, c, params);
}

u64 threshold_cap(u64 c, const Rational& eps) {
    BoundParams params(eps, 2);  // validates eps
    if (c < 2) throw std::domain_error("threshold_cap: c must be at least 2");
    const u64 p = static_cast<u64>(eps.num);
    const u64 q = static_cast<u64>(eps.den);
    const BigUint rhs = BigUint::pow(BigUint(c), q - p);
    const long double est =
        powl(static_cast<long double>(c), 1.0L - static_cast<long double>(p) / q);
    u64 t = est < 1.0L ? 1 : static_cast<u64>(est);
    if (t >= c) t = c - 1;  // the threshold is strictly below c
    while (t > 1 && !pow_less(t, q, rhs)) --t;
    while (t < c && pow_less(static_cast<u128>(t) + 1, q, rhs)) ++t;
    return t;
}

}  // namespace abc
