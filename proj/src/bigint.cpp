#include "abc/bigint.hpp"

#include <bit>

namespace abc {

BigUint BigUint::from_u128(u128 v) {
    BigUint r;
    if (v) {
        r.limbs_.push_back(static_cast<uint64_t>(v));
        uint64_t hi = static_cast<uint64_t>(v >> 64);
        if (hi) r.limbs_.push_back(hi);
    }
    return r;
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) +
           (64 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
    if (is_zero() || rhs.is_zero()) {
        limbs_.clear();
        return *this;
    }
    const std::size_t n = limbs_.size(), m = rhs.limbs_.size();
    std::vector<uint64_t> out(n + m, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const uint64_t a = limbs_[i];
        if (a == 0) continue;
        u128 carry = 0;
        for (std::size_t j = 0; j < m; ++j) {
            u128 cur = static_cast<u128>(a) * rhs.limbs_[j] + out[i + j] + carry;
            out[i + j] = static_cast<uint64_t>(cur);
            carry = cur >> 64;
        }
        uint64_t c = static_cast<uint64_t>(carry);
        for (std::size_t k = i + m; c; ++k) {
            u128 cur = static_cast<u128>(out[k]) + c;
            out[k] = static_cast<uint64_t>(cur);
            c = static_cast<uint64_t>(cur >> 64);
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    limbs_ = std::move(out);
    return *this;
}

BigUint BigUint::pow(const BigUint& base, uint64_t exp) {
    BigUint result(1);
    BigUint b = base;
    while (exp) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

int BigUint::compare(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
    }
    return 0;
}

bool pow_less(u128 base, uint64_t exp, const BigUint& rhs) {
    if (rhs.is_zero()) return false;
    BigUint b = BigUint::from_u128(base);
    if (exp == 0) return BigUint(1) < rhs;
    if (b.is_zero()) return true;  // 0 < rhs
    const u128 bl = b.bit_length();
    const u128 rl = rhs.bit_length();
    if (static_cast<u128>(exp) * (bl - 1) >= rl) return false;  // base^exp >= 2^rl > rhs
    if (static_cast<u128>(exp) * bl <= rl - 1) return true;     // base^exp < 2^{rl-1} <= rhs
    return BigUint::pow(b, exp) < rhs;
}

}  // namespace abc
