#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace abc {

using u128 = unsigned __int128;

// Unsigned big integer on 64-bit limbs, little-endian, no trailing zero
// limbs. Covers exactly what exact power comparisons need: construction,
// multiplication, exponentiation and ordering.
class BigUint {
public:
    BigUint() = default;  // zero
    explicit BigUint(uint64_t v) {
        if (v) limbs_.push_back(v);
    }
    static BigUint from_u128(u128 v);

    bool is_zero() const { return limbs_.empty(); }
    std::size_t bit_length() const;  // 0 for zero

    BigUint& operator*=(const BigUint& rhs);
    friend BigUint operator*(BigUint lhs, const BigUint& rhs) {
        lhs *= rhs;
        return lhs;
    }

    static BigUint pow(const BigUint& base, uint64_t exp);  // 0^0 = 1

    int compare(const BigUint& rhs) const;  // -1, 0, +1
    bool operator<(const BigUint& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const BigUint& rhs) const { return compare(rhs) <= 0; }
    bool operator==(const BigUint& rhs) const { return limbs_ == rhs.limbs_; }

    const std::vector<uint64_t>& limbs() const { return limbs_; }

private:
    std::vector<uint64_t> limbs_;
};

// Decides base^exp < rhs, using bit-length bounds to avoid forming the
// full power outside a narrow window:
//   2^{exp*(L-1)} <= base^exp < 2^{exp*L}   where L = bit_length(base).
bool pow_less(u128 base, uint64_t exp, const BigUint& rhs);

}  // namespace abc
