#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "abc/arith.hpp"

namespace abc {

// Bulk rad(n) and tau(n) over [1, n_max]. Immutable once built; safe for
// any number of concurrent readers.
class SieveTables {
public:
    enum class Storage { bits64, bits32 };

    static constexpr u64 kDefaultBudget = 100'000'000;

    // threads == 1 runs the multiplicative rad sieve plus an spf-based tau
    // pass; threads > 1 runs a segmented variant over the same values.
    // Both produce identical tables.
    static SieveTables build(u64 n_max, Storage storage = Storage::bits64,
                             unsigned threads = 1, u64 budget = kDefaultBudget);

    u64 n_max() const { return n_max_; }
    Storage storage() const { return storage_; }

    u64 rad(u64 n) const {
        assert(n >= 1 && n <= n_max_);
        return storage_ == Storage::bits64 ? rad64_[n] : rad32_[n];
    }
    u64 tau(u64 n) const {
        assert(n >= 1 && n <= n_max_);
        return storage_ == Storage::bits64 ? tau64_[n] : tau32_[n];
    }

    // Flat binary cache: 16-byte header (magic "RADSIEVE", version u32,
    // n_max u32, little-endian) followed by rad[1..N] then tau[1..N] as
    // little-endian u64. A cache is an optimization only; loaded tables
    // are identical to freshly built ones.
    void save(const std::string& path) const;
    static SieveTables load(const std::string& path, Storage storage = Storage::bits64);

private:
    SieveTables() = default;

    u64 n_max_ = 0;
    Storage storage_ = Storage::bits64;
    std::vector<u64> rad64_, tau64_;
    std::vector<u32> rad32_, tau32_;
};

// All n <= n_max with rad(n) = r, found by depth-first search over the
// exponent vectors of the primes of r.
struct RadicalClass {
    u64 r = 1;
    u64 n_max = 0;
    std::vector<u64> members;  // sorted ascending
};

RadicalClass enumerate_radical_class(u64 r, u64 n_max);
u64 radical_class_size(u64 r, u64 n_max);  // same walk, counting only

std::vector<u64> squarefree_list(u64 limit);

// floor(n_max^lambda) for rational lambda in [0,1], decided exactly:
// the largest m with m^q <= n_max^p.
u64 pow_cutoff(u64 n_max, const Rational& lambda);

// Count of n <= n_limit with rad(n) <= floor(n_limit^lambda), by scanning
// the rad table. n_limit defaults to tables.n_max().
u64 count_small_radical(const SieveTables& tables, const Rational& lambda, u64 n_limit = 0);

// Same count as a sum of |R(r, n_max)| over squarefree r up to the cutoff.
u64 count_small_radical_by_classes(u64 n_max, const Rational& lambda);

// Euler phi over [1, n_max], phi[0] unused.
std::vector<u64> totient_table(u64 n_max, u64 budget = SieveTables::kDefaultBudget);

}  // namespace abc
