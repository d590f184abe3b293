#include "abc/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <fstream>
#include <thread>

namespace abc {

namespace {

template <typename T>
void build_serial(u64 n, std::vector<T>& rad, std::vector<T>& tau) {
    rad.assign(n + 1, 1);
    rad[0] = 0;
    for (u64 p = 2; p <= n; ++p) {
        if (rad[p] != 1) continue;  // p has a prime divisor already recorded
        for (u64 m = p; m <= n; m += p) rad[m] = static_cast<T>(rad[m] * p);
    }

    std::vector<u32> spf(n + 1, 0);
    for (u64 i = 2; i <= n; ++i) {
        if (spf[i]) continue;
        for (u64 m = i; m <= n; m += i)
            if (!spf[m]) spf[m] = static_cast<u32>(i);
    }

    tau.assign(n + 1, 1);
    tau[0] = 0;
    for (u64 v = 2; v <= n; ++v) {
        const u64 p = spf[v];
        u64 m = v / p;
        u64 e = 1;
        while (m > 1 && spf[m] == p) {
            m /= p;
            ++e;
        }
        tau[v] = static_cast<T>(tau[m] * (e + 1));
    }
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<u64> primes;
    for (u64 p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (u64 m = p * p; m <= limit; m += p) composite[m] = true;
    }
    return primes;
}

// Segmented build: each chunk factors its values against primes up to
// sqrt(hi); whatever remains is a single prime factor.
template <typename T>
void build_segmented(u64 n, unsigned threads, std::vector<T>& rad, std::vector<T>& tau) {
    rad.assign(n + 1, 0);
    tau.assign(n + 1, 0);
    rad[1] = 1;
    tau[1] = 1;

    u64 root = 1;
    while ((root + 1) * (root + 1) <= n) ++root;
    const std::vector<u64> primes = primes_up_to(root);

    constexpr u64 kChunk = 1 << 16;
    const u64 chunk_count = (n - 1 + kChunk - 1) / kChunk;  // values 2..n
    std::atomic<u64> next{0};

    auto worker = [&] {
        std::vector<u64> rem(kChunk);
        std::vector<u64> rad_buf(kChunk), tau_buf(kChunk);
        for (;;) {
            const u64 chunk = next.fetch_add(1);
            if (chunk >= chunk_count) return;
            const u64 lo = 2 + chunk * kChunk;
            const u64 hi = std::min(n, lo + kChunk - 1);
            const u64 len = hi - lo + 1;
            for (u64 i = 0; i < len; ++i) {
                rem[i] = lo + i;
                rad_buf[i] = 1;
                tau_buf[i] = 1;
            }
            for (u64 p : primes) {
                if (p * p > hi) break;
                u64 first = ((lo + p - 1) / p) * p;
                for (u64 m = first; m <= hi; m += p) {
                    u64 i = m - lo;
                    u64 e = 0;
                    while (rem[i] % p == 0) {
                        rem[i] /= p;
                        ++e;
                    }
                    if (e) {
                        rad_buf[i] *= p;
                        tau_buf[i] *= e + 1;
                    }
                }
            }
            for (u64 i = 0; i < len; ++i) {
                if (rem[i] > 1) {
                    rad_buf[i] *= rem[i];
                    tau_buf[i] *= 2;
                }
                rad[lo + i] = static_cast<T>(rad_buf[i]);
                tau[lo + i] = static_cast<T>(tau_buf[i]);
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

void pack_u32(std::string& out, u32 v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void pack_u64(char* out, u64 v) {
    for (int i = 0; i < 8; ++i) out[i] = static_cast<char>((v >> (8 * i)) & 0xff);
}

u32 unpack_u32(const unsigned char* p) {
    u32 v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<u32>(p[i]) << (8 * i);
    return v;
}

u64 unpack_u64(const unsigned char* p) {
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<u64>(p[i]) << (8 * i);
    return v;
}

constexpr char kMagic[8] = {'R', 'A', 'D', 'S', 'I', 'E', 'V', 'E'};
constexpr u32 kVersion = 1;

template <typename Table>
void write_table(std::ofstream& out, const Table& table, u64 n) {
    constexpr u64 kBuf = 8192;
    std::vector<char> buf(kBuf * 8);
    u64 i = 1;
    while (i <= n) {
        u64 count = std::min(kBuf, n - i + 1);
        for (u64 k = 0; k < count; ++k) pack_u64(buf.data() + 8 * k, table[i + k]);
        out.write(buf.data(), static_cast<std::streamsize>(count * 8));
        ++i += count - 1;
    }
}

template <typename T>
void read_table(std::ifstream& in, std::vector<T>& table, u64 n) {
    table.assign(n + 1, 0);
    constexpr u64 kBuf = 8192;
    std::vector<unsigned char> buf(kBuf * 8);
    u64 i = 1;
    while (i <= n) {
        u64 count = std::min(kBuf, n - i + 1);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(count * 8));
        if (!in) throw resource_error("sieve cache truncated");
        for (u64 k = 0; k < count; ++k) {
            u64 v = unpack_u64(buf.data() + 8 * k);
            table[i + k] = static_cast<T>(v);
        }
        i += count;
    }
}

}  // namespace

SieveTables SieveTables::build(u64 n_max, Storage storage, unsigned threads, u64 budget) {
    if (n_max < 2) throw std::domain_error("sieve n_max must be at least 2");
    if (n_max > budget)
        throw resource_error("sieve n_max " + std::to_string(n_max) +
                             " exceeds memory budget " + std::to_string(budget));
    if (threads < 1) threads = 1;
    SieveTables t;
    t.n_max_ = n_max;
    t.storage_ = storage;
    if (storage == Storage::bits32 && n_max >= (u64(1) << 32))
        throw std::domain_error("32-bit sieve storage requires n_max < 2^32");
    if (storage == Storage::bits64) {
        if (threads == 1)
            build_serial(n_max, t.rad64_, t.tau64_);
        else
            build_segmented(n_max, threads, t.rad64_, t.tau64_);
    } else {
        if (threads == 1)
            build_serial(n_max, t.rad32_, t.tau32_);
        else
            build_segmented(n_max, threads, t.rad32_, t.tau32_);
    }
    return t;
}

void SieveTables::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw resource_error("cannot write sieve cache: " + path);
    std::string header(kMagic, sizeof kMagic);
    pack_u32(header, kVersion);
    pack_u32(header, static_cast<u32>(n_max_));
    out.write(header.data(), static_cast<std::streamsize>(header.size()));
    if (storage_ == Storage::bits64) {
        write_table(out, rad64_, n_max_);
        write_table(out, tau64_, n_max_);
    } else {
        write_table(out, rad32_, n_max_);
        write_table(out, tau32_, n_max_);
    }
    if (!out) throw resource_error("failed writing sieve cache: " + path);
}

SieveTables SieveTables::load(const std::string& path, Storage storage) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw resource_error("cannot open sieve cache: " + path);
    unsigned char header[16];
    in.read(reinterpret_cast<char*>(header), 16);
    if (!in || std::memcmp(header, kMagic, sizeof kMagic) != 0)
        throw resource_error("not a sieve cache: " + path);
    const u32 version = unpack_u32(header + 8);
    if (version != kVersion)
        throw resource_error("unsupported sieve cache version " + std::to_string(version));
    const u64 n_max = unpack_u32(header + 12);
    if (n_max < 2) throw resource_error("sieve cache has invalid n_max");
    SieveTables t;
    t.n_max_ = n_max;
    t.storage_ = storage;
    if (storage == Storage::bits64) {
        read_table(in, t.rad64_, n_max);
        read_table(in, t.tau64_, n_max);
    } else {
        read_table(in, t.rad32_, n_max);
        read_table(in, t.tau32_, n_max);
    }
    return t;
}

namespace {

struct ClassWalk {
    std::vector<u64> primes;
    u64 n_max = 0;
    std::vector<u64>* members = nullptr;  // null when counting
    u64 count = 0;

    void dfs(std::size_t idx, u64 value) {
        if (idx == primes.size()) {
            ++count;
            if (members) members->push_back(value);
            return;
        }
        const u64 p = primes[idx];
        if (value > n_max / p) return;
        u64 v = value * p;
        for (;;) {
            dfs(idx + 1, v);
            if (v > n_max / p) break;
            v *= p;
        }
    }
};

ClassWalk make_walk(u64 r, u64 n_max) {
    if (r == 0) throw std::domain_error("radical class r must be positive");
    if (n_max == 0) throw std::domain_error("radical class n_max must be positive");
    ClassWalk walk;
    walk.n_max = n_max;
    const Factorization f = factorize(r);
    for (auto [p, e] : f.factors) {
        if (e > 1)
            throw std::domain_error("radical class requires squarefree r, got " + std::to_string(r));
        walk.primes.push_back(p);
    }
    return walk;
}

}  // namespace

RadicalClass enumerate_radical_class(u64 r, u64 n_max) {
    ClassWalk walk = make_walk(r, n_max);
    RadicalClass cls;
    cls.r = r;
    cls.n_max = n_max;
    if (r <= n_max) {
        walk.members = &cls.members;
        walk.dfs(0, 1);
        std::sort(cls.members.begin(), cls.members.end());
    }
    return cls;
}

u64 radical_class_size(u64 r, u64 n_max) {
    ClassWalk walk = make_walk(r, n_max);
    if (r > n_max) return 0;
    walk.dfs(0, 1);
    return walk.count;
}

std::vector<u64> squarefree_list(u64 limit) {
    if (limit == 0) throw std::domain_error("squarefree_list limit must be positive");
    std::vector<bool> squarefree(limit + 1, true);
    for (u64 d = 2; d * d <= limit; ++d) {
        const u64 dd = d * d;
        for (u64 m = dd; m <= limit; m += dd) squarefree[m] = false;
    }
    std::vector<u64> out;
    for (u64 n = 1; n <= limit; ++n)
        if (squarefree[n]) out.push_back(n);
    return out;
}

u64 pow_cutoff(u64 n_max, const Rational& lambda) {
    if (n_max == 0) throw std::domain_error("pow_cutoff n_max must be positive");
    if (lambda.num < 0 || lambda.num > lambda.den)
        throw std::domain_error("lambda must lie in [0,1], got " + lambda.str());
    if (lambda.num == 0) return 1;
    if (lambda.num == lambda.den) return n_max;
    const u64 p = static_cast<u64>(lambda.num);
    const u64 q = static_cast<u64>(lambda.den);
    const BigUint target = BigUint::pow(BigUint(n_max), p);
    u64 lo = 1, hi = n_max;
    while (lo < hi) {  // largest m with m^q <= n_max^p
        const u64 mid = lo + (hi - lo + 1) / 2;
        if (BigUint::pow(BigUint(mid), q) <= target)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

u64 count_small_radical(const SieveTables& tables, const Rational& lambda, u64 n_limit) {
    if (n_limit == 0) n_limit = tables.n_max();
    if (n_limit > tables.n_max())
        throw std::domain_error("count_small_radical n_limit exceeds table size");
    const u64 cutoff = pow_cutoff(n_limit, lambda);
    u64 count = 0;
    for (u64 n = 1; n <= n_limit; ++n)
        if (tables.rad(n) <= cutoff) ++count;
    return count;
}

u64 count_small_radical_by_classes(u64 n_max, const Rational& lambda) {
    if (n_max == 0) throw std::domain_error("count_small_radical n_max must be positive");
    const u64 cutoff = pow_cutoff(n_max, lambda);
    u64 count = 0;
    for (u64 r : squarefree_list(cutoff)) count += radical_class_size(r, n_max);
    return count;
}

std::vector<u64> totient_table(u64 n_max, u64 budget) {
    if (n_max < 1) throw std::domain_error("totient_table n_max must be positive");
    if (n_max > budget)
        throw resource_error("totient_table n_max exceeds memory budget");
    std::vector<u64> phi(n_max + 1);
    for (u64 i = 0; i <= n_max; ++i) phi[i] = i;
    for (u64 p = 2; p <= n_max; ++p) {
        if (phi[p] != p) continue;  // composite, already reduced
        for (u64 m = p; m <= n_max; m += p) phi[m] -= phi[m] / p;
    }
    return phi;
}

}  // namespace abc
