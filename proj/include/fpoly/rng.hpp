#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace fpoly {

// Seeded generator wrapper. mt19937_64's raw output sequence is fixed by the
// standard; the bounded draws below avoid std::uniform_int_distribution,
// whose mapping is implementation-defined, so identical seeds give identical
// streams on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, n), n >= 1, via rejection sampling
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // uniform in [lo, hi], inclusive
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    mpz_class big_in(long long lo, long long hi) { return mpz_class(static_cast<long>(int_in(lo, hi))); }

    // nonzero rational with numerator in [-num_max, num_max], denominator in [1, den_max]
    mpq_class rational(long long num_max, long long den_max) {
        long long num = int_in(-num_max, num_max);
        long long den = int_in(1, den_max);
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return q;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace fpoly
