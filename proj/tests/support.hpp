#ifndef NSMP_TESTS_SUPPORT_HPP
#define NSMP_TESTS_SUPPORT_HPP

#include "nsmp/matrix.hpp"
#include "nsmp/rng.hpp"
#include "nsmp/sign_pattern.hpp"

#include <thread>
#include <vector>

namespace nsmp::testing {

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    workers = std::min(workers, count ? count : 1);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

/// Small deterministic helpers on top of the library generator.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_.next(); }

    /// Integer in [lo, hi].
    long long integer(long long lo, long long hi) {
        return lo + static_cast<long long>(gen_.uniform(static_cast<std::uint64_t>(hi - lo + 1))) -
               1;
    }

    bool chance(unsigned percent) { return gen_.uniform(100) <= percent; }

    Rational rational_nonzero(long long bound) {
        long long v = 0;
        while (v == 0) v = integer(-bound, bound);
        return Rational(v, integer(1, bound));
    }

private:
    SplitMix64 gen_;
};

inline RationalMatrix random_matrix(std::size_t n, TestRng& rng, long long bound = 3,
                                    unsigned zero_percent = 35) {
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!rng.chance(zero_percent)) a.at(i, j) = Rational(rng.integer(-bound, bound));
    return a;
}

inline SignPattern random_pattern(std::size_t n, TestRng& rng, unsigned zero_percent = 40) {
    SignPattern p(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!rng.chance(zero_percent)) p.at(i, j) = rng.chance(50) ? Sign::Plus : Sign::Minus;
    return p;
}

}  // namespace nsmp::testing

#endif
