#ifndef GCV_RNG_HPP
#define GCV_RNG_HPP

#include <cstdint>

namespace gcv {

// splitmix64; self-contained so that seeded runs are bit-identical on every
// platform (the standard library distributions are not portable).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound >= 1, by rejection
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rng fork() { return Rng(next() ^ 0xd1b54a32d192ed03ULL); }

  private:
    std::uint64_t state_;
};

} // namespace gcv

#endif
