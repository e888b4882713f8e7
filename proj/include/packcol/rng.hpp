#pragma once

#include <cstdint>
#include <random>

namespace packcol {

/// Seedable generator with a platform-independent output stream.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// Bounded draws do not go through std::uniform_int_distribution (its
/// algorithm is implementation-defined); they use rejection sampling on the
/// raw 64-bit output instead, so a seed reproduces the same run everywhere.
///
/// Stream splitting: split(tag) seeds a child engine with
/// splitmix64(seed + tag * 0x9E3779B97F4A7C15). The parent is not advanced,
/// so children with different tags are independent of draw order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi]; requires lo <= hi.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0)
            return static_cast<std::int64_t>(next());
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x > limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    int index(int size) { return static_cast<int>(uniform(0, size - 1)); }

    Rng split(std::uint64_t tag) const { return Rng(splitmix64(seed_ + tag * 0x9E3779B97F4A7C15ULL)); }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace packcol
