#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace linkpred {

// Seeded random source used everywhere determinism matters.
//
// The engine is std::mt19937_64, whose output sequence is fully pinned by
// the standard. The standard *distributions* are not (their algorithms are
// implementation-defined), so bounded ints and unit reals are derived here
// by hand to keep results identical across standard libraries.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Unbiased draw from [0, n) by rejecting the top remainder range.
    std::uint64_t below(std::uint64_t n) {
        assert(n > 0);
        const std::uint64_t rem = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
        const std::uint64_t bound = UINT64_MAX - rem;
        std::uint64_t r = eng_();
        while (r > bound) r = eng_();
        return r % n;
    }

    // Uniform double in [0, 1) with 53 random mantissa bits.
    double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Fisher-Yates, driven by below() so the permutation is portable.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // SplitMix64 finalizer; good avalanche for seed derivation.
    static constexpr std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Derives an independent stream seed from a base seed and up to three
    // stream identifiers (module constant, node id, epoch, ...).
    static constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t a,
                                          std::uint64_t b = 0,
                                          std::uint64_t c = 0) {
        std::uint64_t h = mix(seed);
        h = mix(h ^ mix(a));
        h = mix(h ^ mix(b));
        h = mix(h ^ mix(c));
        return h;
    }

  private:
    std::mt19937_64 eng_;
};

// Stream ids for SeededRng::derive. Keeping them in one table avoids
// accidental collisions between modules that share a user seed.
namespace rng_stream {
inline constexpr std::uint64_t kEdgeShuffle = 1;
inline constexpr std::uint64_t kNodeShuffle = 2;
inline constexpr std::uint64_t kNegSample = 3;
inline constexpr std::uint64_t kWalk = 4;
inline constexpr std::uint64_t kSgnsInit = 5;
inline constexpr std::uint64_t kSgnsTrain = 6;
inline constexpr std::uint64_t kSgnsEval = 7;
inline constexpr std::uint64_t kShuffleRows = 8;
inline constexpr std::uint64_t kRandomAttrs = 9;
inline constexpr std::uint64_t kKmeansInit = 10;
inline constexpr std::uint64_t kMlpInit = 11;
inline constexpr std::uint64_t kMlpNeg = 12;
inline constexpr std::uint64_t kMlpOrder = 13;
inline constexpr std::uint64_t kBetweennessSample = 14;
inline constexpr std::uint64_t kRandomScore = 15;
inline constexpr std::uint64_t kDuplexNeg = 16;
}  // namespace rng_stream

}  // namespace linkpred
