#pragma once

// Deterministic, counter-based random streams.
//
// Every draw is keyed by (seed, stream, index) so results do not depend on the
// order in which samples are evaluated. std::uniform_int_distribution is
// implementation-defined, so integers are drawn by rejection instead to keep
// outputs identical across standard libraries.

#include <cstdint>
#include <random>

namespace fatpoints {

class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t next() { return engine_(); }

    // uniform on [lo, hi]
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0)
            return static_cast<long>(next());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r;
        do
            r = next();
        while (r >= limit);
        return lo + static_cast<long>(r % span);
    }

  private:
    std::mt19937_64 engine_;
};

// Stream identifiers keep unrelated consumers of one seed apart.
namespace streams {
inline constexpr std::uint64_t general_point = 1;
inline constexpr std::uint64_t random_config = 2;
inline constexpr std::uint64_t transform = 3;
inline constexpr std::uint64_t suite = 4;
} // namespace streams

} // namespace fatpoints
