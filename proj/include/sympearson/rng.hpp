#pragma once

#include <cstdint>

namespace sympearson {

/**
 * @brief Counter-based pseudo-random stream (splitmix64).
 *
 * The generator advances a 64-bit counter by a fixed odd increment and
 * returns a strong mix of the counter, so a stream is a pure function of
 * its seed. Streams for parallel work are derived with derive_stream_seed
 * from (master seed, grid cell, replication); any scheduling of the
 * derived streams reproduces the same draws.
 */
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in the open interval (0, 1).
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

/// Statelessly mix (master, cell, replication) into a stream seed.
[[nodiscard]] inline std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                                      std::uint64_t cell_index,
                                                      std::uint64_t replication) {
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    std::uint64_t z = mix(master_seed + 0x9E3779B97F4A7C15ULL);
    z = mix(z ^ (cell_index + 0xBF58476D1CE4E5B9ULL));
    z = mix(z ^ (replication + 0x94D049BB133111EBULL));
    return z;
}

[[nodiscard]] inline RngStream substream(std::uint64_t master_seed, std::uint64_t cell_index,
                                         std::uint64_t replication) {
    return RngStream(derive_stream_seed(master_seed, cell_index, replication));
}

}  // namespace sympearson
