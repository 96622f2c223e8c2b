#pragma once

#include <array>
#include <cstdint>

namespace arbreak {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Maps a 128-bit counter under a 64-bit key to 128
/// pseudo-random bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// Counter-based random stream.
///
/// The Philox key is a hash of the master seed; the stream index occupies the
/// upper 64 bits of the counter and the block number the lower 64 bits, so two
/// streams with different indices never evaluate the block function on the
/// same input. Output depends only on (master_seed, stream_index) and the
/// number of values drawn so far.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

    [[nodiscard]] std::uint64_t master_seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t stream_index() const noexcept { return index_; }

    std::uint64_t next_u64() noexcept;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;
    /// Uniform on (0, 1); never returns 0, safe under log().
    double uniform_open() noexcept;
    /// Standard normal by Box-Muller; the second variate of each pair is
    /// cached and returned by the next call.
    double normal() noexcept;

private:
    void refill() noexcept;

    std::uint64_t seed_;
    std::uint64_t index_;
    std::array<std::uint32_t, 2> key_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int buffered_ = 0;  // 32-bit words left in buffer_
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// Stream for replication `replication_index` of an experiment seeded with
/// `master_seed`. Pure function of its inputs.
[[nodiscard]] inline RngStream derive_substream(std::uint64_t master_seed,
                                                std::uint64_t replication_index) noexcept {
    return RngStream(master_seed, replication_index);
}

}  // namespace arbreak
