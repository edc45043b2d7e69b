#pragma once

#include <array>
#include <cstdint>

namespace seqforage {

/// Philox4x32-10 block function (Salmon et al., Random123). Stateless: the
/// output is a pure function of (counter, key), so streams can be addressed
/// directly by realization and draw index in any execution order.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter apply(Counter ctr, Key key) noexcept {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// What a uniform draw is used for; part of the counter so that two policies
/// run on the same seed see the same draw for the same purpose at the same
/// elapsed time (common random numbers).
enum class Channel : std::uint32_t {
    InitialState = 0,
    Observation = 1,
    Feedback = 2,
    Transition = 3,
    Driver = 4,
};

/// Uniform draws keyed by a 64-bit seed.
class CounterRng {
public:
    explicit constexpr CounterRng(std::uint64_t seed) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform(std::uint32_t step, Channel channel, std::uint32_t index = 0) const noexcept {
        const auto out = Philox4x32::apply({step, static_cast<std::uint32_t>(channel), index, 0u}, key_);
        const std::uint64_t bits = (static_cast<std::uint64_t>(out[0]) << 21) ^ (out[1] >> 11);
        return static_cast<double>(bits & ((std::uint64_t{1} << 53) - 1)) * 0x1.0p-53;
    }

    bool bernoulli(double prob, std::uint32_t step, Channel channel, std::uint32_t index = 0) const noexcept {
        return uniform(step, channel, index) < prob;
    }

private:
    Philox4x32::Key key_;
};

/// Seed of realization `index` in an ensemble keyed by `master_seed`.
inline std::uint64_t realization_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
    const auto out = Philox4x32::apply(
        {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x5EED5EEDu, 0u},
        {static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32)});
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace seqforage
