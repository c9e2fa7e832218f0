#pragma once

#include <cmath>
#include <cstdint>

namespace expratio {

namespace detail {

// splitmix64 finalizer (Vigna / Steele-Lea-Flood). Fixed constants, fixed
// identity: results are reproducible across platforms and compilers.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace detail

// splitmix64 stream: state advances by the golden-ratio increment, output
// is the splitmix64 finalizer. Every (seed, purpose, index) triple yields
// an independent stream via derive_stream, so Monte Carlo replicates can
// be computed in any order or thread count with identical results.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return detail::splitmix64_mix(state_);
    }

    // Uniform on the open interval (0, 1): 53-bit lattice offset by half a
    // step, so 0 and 1 are never returned.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard exponential by inverse cdf, -ln(1 - U); strictly positive.
    double next_exponential() { return -std::log1p(-next_uniform()); }

  private:
    std::uint64_t state_;
};

// Fixed purpose tags keep the replicate streams used for null simulation,
// alternative simulation and data generation disjoint.
namespace stream_purpose {
inline constexpr std::uint64_t null_w = 1;
inline constexpr std::uint64_t null_d = 2;
inline constexpr std::uint64_t alternative = 3;
inline constexpr std::uint64_t data_gen = 4;
}  // namespace stream_purpose

// Stream for replicate `index` of a given purpose under a master seed:
// three rounds of the splitmix64 finalizer fold the triple into the
// initial state.
inline RngStream derive_stream(std::uint64_t master_seed, std::uint64_t purpose,
                               std::uint64_t index) {
    using detail::splitmix64_mix;
    return RngStream(splitmix64_mix(splitmix64_mix(splitmix64_mix(master_seed) ^ purpose) ^ index));
}

}  // namespace expratio
