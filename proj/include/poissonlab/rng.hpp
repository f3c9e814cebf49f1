#pragma once

#include <cstdint>

namespace poissonlab {

// Counter-based pseudorandom stream. Each draw is a pure function of
// (key, counter), so any (seed, sample, cell) triple owns an independent
// stream and samples can be generated in any order or in parallel.
namespace rng {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

class Stream {
  public:
    Stream(std::uint64_t seed, std::uint64_t sample_index, std::uint64_t cell_index,
           std::uint64_t substream = 0)
        : key_(combine(combine(combine(seed, sample_index), cell_index), substream)) {}

    explicit Stream(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * (++counter_)); }

    // Uniform in [0,1).
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in the half-open interval (a, b].
    double next_uniform_oc(double a, double b) {
        return a + (b - a) * (1.0 - next_uniform());
    }

    // Standard normal via Box-Muller (one value per call, spare discarded).
    double next_normal();

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Exact Poisson(lambda) sampling by CDF inversion. For large lambda the
// draw is split into independent chunks so the running pmf never
// underflows. Deterministic given the stream state.
std::int64_t sample_poisson(double lambda, Stream& stream);

}  // namespace rng
}  // namespace poissonlab
