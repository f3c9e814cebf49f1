#include "poissonlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace poissonlab {
namespace rng {

double Stream::next_normal() {
    // Box-Muller; u1 bounded away from 0.
    double u1 = next_uniform();
    double u2 = next_uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

namespace {

std::int64_t sample_poisson_small(double lambda, Stream& stream) {
    // lambda <= 32 here, so p0 = e^-lambda stays comfortably above 1e-14.
    const double u = stream.next_uniform();
    double p = std::exp(-lambda);
    double cdf = p;
    std::int64_t k = 0;
    // u < 1 strictly, so the loop terminates; the hard cap guards against
    // floating-point stalls in the extreme tail.
    const std::int64_t cap = static_cast<std::int64_t>(lambda + 60.0 * std::sqrt(lambda + 1.0) + 200.0);
    while (u > cdf && k < cap) {
        ++k;
        p *= lambda / static_cast<double>(k);
        cdf += p;
    }
    return k;
}

}  // namespace

std::int64_t sample_poisson(double lambda, Stream& stream) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("sample_poisson: lambda must be finite and non-negative");
    if (lambda == 0.0) return 0;
    if (lambda <= 32.0) return sample_poisson_small(lambda, stream);
    // Poisson additivity: split into chunks of intensity <= 32.
    const auto chunks = static_cast<std::int64_t>(std::ceil(lambda / 32.0));
    const double part = lambda / static_cast<double>(chunks);
    std::int64_t total = 0;
    for (std::int64_t c = 0; c < chunks; ++c) total += sample_poisson_small(part, stream);
    return total;
}

}  // namespace rng
}  // namespace poissonlab
