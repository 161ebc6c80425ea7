#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace colleague {

// Deterministic random stream for experiments and tests.  mt19937_64 output
// is bit-exact across platforms by standard; the mappings below are spelled
// out (rather than using <random> distributions, whose output is
// implementation-defined) so identical seeds give byte-identical experiment
// files everywhere.
//
// Stream semantics: uniform() consumes one engine draw and maps the top 53
// bits to (0, 1]; normal() consumes exactly two draws and returns the
// Box-Muller cosine variate sqrt(-2 ln u1) cos(2 pi u2).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>((engine_() >> 11) + 1) * 0x1p-53; }

    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace colleague
