// Deterministic counter-based random draws.  Every check derives its stream
// from (seed, check-name hash), so adding or reordering checks never perturbs
// the samples of another check and reports stay byte-identical across runs.
#pragma once

#include <cstdint>
#include <string>

#include "eqg/lattice.hpp"
#include "eqg/params.hpp"

namespace eqg {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

class Rng {
  public:
    Rng(std::uint64_t seed, const std::string& stream_name)
        : base_(splitmix64(seed ^ splitmix64(fnv1a(stream_name)))), ctr_(0) {}

    std::uint64_t next_u64() { return splitmix64(base_ + 0x9E3779B97F4A7C15ULL * (++ctr_)); }

    // Uniform in [0,1) with 53-bit resolution.
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
    }

    // Generic complex spectral point in a box away from lattice degenerations.
    cplx complex_point(double scale = 0.4) {
        double re = uniform(-scale, scale);
        double im = uniform(-scale, scale);
        return {re, im};
    }

    // Random height vector with entries in [-3,3], rejecting the non-generic
    // ones (rejection advances the counter, keeping the stream deterministic).
    Weight weight(const ModularParams& p) {
        for (int attempt = 0; attempt < 256; ++attempt) {
            Weight m(p.n);
            for (int i = 0; i < p.n; ++i) m[i] = uniform_int(-3, 3);
            if (is_generic(m, p)) return m;
        }
        throw std::runtime_error("Rng::weight: no generic weight found (parameters degenerate?)");
    }

  private:
    std::uint64_t base_;
    std::uint64_t ctr_;
};

}  // namespace eqg
