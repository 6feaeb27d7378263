#pragma once

#include "grunbaum/common.hpp"

#include <cstdint>
#include <cmath>

namespace grunbaum {

/// Seed for all stochastic operations. Per-sample seeds are a pure
/// function of (value, stream, sample index), so estimators can be
/// evaluated in any order (or in parallel) and still reduce to the
/// same totals.
struct Seed {
    std::uint64_t value = 0;
    std::uint64_t stream = 0;

    static constexpr const char* kGeneratorName = "splitmix64+box-muller";
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

/// Derived seed for one sample index; the per-sample derivation rule.
inline std::uint64_t seed_at(const Seed& s, std::uint64_t index) {
    std::uint64_t h = detail::splitmix64(s.value);
    h = detail::splitmix64(h ^ detail::splitmix64(s.stream ^ 0xd2b74407b1ce6e93ULL));
    return detail::splitmix64(h ^ index);
}

inline Seed substream(const Seed& s, std::uint64_t stream) {
    return Seed{seed_at(s, 0x5151515151515151ULL ^ stream), stream};
}

/// Deterministic generator; not a std engine so that streams are
/// bit-reproducible across platforms and compilers.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}
    explicit Rng(const Seed& s, std::uint64_t index = 0) : state_(seed_at(s, index)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller; second value cached.
    double normal() {
        if (has_cache_) {
            has_cache_ = false;
            return cache_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        cache_ = r * std::sin(a);
        has_cache_ = true;
        return r * std::cos(a);
    }

    Vec normal_vector(int dim) {
        Vec v(dim);
        for (int j = 0; j < dim; ++j) v[j] = normal();
        return v;
    }

    /// Uniform direction on S^{dim-1}.
    Vec unit_vector(int dim) {
        while (true) {
            Vec v = normal_vector(dim);
            const double n = v.norm();
            if (n > 1e-12) return v / n;
        }
    }

private:
    std::uint64_t state_;
    double cache_ = 0.0;
    bool has_cache_ = false;
};

}  // namespace grunbaum
