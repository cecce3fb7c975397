#pragma once

// Shared small types and numeric helpers used across the simulator.
// LLR sign convention everywhere: L = ln(P[bit=0] / P[bit=1]).

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace noma {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;
using bitvec = std::vector<std::uint8_t>;  // entries are 0 or 1

// Bad user-supplied configuration (pool sizes, unsupported triples, ...).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Violated call contract between modules (length mismatch, bad tag, ...).
class ContractError : public std::logic_error {
  public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

inline constexpr double kDefaultLlrClamp = 30.0;

// Per-bit log-likelihood ratios, L = ln(P0/P1), clamped to +-clamp_bound.
struct LlrVector {
    std::vector<double> values;
    double clamp_bound = kDefaultLlrClamp;

    LlrVector() = default;
    explicit LlrVector(std::size_t n, double clamp = kDefaultLlrClamp)
        : values(n, 0.0), clamp_bound(clamp) {}
    LlrVector(std::vector<double> v, double clamp = kDefaultLlrClamp)
        : values(std::move(v)), clamp_bound(clamp) {
        clamp_all();
    }

    std::size_t size() const { return values.size(); }
    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }

    void clamp_all() {
        for (double& v : values) {
            if (std::isnan(v)) v = 0.0;
            if (v > clamp_bound) v = clamp_bound;
            if (v < -clamp_bound) v = -clamp_bound;
        }
    }
};

inline double clamp_llr(double v, double bound = kDefaultLlrClamp) {
    if (std::isnan(v)) return 0.0;
    if (v > bound) return bound;
    if (v < -bound) return -bound;
    return v;
}

// max*(a,b) = ln(e^a + e^b). Exact by default; max_log drops the correction.
inline double maxstar(double a, double b, bool max_log = false) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    double m = a > b ? a : b;
    if (max_log) return m;
    return m + std::log1p(std::exp(-std::abs(a - b)));
}

inline double sq_norm(cplx z) { return std::norm(z); }

inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
inline double db_to_amp(double db) { return std::pow(10.0, db / 20.0); }

// ---------------------------------------------------------------------------
// Deterministic seeding and random streams.
//
// derive_stream_seed is the single seed-derivation rule of the toolkit: a
// splitmix64-style mix of the master seed, a domain tag hash (FNV-1a), and a
// list of indices. Constants are frozen; outputs must never change across
// versions so that archived experiment configs replay bit-exactly.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Registered stream domains. Unknown tags are a contract error.
bool is_registered_stream_tag(std::string_view tag);

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::string_view domain_tag,
                                 std::span<const std::uint64_t> indices);

inline std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::string_view domain_tag,
                                        std::initializer_list<std::uint64_t> indices) {
    return derive_stream_seed(master_seed, domain_tag,
                              std::span<const std::uint64_t>(indices.begin(), indices.size()));
}

// Small deterministic PRNG (splitmix64 sequence). Self-contained so results
// do not depend on the standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform double in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound)
    std::uint64_t uniform_int(std::uint64_t bound) {
        // Lemire's multiply-shift with rejection; deterministic.
        if (bound == 0) throw ContractError("uniform_int: bound must be positive");
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        std::uint64_t lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t t = (-bound) % bound;
            while (lo < t) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    uint8_t bit() { return static_cast<uint8_t>(next_u64() >> 63); }

    // standard normal, Box-Muller (polar form avoided to keep draw count fixed)
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        // keep u1 away from 0
        u1 = u1 < 1e-300 ? 1e-300 : u1;
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // circular complex Gaussian with total variance var (var/2 per dimension)
    cplx cnormal(double var) {
        double s = std::sqrt(var / 2.0);
        double re = normal();
        double im = normal();
        return {s * re, s * im};
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace noma
