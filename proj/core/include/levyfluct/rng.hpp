#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace levyfluct {

// Counter-based generator (Philox 4x32, 10 rounds). A stream is keyed by
// (seed, stream index), so path i always sees the same numbers no matter
// which worker thread runs it or in what order paths are scheduled.
struct Philox4x32 {
    static constexpr std::uint32_t kMult0 = 0xD2511F53u;
    static constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t(kMult0) * ctr[0];
            const std::uint64_t p1 = std::uint64_t(kMult1) * ctr[2];
            ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0],
                   std::uint32_t(p1),
                   std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1],
                   std::uint32_t(p0)};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }
};

/// One independent random stream. Cheap to construct; holds no heap state.
class PathRng {
  public:
    PathRng(std::uint64_t seed, std::uint64_t stream)
        : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)},
          stream_lo_(std::uint32_t(stream)), stream_hi_(std::uint32_t(stream >> 32)) {}

    std::uint64_t next_u64() {
        if (have_half_) {
            have_half_ = false;
            return spare_u64_;
        }
        const auto words = Philox4x32::block(
            {stream_lo_, stream_hi_, std::uint32_t(block_), std::uint32_t(block_ >> 32)}, key_);
        ++block_;
        spare_u64_ = (std::uint64_t(words[2]) << 32) | words[3];
        have_half_ = true;
        return (std::uint64_t(words[0]) << 32) | words[1];
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe under log().
    double uniform_pos() { return 1.0 - uniform(); }

    /// Standard normal via the polar method; one spare kept between calls.
    double normal() {
        if (have_normal_) {
            have_normal_ = false;
            return spare_normal_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_normal_ = v * f;
        have_normal_ = true;
        return u * f;
    }

    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    /// Poisson by inversion; intended for small means (thinned jump counts).
    unsigned poisson(double mean) {
        const double limit = std::exp(-mean);
        double prod = uniform_pos();
        unsigned n = 0;
        while (prod > limit) {
            prod *= uniform_pos();
            ++n;
        }
        return n;
    }

  private:
    std::array<std::uint32_t, 2> key_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint64_t block_ = 0;
    std::uint64_t spare_u64_ = 0;
    double spare_normal_ = 0.0;
    bool have_half_ = false;
    bool have_normal_ = false;
};

} // namespace levyfluct
