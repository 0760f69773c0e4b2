#ifndef OCEAN_RNG_HPP
#define OCEAN_RNG_HPP

#include <cmath>
#include <cstdint>

#include "ocean/core.hpp"

namespace ocean {

// Philox4x32-10 counter-based generator. Amplitude synthesis keys it by
// (seed, cascade, row, column) so every draw is independent of evaluation
// order and the same inputs always produce the same bits.
class Philox {
 public:
  Philox(uint64_t key_lo, uint64_t key_hi) : k0_(static_cast<uint32_t>(key_lo)),
                                             k1_(static_cast<uint32_t>(key_lo >> 32)),
                                             k2_(static_cast<uint32_t>(key_hi)),
                                             k3_(static_cast<uint32_t>(key_hi >> 32)) {}

  struct Block {
    uint32_t v[4];
  };

  Block operator()(uint64_t ctr_lo, uint64_t ctr_hi) const {
    uint32_t c0 = static_cast<uint32_t>(ctr_lo);
    uint32_t c1 = static_cast<uint32_t>(ctr_lo >> 32);
    uint32_t c2 = static_cast<uint32_t>(ctr_hi);
    uint32_t c3 = static_cast<uint32_t>(ctr_hi >> 32);
    uint32_t k0 = k0_ ^ k2_, k1 = k1_ ^ k3_;
    for (int round = 0; round < 10; ++round) {
      uint64_t p0 = static_cast<uint64_t>(kMul0) * c0;
      uint64_t p1 = static_cast<uint64_t>(kMul1) * c2;
      uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
      uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
      uint32_t n0 = hi1 ^ c1 ^ k0;
      uint32_t n1 = lo1;
      uint32_t n2 = hi0 ^ c3 ^ k1;
      uint32_t n3 = lo0;
      c0 = n0;
      c1 = n1;
      c2 = n2;
      c3 = n3;
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    return {{c0, c1, c2, c3}};
  }

 private:
  static constexpr uint32_t kMul0 = 0xD2511F53u;
  static constexpr uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr uint32_t kWeyl1 = 0xBB67AE85u;

  uint32_t k0_, k1_, k2_, k3_;
};

// uniform in (0, 1]: never returns 0 so it is safe under log().
inline double uniform_open(uint32_t bits) {
  return (static_cast<double>(bits) + 1.0) * (1.0 / 4294967296.0);
}

// One independent standard complex Gaussian per (seed, stream, i, j):
// real and imaginary parts are N(0,1) each, scaled by 1/sqrt(2) so that
// E[|xi|^2] = 1.
inline cplx gaussian_complex(uint64_t seed, uint32_t stream, uint32_t i, uint32_t j) {
  Philox gen(seed, 0x6F63656E00000000ull | stream);
  auto b = gen((static_cast<uint64_t>(i) << 32) | j, 0);
  double u1 = uniform_open(b.v[0]);
  double u2 = uniform_open(b.v[1]);
  double r = std::sqrt(-2.0 * std::log(u1));
  double g1 = r * std::cos(2.0 * kPi * u2);
  double g2 = r * std::sin(2.0 * kPi * u2);
  return {g1 / std::sqrt(2.0), g2 / std::sqrt(2.0)};
}

// Scalar uniforms for test/benchmark sampling, same engine.
class UniformStream {
 public:
  explicit UniformStream(uint64_t seed, uint64_t stream = 0) : gen_(seed, stream) {}

  double next() {
    if (pos_ == 4) {
      block_ = gen_(ctr_++, 0);
      pos_ = 0;
    }
    return uniform_open(block_.v[pos_++]);
  }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  Philox gen_;
  Philox::Block block_{};
  uint64_t ctr_ = 0;
  int pos_ = 4;
};

}  // namespace ocean

#endif
