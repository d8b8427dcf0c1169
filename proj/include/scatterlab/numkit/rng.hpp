#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "scatterlab/numkit/types.hpp"

namespace scatterlab::numkit {

// Deterministic random stream. Builds uniform/normal draws directly from the
// standardized mt19937_64 bit stream instead of std::*_distribution (whose
// output sequence is implementation-defined), so identical seeds give
// identical results on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Complex standard normal (independent N(0,1) real and imaginary parts).
  cdouble cnormal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace scatterlab::numkit
