#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace teqsim {

using cdouble = std::complex<double>;
using CVec = std::vector<cdouble>;

namespace constants {
inline constexpr double c_light = 299792458.0;      // m/s
inline constexpr double h_planck = 6.62607015e-34;  // J*s
inline constexpr double pi = 3.141592653589793238462643383279502884;
}  // namespace constants

/// splitmix64 step; derives independent seed streams from a master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);

/// Deterministic random stream. The engine is std::mt19937_64 (output sequence
/// fixed by the standard); variate transforms are implemented here instead of
/// std::distribution objects so draws are bit-reproducible given a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t tag) : engine_(mix_seed(seed, tag)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), n > 0. Rejection-free modulo is avoided.
  std::uint64_t uniform_below(std::uint64_t n);

  /// Standard normal via Box-Muller (second variate cached).
  double normal();

  /// Circularly symmetric complex normal with E|z|^2 = 1.
  cdouble cnormal();

  /// Deterministic Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace teqsim
