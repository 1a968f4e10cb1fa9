#ifndef JLP_RNG_HPP
#define JLP_RNG_HPP

#include <complex>
#include <cstdint>

namespace jlp {

// Counter-based Gaussian stream: the state is derived from (seed, index)
// only, so the same pair yields the same coefficients regardless of how
// work is split across threads.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  // Uniform in (0, 1].
  double next_uniform();
  // Standard normal via Box-Muller.
  double next_gaussian();
  // Real and imaginary parts independent standard normals.
  std::complex<double> next_complex_gaussian();

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace jlp

#endif  // JLP_RNG_HPP
