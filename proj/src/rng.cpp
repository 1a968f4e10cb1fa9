#include "jlp/rng.hpp"

#include <cmath>

namespace jlp {
namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t a = seed;
  std::uint64_t b = index ^ 0x6A09E667F3BCC909ull;
  state_ = splitmix64(a) ^ (splitmix64(b) + 0x9E3779B97F4A7C15ull);
}

std::uint64_t CounterRng::next_u64() { return splitmix64(state_); }

double CounterRng::next_uniform() {
  // 53-bit mantissa, shifted into (0, 1].
  return double((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * 3.14159265358979323846 * u2;
  cached_ = r * std::sin(a);
  has_cached_ = true;
  return r * std::cos(a);
}

std::complex<double> CounterRng::next_complex_gaussian() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return {re, im};
}

}  // namespace jlp
