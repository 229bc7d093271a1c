#pragma once

#include <cstdint>
#include <random>

namespace mace {

// splitmix64 finalizer; used to decorrelate derived seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Combines a base seed with a stream tag. Chain calls to derive
// per-(epoch, batch, class) streams: mix_seed(mix_seed(seed, epoch), k).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

std::mt19937_64 make_rng(std::uint64_t seed);

// Uniform in [0,1). Goes through a fixed 53-bit mantissa path so the
// value stream is identical across standard libraries.
double uniform_unit(std::mt19937_64& rng);

double uniform_range(std::mt19937_64& rng, double lo, double hi);

// Standard normal via Box-Muller, one draw per call (caches the pair).
class GaussianDraw {
 public:
  double operator()(std::mt19937_64& rng);

 private:
  bool has_spare_ = false;
  double spare_ = 0.0;
};

double gaussian(std::mt19937_64& rng);

// Fisher-Yates with index = rng() % (i + 1); self-contained so shuffles
// are reproducible independent of the standard library implementation.
template <typename T>
void deterministic_shuffle(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace mace
