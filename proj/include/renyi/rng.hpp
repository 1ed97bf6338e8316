#pragma once

#include <cstdint>

namespace renyi {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream: every draw is a hash of (seed, trial, word, symbol),
// so trials can be evaluated in any order and reproduce the same values.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t trial, std::uint64_t word, std::uint64_t symbol) const {
    std::uint64_t h = splitmix64(seed_);
    h = splitmix64(h ^ trial);
    h = splitmix64(h ^ (word * 0x632be59bd9b4e019ULL));
    return splitmix64(h ^ (symbol * 0xd6e8feb86659fd93ULL));
  }

  // uniform on [0,1) from the top 53 bits
  double uniform(std::uint64_t trial, std::uint64_t word, std::uint64_t symbol) const {
    return static_cast<double>(bits(trial, word, symbol) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
};

}  // namespace renyi
