#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace adapfl {

// Counter-based splitmix64 generator. Streams for different purposes are
// derived by key mixing rather than by sharing sequential state, so the
// draw order of one consumer never shifts another consumer's stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0, n); n must be nonzero.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Knuth's product method; fine for the small means used here.
  int poisson(double mean) {
    double limit = std::exp(-mean);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform01();
    } while (p > limit);
    return k - 1;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  // Derives an independent child seed from a seed and a tag sequence.
  static std::uint64_t derive(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> tags) {
    std::uint64_t x = seed ^ 0x63d1cc5ab3f0e1b7ULL;
    for (std::uint64_t tag : tags) {
      x += 0x9e3779b97f4a7c15ULL * (tag + 1);
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      x ^= x >> 31;
    }
    return x;
  }

 private:
  std::uint64_t state_;
};

}  // namespace adapfl
