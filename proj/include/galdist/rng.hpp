#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace galdist {

// Deterministic random source.  mt19937_64 has a fully specified output
// sequence, and the bounded draws below use plain modulo so that the values
// never depend on the standard library's distribution implementations.
// Every randomized component of this project goes through this class.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish integer in [lo, hi], inclusive.  Requires lo <= hi.
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // True with probability num/den.
  bool chance(unsigned num, unsigned den) { return next() % den < num; }

  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = next() % i;
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace galdist
