#pragma once

#include <cstdint>
#include <vector>

namespace cliquesim {

/// Small deterministic generator (splitmix64). Used instead of <random>
/// distributions so that seeded outputs are identical across platforms and
/// standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  bool coin() { return (next() & 1) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

  /// Independent substream; stable under unrelated draws from the parent.
  static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                    std::uint64_t c = 0) {
    Rng mixer(seed);
    std::uint64_t s = mixer.next() ^ (a * 0x9e3779b97f4a7c15ULL);
    Rng mixer2(s);
    s = mixer2.next() ^ (b * 0xc2b2ae3d27d4eb4fULL) ^ (c * 0x165667b19e3779f9ULL);
    return Rng(s);
  }

 private:
  std::uint64_t state_;
};

}  // namespace cliquesim
