#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "rem/tensor.hpp"

namespace rem {

inline uint64_t fnv1a64(const void* bytes, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
  const unsigned char* p = static_cast<const unsigned char*>(bytes);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic generator. Uniforms come from explicit bit manipulation and
// normals from Box-Muller, so sequences are identical across platforms and
// standard-library versions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  // in [0, 1)
  double uniform() { return (double)(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // in [0, bound), rejection sampled
  uint64_t integer(uint64_t bound) {
    uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      uint64_t r = gen_();
      if (r >= threshold) return r % bound;
    }
  }

  uint64_t bits() { return gen_(); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[integer(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

// One run seed is split into named streams so that methods with different
// sampling counts consume independent sequences and stay comparable. Streams
// re-derived per epoch make epoch-boundary checkpoints resumable without
// persisting generator state.
inline Rng derive_rng(uint64_t seed, std::string_view stream, uint64_t index = 0) {
  uint64_t s = splitmix64(seed ^ fnv1a64(stream));
  return Rng(splitmix64(s ^ splitmix64(index)));
}

inline Tensor randn(Shape shape, Rng& rng) {
  Tensor t(std::move(shape));
  for (double& v : t.data) v = rng.normal();
  return t;
}

inline Tensor rand_uniform(Shape shape, Rng& rng, double lo, double hi) {
  Tensor t(std::move(shape));
  for (double& v : t.data) v = rng.uniform(lo, hi);
  return t;
}

inline std::vector<int64_t> random_permutation(int64_t n, Rng& rng) {
  std::vector<int64_t> p(n);
  for (int64_t i = 0; i < n; ++i) p[i] = i;
  rng.shuffle(p);
  return p;
}

}  // namespace rem
