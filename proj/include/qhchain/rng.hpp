#pragma once

#include <cstdint>

#include "qhchain/rational.hpp"

namespace qhchain {

// splitmix64: tiny, fast, and trivially splittable into per-trial streams.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Independent stream for (seed, index); results do not depend on the order
// streams are consumed in.
inline SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(mix64(seed + 0x9e3779b97f4a7c15ull * (stream + 1)));
}

// Exact dyadic coupling in the open interval (0,1): k/65536, k in [1,65535].
inline Rational draw_coupling(SplitMix64& g) {
  unsigned long k = static_cast<unsigned long>(g.next() % 65535ull) + 1ul;
  Rational r(static_cast<long>(k), 65536L);
  r.canonicalize();  // the two-arg ctor does not reduce even k
  return r;
}

}  // namespace qhchain
