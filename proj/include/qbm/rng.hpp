#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qbm {

/// SplitMix64 finalizer. Used to derive decorrelated engine seeds from
/// (seed, counter, ...) tuples so that parallel and resumable work streams
/// stay reproducible.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(std::initializer_list<uint64_t> parts) {
  uint64_t h = 0x243f6a8885a308d3ull;
  for (uint64_t p : parts) h = mix64(h ^ p);
  return h;
}

inline std::mt19937_64 make_engine(std::initializer_list<uint64_t> parts) {
  return std::mt19937_64(mix_seed(parts));
}

/// Uniform integer in [0, 2^bits); bits <= 64.
inline uint64_t random_bits(std::mt19937_64& eng, int bits) {
  uint64_t r = eng();
  return bits >= 64 ? r : (r & ((uint64_t{1} << bits) - 1));
}

}  // namespace qbm
