#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace braid {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// all randomness flows from one master seed through named streams
inline std::mt19937_64 make_stream(std::uint64_t master_seed, const std::string& name,
                                   std::uint64_t counter = 0) {
  std::uint64_t s = splitmix64(master_seed ^ splitmix64(fnv1a(name)) ^ splitmix64(counter * 0xda942042e4dd58b5ULL + 1));
  return std::mt19937_64(s);
}

}  // namespace braid
