#include "twistorlab/random.hpp"

namespace twistorlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  // FNV-1a over the stream name
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(seed ^ splitmix64(h)) + index);
}

UnitImaginary Rng::unit_imaginary() {
  for (;;) {
    const Quaternion v{0.0, normal(), normal(), normal()};
    if (v.norm2() > 1e-6) return UnitImaginary::normalized(v);
  }
}

}  // namespace twistorlab
