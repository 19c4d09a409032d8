#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "twistorlab/quat.hpp"

namespace twistorlab {

std::uint64_t splitmix64(std::uint64_t x);

// Counter-based split: the stream for (seed, name, index) depends on nothing
// else, so adding a check never reshuffles the samples of another one.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_{seed} {}
  Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index)
      : engine_{derive_seed(seed, stream, index)} {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>{lo, hi}(engine_); }
  Complex complex() { return {normal(), normal()}; }

  Quaternion quaternion() { return {normal(), normal(), normal(), normal()}; }
  Biquaternion biquaternion() { return {quaternion(), quaternion()}; }
  // Complexified point with a small imaginary bank; keeps 1 + q qbar away from 0.
  Biquaternion near_real_point(double im_scale) { return {quaternion(), im_scale * quaternion()}; }
  UnitImaginary unit_imaginary();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace twistorlab
