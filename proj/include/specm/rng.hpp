#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "specm/common.hpp"

namespace specm {

// Seedable generator with a fixed output sequence across platforms.
// mt19937_64 is fully specified by the standard; the variate transforms are
// implemented here directly because the std::*_distribution classes are not
// reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  // Index drawn proportional to non-negative weights.
  int categorical(const Eigen::VectorXd& weights) {
    const double total = weights.sum();
    if (!(total > 0.0)) throw InvalidArgument("categorical: weights must have positive sum");
    double u = uniform01() * total;
    double acc = 0.0;
    int last_positive = -1;
    for (int i = 0; i < weights.size(); ++i) {
      if (weights[i] < 0.0) throw InvalidArgument("categorical: negative weight");
      if (weights[i] > 0.0) last_positive = i;
      acc += weights[i];
      if (u < acc) return i;
    }
    return last_positive;  // rounding spill lands on the last positive entry
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace specm
