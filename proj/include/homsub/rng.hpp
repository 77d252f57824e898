#ifndef HOMSUB_RNG_HPP
#define HOMSUB_RNG_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>

namespace homsub {

// Seeded Gaussian sampler. Box-Muller on top of mt19937_64 so that streams
// do not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  Eigen::VectorXd gaussian_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  // unit vector w.r.t. the inner product x^T gram y
  Eigen::VectorXd unit_vector(int n, const Eigen::MatrixXd& gram) {
    while (true) {
      Eigen::VectorXd v = gaussian_vector(n);
      const double nrm = std::sqrt(v.dot(gram * v));
      if (nrm > 1e-8) return v / nrm;
    }
  }

  Eigen::VectorXd unit_vector(int n) {
    return unit_vector(n, Eigen::MatrixXd::Identity(n, n));
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace homsub

#endif  // HOMSUB_RNG_HPP
