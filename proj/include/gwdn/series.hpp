#pragma once

#include "gwdn/densepoly.hpp"

#include <vector>

namespace gwdn {

/// Truncated double series sum c_{i,m} h^i q^m, i < h_max, m <= q_max.
/// h doubles as the eps of the truncated ring CoefPoly[eps]/(eps^h_max).
class PerturbedSeries {
 public:
  PerturbedSeries() = default;
  PerturbedSeries(int h_max, int q_max);

  int h_max() const noexcept { return h_max_; }
  int q_max() const noexcept { return q_max_; }

  const CoefPoly& at(int h, int q) const;
  CoefPoly& at(int h, int q);

  /// The q^m slice as a polynomial in h.
  DensePoly q_slice(int m) const;
  void set_q_slice(int m, const DensePoly& p);
  /// I^i as a list of q-coefficients 0..q_max.
  std::vector<CoefPoly> h_component(int i) const;

  PerturbedSeries truncated(int h_max, int q_max) const;

  template <typename F>
  PerturbedSeries map_coeffs(F&& f) const {
    PerturbedSeries r(h_max_, q_max_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = f(c_[k]);
    return r;
  }

  /// Coefficient of q^m h^i has weighted degree m for every stored term.
  bool is_weighted_homogeneous() const;

  friend bool operator==(const PerturbedSeries&, const PerturbedSeries&) = default;

 private:
  int h_max_ = 0;
  int q_max_ = -1;
  std::vector<CoefPoly> c_;  // index m * h_max + i
};

/// S_k = sum_{i<=k} I~^{k-i} t^i / i!, with t standing for log q.
/// components[i] is the q-series multiplying t^i.
struct LogSolution {
  int k = 0;
  std::vector<std::vector<CoefPoly>> components;
  friend bool operator==(const LogSolution&, const LogSolution&) = default;
};

}  // namespace gwdn
