#include "gwdn/series.hpp"

#include "gwdn/errors.hpp"

#include <algorithm>
#include <string>

namespace gwdn {

PerturbedSeries::PerturbedSeries(int h_max, int q_max) : h_max_(h_max), q_max_(q_max) {
  if (h_max < 1 || q_max < 0)
    throw PreconditionFailed("series needs h_max >= 1 and q_max >= 0, got " +
                             std::to_string(h_max) + ", " + std::to_string(q_max));
  c_.resize(static_cast<std::size_t>(h_max) * static_cast<std::size_t>(q_max + 1));
}

const CoefPoly& PerturbedSeries::at(int h, int q) const {
  if (h < 0 || h >= h_max_ || q < 0 || q > q_max_)
    throw std::out_of_range("series index (h=" + std::to_string(h) + ", q=" + std::to_string(q) +
                            ") out of range");
  return c_[static_cast<std::size_t>(q) * h_max_ + h];
}

CoefPoly& PerturbedSeries::at(int h, int q) {
  return const_cast<CoefPoly&>(std::as_const(*this).at(h, q));
}

DensePoly PerturbedSeries::q_slice(int m) const {
  std::vector<CoefPoly> v;
  for (int i = 0; i < h_max_; ++i) v.push_back(at(i, m));
  return DensePoly(std::move(v));
}

void PerturbedSeries::set_q_slice(int m, const DensePoly& p) {
  for (int i = 0; i < h_max_; ++i) at(i, m) = p.coeff(static_cast<std::size_t>(i));
}

std::vector<CoefPoly> PerturbedSeries::h_component(int i) const {
  std::vector<CoefPoly> v;
  for (int m = 0; m <= q_max_; ++m) v.push_back(at(i, m));
  return v;
}

PerturbedSeries PerturbedSeries::truncated(int h_max, int q_max) const {
  PerturbedSeries r(std::min(h_max, h_max_), std::min(q_max, q_max_));
  for (int m = 0; m <= r.q_max_; ++m)
    for (int i = 0; i < r.h_max_; ++i) r.at(i, m) = at(i, m);
  return r;
}

bool PerturbedSeries::is_weighted_homogeneous() const {
  for (int m = 0; m <= q_max_; ++m)
    for (int i = 0; i < h_max_; ++i)
      if (!at(i, m).is_weighted_homogeneous(m)) return false;
  return true;
}

}  // namespace gwdn
