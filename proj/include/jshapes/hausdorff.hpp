#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jshapes/curve.hpp"

namespace jshapes {

/// Uniform-grid index answering exact nearest-point queries.
class NearestIndex {
 public:
  explicit NearestIndex(std::span<const Complex> points);

  // Distance to the nearest indexed point.
  double nearest(Complex q) const;
  // True if some indexed point lies within `radius` of q.
  bool any_within(Complex q, double radius) const;

 private:
  template <typename Stop>
  double search(Complex q, Stop&& stop) const;

  std::vector<Complex> points_;
  std::vector<std::size_t> cell_start_;
  Complex origin_;
  double cell_ = 1.0;
  long nx_ = 1;
  long ny_ = 1;
};

// max over x in `from` of the distance to the nearest point of `to`.
double directed_hausdorff(std::span<const Complex> from, std::span<const Complex> to);

// Symmetric Hausdorff distance between finite point sets. Throws EMPTY_SET.
double hausdorff_distance(std::span<const Complex> x, std::span<const Complex> y);

}  // namespace jshapes
