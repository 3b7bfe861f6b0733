#include "jshapes/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "jshapes/error.hpp"

namespace jshapes {

NearestIndex::NearestIndex(std::span<const Complex> points) {
  if (points.empty()) throw Error(ErrorCode::kEmptySet, "cannot index an empty point set");
  const BoundingBox box = bounds_of(points);
  origin_ = box.min;
  const double span = std::max({box.width(), box.height(), 1e-300});
  const double area = std::max(box.width() * box.height(), span * span * 1e-6);
  cell_ = std::max(std::sqrt(area / static_cast<double>(points.size())) * 1.5, span * 1e-6);
  nx_ = static_cast<long>(box.width() / cell_) + 1;
  ny_ = static_cast<long>(box.height() / cell_) + 1;

  auto cell_of = [&](Complex p) {
    const long ix = std::clamp(static_cast<long>((p.real() - origin_.real()) / cell_), 0L, nx_ - 1);
    const long iy = std::clamp(static_cast<long>((p.imag() - origin_.imag()) / cell_), 0L, ny_ - 1);
    return static_cast<std::size_t>(iy * nx_ + ix);
  };
  cell_start_.assign(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
  for (const Complex p : points) ++cell_start_[cell_of(p) + 1];
  std::partial_sum(cell_start_.begin(), cell_start_.end(), cell_start_.begin());
  points_.resize(points.size());
  std::vector<std::size_t> fill(cell_start_.begin(), cell_start_.end() - 1);
  for (const Complex p : points) points_[fill[cell_of(p)]++] = p;
}

template <typename Stop>
double NearestIndex::search(Complex q, Stop&& stop) const {
  const long cx = std::clamp(static_cast<long>(std::floor((q.real() - origin_.real()) / cell_)),
                             0L, nx_ - 1);
  const long cy = std::clamp(static_cast<long>(std::floor((q.imag() - origin_.imag()) / cell_)),
                             0L, ny_ - 1);
  double best2 = std::numeric_limits<double>::infinity();
  const long max_ring = std::max(nx_, ny_);
  for (long ring = 0; ring <= max_ring; ++ring) {
    const long x0 = cx - ring, x1 = cx + ring, y0 = cy - ring, y1 = cy + ring;
    auto visit = [&](long ix, long iy) {
      if (ix < 0 || iy < 0 || ix >= nx_ || iy >= ny_) return;
      const auto c = static_cast<std::size_t>(iy * nx_ + ix);
      for (std::size_t k = cell_start_[c]; k < cell_start_[c + 1]; ++k) {
        best2 = std::min(best2, std::norm(points_[k] - q));
      }
    };
    for (long ix = x0; ix <= x1; ++ix) {
      visit(ix, y0);
      if (y1 != y0) visit(ix, y1);
    }
    for (long iy = y0 + 1; iy < y1; ++iy) {
      visit(x0, iy);
      if (x1 != x0) visit(x1, iy);
    }
    // Cells outside ring `ring` are at least ring*cell_ away from q.
    const double reach = static_cast<double>(ring) * cell_;
    if (best2 <= reach * reach || stop(best2)) break;
  }
  return std::sqrt(best2);
}

double NearestIndex::nearest(Complex q) const {
  return search(q, [](double) { return false; });
}

bool NearestIndex::any_within(Complex q, double radius) const {
  const double r2 = radius * radius;
  return search(q, [r2](double best2) { return best2 <= r2; }) <= radius;
}

double directed_hausdorff(std::span<const Complex> from, std::span<const Complex> to) {
  if (from.empty() || to.empty()) throw Error(ErrorCode::kEmptySet, "Hausdorff distance of empty set");
  const NearestIndex index(to);
  double worst = 0.0;
  for (const Complex p : from) {
    // Early exit: p cannot raise the running maximum.
    if (index.any_within(p, worst)) continue;
    worst = std::max(worst, index.nearest(p));
  }
  return worst;
}

double hausdorff_distance(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.empty() || y.empty()) throw Error(ErrorCode::kEmptySet, "Hausdorff distance of empty set");
  return std::max(directed_hausdorff(x, y), directed_hausdorff(y, x));
}

}  // namespace jshapes
