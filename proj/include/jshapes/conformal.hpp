#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jshapes/curve.hpp"

namespace jshapes {

/// Interior conformal map of a Jordan domain onto the unit disk, built by the
/// geodesic zipper algorithm from boundary points z_0, ..., z_n (domain on the
/// left). The basepoint goes to 0 and z_0 goes to 1.
class GeodesicZipper {
 public:
  GeodesicZipper(std::span<const Complex> boundary, Complex basepoint);

  // Domain -> closed disk.
  Complex forward(Complex z) const;
  // Closed disk -> closed domain.
  Complex inverse(Complex w) const;

  struct State {
    Complex z0, z1;
    Complex first_rotation{1.0, 0.0};
    std::vector<Complex> slits;  // geodesic endpoints, one per zipped point
    std::optional<double> last;  // image of z0 before the final fold; nullopt = infinity
    double fold_sign = 1.0;
    Complex basepoint_image;     // image of the basepoint in the upper half plane
  };
  const State& state() const { return state_; }
  static GeodesicZipper from_state(State state) { return GeodesicZipper(std::move(state)); }

 private:
  explicit GeodesicZipper(State state) : state_(std::move(state)) {}
  Complex to_half_plane(Complex z) const;
  Complex from_half_plane(Complex w) const;

  State state_;
};

struct MapOptions {
  std::size_t resample_points = 512;
  std::size_t laurent_order = 64;      // number of coefficients after c~
  double laurent_radius = 1.5;
  std::size_t boundary_sample_count = 512;
  std::size_t quality_sample_count = 4096;
  double rel_tol_map = 1e-6;
  bool resample = true;
  // Extra nodes at h/2, h/4, ... on both sides of vertices turning by more
  // than corner_angle radians.
  int corner_levels = 8;
  double corner_angle = 0.25;
};

struct MapQuality {
  // Hausdorff distance between the image of the unit circle and the source
  // curve (polyline to polyline, translated frame).
  double boundary_rmse = 0.0;
  double derivative_min = 0.0;
  double derivative_max = 0.0;
};

/// Exterior Riemann map from {|w| > 1} onto the unbounded complement of a
/// curve translated by -t, with infinity fixed and phi(1) at the curve point of
/// maximal real part.
class ExteriorMap {
 public:
  ExteriorMap(GeodesicZipper zipper, Complex translation, std::vector<Complex> source_curve);

  Complex evaluate(Complex w) const;
  Complex translation() const { return translation_; }
  // Leading Laurent coefficient c~ (the capacity, with phase).
  Complex capacity() const { return laurent_.at(0); }
  // c~, c~_0, c~_1, ... : phi(w) = c~ w + c~_0 + c~_1 / w + ...
  std::span<const Complex> laurent() const { return laurent_; }
  std::span<const std::pair<Complex, Complex>> boundary_samples() const { return boundary_samples_; }
  // Source curve in the translated frame.
  std::span<const Complex> source_curve() const { return source_; }
  const MapQuality& quality() const { return quality_; }
  const GeodesicZipper& zipper() const { return zipper_; }

  // Used by the builder and by deserialization.
  void set_laurent(std::vector<Complex> coefficients) { laurent_ = std::move(coefficients); }
  void set_boundary_samples(std::vector<std::pair<Complex, Complex>> samples) {
    boundary_samples_ = std::move(samples);
  }
  void set_quality(MapQuality quality) { quality_ = quality; }

 private:
  GeodesicZipper zipper_;
  Complex translation_;
  std::vector<Complex> source_;
  std::vector<Complex> laurent_;
  std::vector<std::pair<Complex, Complex>> boundary_samples_;
  MapQuality quality_;
};

// Throws BAD_BASEPOINT, MAP_DIVERGED or ALIASING.
ExteriorMap build_exterior_map(const JordanCurve& curve, Complex t, const MapOptions& options = {});

// Throws OUT_OF_DOMAIN for |w| < 1 - tol.
Complex evaluate_map(const ExteriorMap& map, Complex w);

// Coefficients (c~, c~_0, ..., c~_{m-1}) from the discrete Fourier transform of
// the map sampled on |w| = rho. Throws ALIASING when the values computed at rho
// and 2 rho disagree by more than rel_tol (relative to |c~| on |w| = 2 rho).
std::vector<Complex> laurent_coefficients(const ExteriorMap& map, std::size_t m, double rho,
                                          double rel_tol = 1e-6);

// Laurent series evaluated at w.
Complex evaluate_laurent(std::span<const Complex> coefficients, Complex w);

MapQuality measure_quality(const ExteriorMap& map, std::size_t samples);

}  // namespace jshapes
