#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace jshapes {

using Complex = std::complex<double>;

struct BoundingBox {
  Complex min;
  Complex max;

  double width() const { return max.real() - min.real(); }
  double height() const { return max.imag() - min.imag(); }
  Complex center() const { return 0.5 * (min + max); }
  bool contains(Complex z) const {
    return z.real() >= min.real() && z.real() <= max.real() &&
           z.imag() >= min.imag() && z.imag() <= max.imag();
  }
  BoundingBox expanded(double margin) const {
    return {min - Complex(margin, margin), max + Complex(margin, margin)};
  }
};

BoundingBox bounds_of(std::span<const Complex> points);

enum class RegionLabel { kBoundedInside, kOnAnnulus, kUnboundedOutside };

std::string_view to_string(RegionLabel label);

// Signed area of the closed polygon through `points` (positive if CCW).
double signed_area(std::span<const Complex> points);

// Winding number of the closed polygon around z.
int winding_number(std::span<const Complex> polygon, Complex z);

// Euclidean distance from z to the closed polyline.
double distance_to_polyline(std::span<const Complex> polygon, Complex z);

// First pair (i, j), i < j, of non-adjacent edges of the closed polygon that
// touch or cross; edge i joins vertex i to vertex i+1 (mod n).
std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(
    std::span<const Complex> polygon);

// True if any edge of closed polygon `a` touches any edge of closed polygon `b`.
bool polygons_intersect(std::span<const Complex> a, std::span<const Complex> b);

/// A closed, simple, counterclockwise polygon with at least eight vertices.
///
/// Instances are validated on construction and immutable afterwards. The
/// closing edge from the last vertex back to the first is implicit.
class JordanCurve {
 public:
  static constexpr std::size_t kMinPoints = 8;

  // Validates and normalizes orientation. Throws Error with TOO_FEW_POINTS or
  // NOT_SIMPLE (zero area and repeated consecutive points count as not simple).
  explicit JordanCurve(std::vector<Complex> points);

  std::span<const Complex> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Complex operator[](std::size_t i) const { return points_[i]; }

  double area() const { return area_; }
  double perimeter() const { return perimeter_; }
  double diameter() const { return diameter_; }
  BoundingBox bounds() const { return bounds_; }
  Complex centroid() const;

  // Default boundary tolerance: 1e-9 times the diameter.
  double default_tolerance() const { return 1e-9 * diameter_; }

  int winding_number(Complex z) const;
  double distance(Complex z) const;
  RegionLabel region(Complex z) const { return region(z, default_tolerance()); }
  RegionLabel region(Complex z, double tol_on) const;

  // `count` points at equal arclength spacing starting at vertex 0.
  std::vector<Complex> arclength_samples(std::size_t count) const;
  // Points at the given nondecreasing arclengths in [0, perimeter), measured
  // from vertex 0.
  std::vector<Complex> points_at(std::span<const double> arclengths) const;
  std::vector<double> vertex_arclengths() const;
  JordanCurve resampled(std::size_t count) const;
  JordanCurve translated(Complex shift) const;
  JordanCurve scaled(double factor) const;

  // The area centroid when it has reasonable clearance from the boundary,
  // otherwise the grid point of maximal clearance.
  Complex interior_point() const;

 private:
  std::vector<Complex> points_;
  double area_ = 0.0;
  double perimeter_ = 0.0;
  double diameter_ = 0.0;
  BoundingBox bounds_{};
};

// `count` pseudo-random points strictly inside `curve` (clearance above the
// default tolerance), deterministic in `seed`. Throws SAMPLING_FAILURE.
std::vector<Complex> interior_samples(const JordanCurve& curve, std::size_t count,
                                      std::uint64_t seed);

JordanCurve parse_curve(std::string_view text);
JordanCurve load_curve(const std::filesystem::path& path);

/// Closed annulus bounded by `outer` and `inner`. Use make_annulus or
/// offset_annulus to obtain a validated instance.
struct AnnulusSpec {
  JordanCurve outer;
  JordanCurve inner;
  double width_hint = 0.0;

  // kBoundedInside for the bounded complementary component, kOnAnnulus for the
  // closed annulus body, kUnboundedOutside for the unbounded component.
  RegionLabel region(Complex z) const;
  // True for points in the open annulus, off both boundary curves.
  bool strictly_between(Complex z) const;
  AnnulusSpec translated(Complex shift) const;
};

// Throws GEOMETRY_REJECTED unless inner lies strictly inside outer.
AnnulusSpec make_annulus(JordanCurve outer, JordanCurve inner);

// Offset of J by `distance` (positive outward, negative inward), joined with
// round arcs on the convex side and repaired by cutting self-intersection loops.
std::vector<Complex> offset_polygon(const JordanCurve& curve, double distance);

// Annulus between the inward and outward offsets of J at `eps_geom`.
// Throws OFFSET_COLLAPSE when an offset degenerates.
AnnulusSpec offset_annulus(const JordanCurve& curve, double eps_geom);

}  // namespace jshapes
