#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <utility>

#include "jshapes/curve.hpp"
#include "jshapes/scaled_complex.hpp"
#include "jshapes/shape_polynomial.hpp"

namespace jshapes {

enum class OrbitStatus { kInteriorCaptured, kEscaped, kUndecided };

std::string_view to_string(OrbitStatus status);

struct OrbitResult {
  OrbitStatus status = OrbitStatus::kUndecided;
  std::size_t iterations = 0;
  std::int64_t final_magnitude_exponent = 0;
};

/// A map iterated in the frame centered at center(). Implementations must be
/// safe to call concurrently.
class DynamicalMap {
 public:
  virtual ~DynamicalMap() = default;
  // One step in centered coordinates. A non-finite result marks an
  // indeterminate point.
  virtual ScaledComplex step(const ScaledComplex& w) const = 0;
  virtual Complex center() const { return {}; }

  // The map in its own frame.
  Complex operator()(Complex z) const {
    return (step(ScaledComplex(z - center())) + ScaledComplex(center())).to_complex();
  }
};

class PolynomialMap final : public DynamicalMap {
 public:
  explicit PolynomialMap(ShapePolynomial poly, Frame frame = Frame::kOriginal)
      : poly_(std::move(poly)), frame_(frame) {}
  ScaledComplex step(const ScaledComplex& w) const override { return eval_P(poly_, w); }
  Complex center() const override { return frame_ == Frame::kOriginal ? poly_.t : Complex{}; }
  const ShapePolynomial& polynomial() const { return poly_; }

 private:
  ShapePolynomial poly_;
  Frame frame_;
};

class ConstantMap final : public DynamicalMap {
 public:
  explicit ConstantMap(Complex value) : value_(value) {}
  ScaledComplex step(const ScaledComplex&) const override { return ScaledComplex(value_); }

 private:
  Complex value_;
};

// Orbit of z0 (in the map's frame). Distances are measured from center().
// ESCAPED once |z_m| > escape_radius, INTERIOR_CAPTURED once |z_m| <
// capture_radius, UNDECIDED after max_iter steps or at an indeterminate point.
OrbitResult iterate(const DynamicalMap& map, Complex z0, double escape_radius, double capture_radius,
                    std::size_t max_iter);

/// Sampled witnesses for the contraction/expansion bounds of a polynomial on
/// an annulus (translated frame).
struct EscapeCertificate {
  double r_inner = 0.0;
  double kappa = 0.0;
  double K_bound = 0.0;
  double alpha = 0.0;      // max |x| over the bounded inside
  double beta = 0.0;       // max |x| over inside plus annulus
  double gamma_inf = 0.0;  // min |x| over the unbounded outside
  std::size_t n_certified = 0;
  double inside_max = 0.0;
  double outside_min_ratio = 0.0;
  std::size_t inside_samples = 0;
  std::size_t outside_samples = 0;
  bool pass = false;

  double escape_radius() const { return beta; }
  double capture_radius() const { return r_inner; }
};

struct CertifyOptions {
  std::size_t samples_per_region = 4096;
  std::uint64_t seed = 0;
};

// `annulus` is in the original frame. Throws SAMPLING_FAILURE.
EscapeCertificate certify(const ShapePolynomial& poly, const AnnulusSpec& annulus,
                          const CertifyOptions& options = {});

struct DegreeSearch {
  ShapePolynomial polynomial;
  EscapeCertificate certificate;
};

// First n of the increasing schedule whose certificate passes. Throws
// NO_DEGREE_FOUND with the best failing margins.
DegreeSearch find_min_degree(const std::function<ShapePolynomial(std::size_t)>& build,
                             const AnnulusSpec& annulus, std::span<const std::size_t> schedule,
                             const CertifyOptions& options = {});

struct GrowthCheck {
  bool pass = true;
  double worst_margin_log2 = INFINITY;  // min over points and m of log2(|F^m z| / (factor^m |z|))
  std::size_t points = 0;
};

// Checks |F^m(z)| > factor^m |z| for m = 1..depth, with `points` in the map's
// frame, magnitudes taken in centered coordinates and the orbit kept in scaled
// arithmetic.
GrowthCheck check_growth(const DynamicalMap& map, std::span<const Complex> points, double factor,
                         int depth);

}  // namespace jshapes
