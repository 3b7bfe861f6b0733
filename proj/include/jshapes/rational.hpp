#pragma once

#include <cstddef>
#include <vector>

#include "jshapes/curve.hpp"
#include "jshapes/dynamics.hpp"
#include "jshapes/scaled_complex.hpp"
#include "jshapes/shape_polynomial.hpp"

namespace jshapes {

// True when every annulus lies in the unbounded complementary component of
// every other one.
bool mutually_exterior(std::span<const AnnulusSpec> annuli);

/// Several shape polynomials of a common degree sharing one translation point
/// t that lies inside one of the annuli's bounded components.
struct MultiShapeSystem {
  std::vector<ShapePolynomial> shapes;  // all with t == this->t
  std::vector<AnnulusSpec> annuli;      // original frame
  Complex t;

  std::size_t n() const { return shapes.empty() ? 0 : shapes.front().n; }
};

// Rebases every shape to t. Throws NOT_MUTUALLY_EXTERIOR, BAD_BASEPOINT (t not
// inside any annulus' bounded component) or INVALID_ARGUMENT (mixed degrees).
MultiShapeSystem make_system(std::vector<ShapePolynomial> shapes, std::vector<AnnulusSpec> annuli,
                             Complex t);

// Omega = (sum_j 1 / (omega_j + 1))^-1. Throws INDETERMINATE when a term
// omega_j + 1 vanishes.
ScaledComplex eval_Omega(const MultiShapeSystem& sys, const ScaledComplex& z);  // translated frame
ScaledComplex eval_Omega(const MultiShapeSystem& sys, Complex z, Frame frame);
// R = z Omega, translated frame.
ScaledComplex eval_R(const MultiShapeSystem& sys, const ScaledComplex& z);
Evaluation eval_R(const MultiShapeSystem& sys, Complex z, Frame frame);

class RationalMap final : public DynamicalMap {
 public:
  explicit RationalMap(MultiShapeSystem sys, Frame frame = Frame::kOriginal)
      : sys_(std::move(sys)), frame_(frame) {}
  ScaledComplex step(const ScaledComplex& w) const override;
  Complex center() const override { return frame_ == Frame::kOriginal ? sys_.t : Complex{}; }
  const MultiShapeSystem& system() const { return sys_; }

 private:
  MultiShapeSystem sys_;
  Frame frame_;
};

// Radii of the system geometry in the translated frame.
struct SystemGeometry {
  double rho = 0.0;           // radius of a ball about 0 inside the bounded components
  double sup_inside = 0.0;    // max |x| over the union of bounded components
  double inf_outside = 0.0;   // min |x| over the common unbounded component
  double sup_bounded = 0.0;   // max |x| over the complement of that component
};

SystemGeometry system_geometry(const MultiShapeSystem& sys);

// Bounds b < B meeting b * sup_inside < rho and B * inf_outside > sup_bounded,
// each with a factor-of-two margin.
std::pair<double, double> default_bounds(const SystemGeometry& geometry);

struct MultiCertificate {
  double b = 0.0;
  double B = 0.0;
  SystemGeometry geometry;
  std::size_t n = 0;
  double inside_max = 0.0;   // max |Omega| over bounded-component samples
  double outside_min = 0.0;  // min |Omega| over boundary samples of the unbounded component
  std::size_t inside_samples = 0;
  std::size_t outside_samples = 0;
  bool pass = false;

  double escape_radius() const { return geometry.sup_bounded; }
  double capture_radius() const { return geometry.rho; }
};

// Throws GEOMETRY_REJECTED when b >= B or the b, B conditions fail.
MultiCertificate certify_multi(const MultiShapeSystem& sys, double b, double B,
                               const CertifyOptions& options = {});

/// S = P_E + 1 / (omega_F + 1) for an annulus bounded by an outer curve C1
/// (approximated through the annulus E) and an inner curve C2 (through F).
struct AnnulusSystem {
  ShapePolynomial outer_shape;  // P_E, translated about t
  ShapePolynomial inner_shape;  // omega_F, translated about t
  AnnulusSpec E;                // original frame
  AnnulusSpec F;                // original frame
  Complex t;
  double xi = 0.0;              // distance between C1 and C2

  std::size_t n() const { return outer_shape.n; }
};

// Rebases both shapes to t. Throws GEOMETRY_REJECTED (E and F not disjoint and
// nested) or BAD_BASEPOINT (t outside the middle region).
AnnulusSystem make_annulus_system(ShapePolynomial outer_shape, ShapePolynomial inner_shape,
                                  AnnulusSpec E, AnnulusSpec F, Complex t, double xi);

ScaledComplex eval_S(const AnnulusSystem& sys, const ScaledComplex& z);  // translated frame
Evaluation eval_S(const AnnulusSystem& sys, Complex z, Frame frame);

class AnnulusMap final : public DynamicalMap {
 public:
  explicit AnnulusMap(AnnulusSystem sys, Frame frame = Frame::kOriginal)
      : sys_(std::move(sys)), frame_(frame) {}
  ScaledComplex step(const ScaledComplex& w) const override;
  Complex center() const override { return frame_ == Frame::kOriginal ? sys_.t : Complex{}; }
  const AnnulusSystem& system() const { return sys_; }

 private:
  AnnulusSystem sys_;
  Frame frame_;
};

struct AnnulusCertificate {
  double r = 0.0;        // ball about 0 inside the middle region
  double R = 0.0;        // ball containing everything but the outside region
  double eta = 0.0;      // 1 / min |x| over the outside region
  double kappa = 0.0;    // max{1, eta (1 + r/2), eta (R + r/2)}, the infimal admissible value
  std::size_t n = 0;
  double middle_max = 0.0;        // max |S| over middle samples
  double outer_min = 0.0;         // min |S| over outside-boundary samples
  double inner_min = 0.0;         // min |S| over inside samples
  double outer_min_ratio = 0.0;   // min |S(z)| / |z| over outside-boundary samples
  std::size_t middle_samples = 0;
  std::size_t outer_samples = 0;
  std::size_t inner_samples = 0;
  bool pass = false;

  double escape_radius() const { return R; }
  double capture_radius() const { return r; }
};

AnnulusCertificate certify_S(const AnnulusSystem& sys, const CertifyOptions& options = {});

}  // namespace jshapes
