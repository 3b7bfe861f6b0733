#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jshapes/conformal.hpp"
#include "jshapes/curve.hpp"
#include "jshapes/dynamics.hpp"
#include "jshapes/rational.hpp"
#include "jshapes/shape_polynomial.hpp"

namespace jshapes {

struct ShapeOptions {
  MapOptions map;
  EpsilonOptions epsilon_search;
  std::optional<double> epsilon;  // overrides the search
};

/// A target curve with its working annulus, translation point, exterior map
/// and inflation parameter: everything needed to sample roots at any n.
struct PreparedShape {
  JordanCurve curve;
  AnnulusSpec annulus;
  Complex t;
  ExteriorMap map;
  double epsilon;

  // Roots at degree n + 1, checked to lie strictly inside the annulus.
  ShapePolynomial polynomial(std::size_t n) const;
};

// Translation point inside the annulus' bounded component: the curve's
// interior point when it is there, else the inner curve's.
Complex default_translation(const JordanCurve& curve, const AnnulusSpec& annulus);

PreparedShape prepare_shape(const JordanCurve& curve, double eps_geom, std::optional<Complex> t = {},
                            const ShapeOptions& options = {});

// Doubling schedule from 8 up to (and including) n_max.
std::vector<std::size_t> degree_schedule(std::size_t n_max);

/// Rational map for mutually exterior curves, each prepared about its own
/// interior point and then rebased to the shared t.
struct PreparedSystem {
  std::vector<PreparedShape> shapes;
  Complex t;

  MultiShapeSystem system(std::size_t n) const;
};

// t defaults to the first shape's translation point.
PreparedSystem prepare_system(const std::vector<JordanCurve>& curves, double eps_geom,
                              std::optional<Complex> t = {}, const ShapeOptions& options = {});

/// Annulus target bounded by an outer curve C1 and inner curve C2, approximated
/// through offset annuli E (of C1) and F (of C2) at width delta_1 = min(delta,
/// xi) / 3, where xi is the distance between the curves.
struct PreparedAnnulus {
  PreparedShape outer;  // E
  PreparedShape inner;  // F
  Complex t;
  double xi = 0.0;
  double delta1 = 0.0;

  AnnulusSystem system(std::size_t n) const;
};

// Throws GEOMETRY_REJECTED unless C2 lies inside C1, BAD_BASEPOINT when t is
// not in the middle region. t defaults to a point of maximal clearance there.
PreparedAnnulus prepare_annulus(const JordanCurve& outer, const JordanCurve& inner, double delta,
                                std::optional<Complex> t = {}, const ShapeOptions& options = {});

// Minimal distance between two closed polylines (0 when they touch).
double curve_distance(const JordanCurve& a, const JordanCurve& b);

}  // namespace jshapes
