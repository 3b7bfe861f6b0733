#include "jshapes/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "jshapes/error.hpp"

namespace jshapes {

ShapePolynomial PreparedShape::polynomial(std::size_t n) const {
  ShapePolynomial poly = sample_roots(map, epsilon, n);
  validate(poly, &annulus);
  return poly;
}

Complex default_translation(const JordanCurve& curve, const AnnulusSpec& annulus) {
  const Complex t = curve.interior_point();
  if (annulus.inner.region(t) == RegionLabel::kBoundedInside) return t;
  return annulus.inner.interior_point();
}

PreparedShape prepare_shape(const JordanCurve& curve, double eps_geom, std::optional<Complex> t,
                            const ShapeOptions& options) {
  AnnulusSpec annulus = offset_annulus(curve, eps_geom);
  const Complex shift = t ? *t : default_translation(curve, annulus);
  if (annulus.inner.region(shift) != RegionLabel::kBoundedInside) {
    throw Error(ErrorCode::kBadBasepoint, "translation point is not inside the inner offset curve");
  }
  ExteriorMap map = build_exterior_map(curve, shift, options.map);
  const double epsilon = options.epsilon ? *options.epsilon : select_epsilon(map, annulus, options.epsilon_search);
  return PreparedShape{curve, std::move(annulus), shift, std::move(map), epsilon};
}

std::vector<std::size_t> degree_schedule(std::size_t n_max) {
  std::vector<std::size_t> out;
  for (std::size_t n = 8; n < n_max; n *= 2) out.push_back(n);
  if (n_max >= 8) out.push_back(n_max);
  return out;
}

MultiShapeSystem PreparedSystem::system(std::size_t n) const {
  std::vector<ShapePolynomial> polys;
  std::vector<AnnulusSpec> annuli;
  for (const auto& s : shapes) {
    polys.push_back(s.polynomial(n));
    annuli.push_back(s.annulus);
  }
  return make_system(std::move(polys), std::move(annuli), t);
}

PreparedSystem prepare_system(const std::vector<JordanCurve>& curves, double eps_geom,
                              std::optional<Complex> t, const ShapeOptions& options) {
  if (curves.empty()) throw Error(ErrorCode::kInvalidArgument, "no curves given");
  std::vector<AnnulusSpec> annuli;
  for (const auto& c : curves) annuli.push_back(offset_annulus(c, eps_geom));
  if (!mutually_exterior(annuli)) {
    throw Error(ErrorCode::kNotMutuallyExterior, "curve annuli are not mutually exterior");
  }
  PreparedSystem out;
  for (const auto& c : curves) out.shapes.push_back(prepare_shape(c, eps_geom, std::nullopt, options));
  out.t = t ? *t : out.shapes.front().t;
  // Validates t and the geometry once, at the smallest admissible degree.
  (void)out.system(8);
  return out;
}

AnnulusSystem PreparedAnnulus::system(std::size_t n) const {
  return make_annulus_system(outer.polynomial(n), inner.polynomial(n), outer.annulus, inner.annulus,
                             t, xi);
}

double curve_distance(const JordanCurve& a, const JordanCurve& b) {
  if (polygons_intersect(a.points(), b.points())) return 0.0;
  double best = INFINITY;
  for (const Complex p : a.points()) best = std::min(best, b.distance(p));
  for (const Complex p : b.points()) best = std::min(best, a.distance(p));
  return best;
}

PreparedAnnulus prepare_annulus(const JordanCurve& outer, const JordanCurve& inner, double delta,
                                std::optional<Complex> t, const ShapeOptions& options) {
  if (!(delta > 0.0)) throw Error(ErrorCode::kInvalidArgument, "delta must be positive");
  const bool nested = std::all_of(inner.points().begin(), inner.points().end(),
                                  [&](Complex p) { return outer.winding_number(p) != 0; });
  if (!nested || polygons_intersect(inner.points(), outer.points())) {
    throw Error(ErrorCode::kGeometryRejected, "inner curve must lie strictly inside the outer curve");
  }
  const double xi = curve_distance(outer, inner);
  const double delta1 = std::min(delta, xi) / 3.0;
  const AnnulusSpec E = offset_annulus(outer, delta1);
  const AnnulusSpec F = offset_annulus(inner, delta1);

  Complex base;
  if (t) {
    base = *t;
  } else {
    // Grid point of maximal clearance in the middle region.
    constexpr int kGrid = 128;
    const BoundingBox box = E.inner.bounds();
    double best = -1.0;
    for (int iy = 0; iy < kGrid; ++iy) {
      for (int ix = 0; ix < kGrid; ++ix) {
        const Complex z(box.min.real() + (ix + 0.5) * box.width() / kGrid,
                        box.min.imag() + (iy + 0.5) * box.height() / kGrid);
        if (E.inner.region(z) != RegionLabel::kBoundedInside ||
            F.outer.region(z) != RegionLabel::kUnboundedOutside) {
          continue;
        }
        const double clearance = std::min(E.inner.distance(z), F.outer.distance(z));
        if (clearance > best) {
          best = clearance;
          base = z;
        }
      }
    }
    if (best < 0.0) throw Error(ErrorCode::kGeometryRejected, "middle region is empty");
  }
  if (E.inner.region(base) != RegionLabel::kBoundedInside ||
      F.outer.region(base) != RegionLabel::kUnboundedOutside) {
    throw Error(ErrorCode::kBadBasepoint, "t must lie in the middle region between the curves");
  }
  return PreparedAnnulus{prepare_shape(outer, delta1, base, options),
                         prepare_shape(inner, delta1, std::nullopt, options), base, xi, delta1};
}

}  // namespace jshapes
