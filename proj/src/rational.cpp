#include "jshapes/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "jshapes/error.hpp"

namespace jshapes {
namespace {

const ScaledComplex kOne(Complex(1.0, 0.0));

bool nested_disjoint(const JordanCurve& inner, const JordanCurve& outer) {
  if (polygons_intersect(inner.points(), outer.points())) return false;
  return std::all_of(inner.points().begin(), inner.points().end(),
                     [&](Complex p) { return outer.winding_number(p) != 0; });
}

bool outside_each_other(const JordanCurve& a, const JordanCurve& b) {
  if (polygons_intersect(a.points(), b.points())) return false;
  const auto outside = [](const JordanCurve& x, const JordanCurve& y) {
    return std::all_of(x.points().begin(), x.points().end(),
                       [&](Complex p) { return y.winding_number(p) == 0; });
  };
  return outside(a, b) && outside(b, a);
}

double max_abs(std::span<const Complex> points) {
  double out = 0.0;
  for (const Complex p : points) out = std::max(out, std::abs(p));
  return out;
}

std::optional<ScaledComplex> try_Omega(const MultiShapeSystem& sys, const ScaledComplex& z) {
  ScaledComplex sum;
  for (const auto& shape : sys.shapes) {
    const ScaledComplex term = eval_omega(shape, z) + kOne;
    if (term.is_zero()) return std::nullopt;
    sum = sum + term.reciprocal();
  }
  if (sum.is_zero()) return std::nullopt;
  return sum.reciprocal();
}

std::optional<ScaledComplex> try_S(const AnnulusSystem& sys, const ScaledComplex& z) {
  const ScaledComplex term = eval_omega(sys.inner_shape, z) + kOne;
  if (term.is_zero()) return std::nullopt;
  return eval_P(sys.outer_shape, z) + term.reciprocal();
}

ScaledComplex indeterminate() {
  return ScaledComplex(Complex(std::numeric_limits<double>::quiet_NaN(), 0.0));
}

double abs_or_inf(const std::optional<ScaledComplex>& value) {
  return value ? std::abs(value->to_complex()) : std::numeric_limits<double>::infinity();
}

// Boundary samples of `curve` followed by interior samples (translated frame).
std::vector<Complex> region_samples(const JordanCurve& curve, std::size_t count, std::uint64_t seed) {
  std::vector<Complex> out = curve.arclength_samples(count);
  const auto interior = interior_samples(curve, count, seed);
  out.insert(out.end(), interior.begin(), interior.end());
  return out;
}

}  // namespace

bool mutually_exterior(std::span<const AnnulusSpec> annuli) {
  for (std::size_t i = 0; i < annuli.size(); ++i) {
    for (std::size_t j = i + 1; j < annuli.size(); ++j) {
      if (!outside_each_other(annuli[i].outer, annuli[j].outer)) return false;
    }
  }
  return true;
}

MultiShapeSystem make_system(std::vector<ShapePolynomial> shapes, std::vector<AnnulusSpec> annuli,
                             Complex t) {
  if (shapes.empty() || shapes.size() != annuli.size()) {
    throw Error(ErrorCode::kInvalidArgument, "need one annulus per shape and at least one shape");
  }
  for (const auto& s : shapes) {
    if (s.n != shapes.front().n) throw Error(ErrorCode::kInvalidArgument, "shapes must share n");
  }
  if (!mutually_exterior(annuli)) {
    throw Error(ErrorCode::kNotMutuallyExterior, "annuli are not mutually exterior");
  }
  const bool inside_some = std::any_of(annuli.begin(), annuli.end(), [&](const AnnulusSpec& a) {
    return a.inner.region(t) == RegionLabel::kBoundedInside;
  });
  if (!inside_some) {
    throw Error(ErrorCode::kBadBasepoint, "t is not inside any bounded component");
  }
  MultiShapeSystem sys;
  sys.t = t;
  for (auto& s : shapes) sys.shapes.push_back(rebase(s, t));
  sys.annuli = std::move(annuli);
  return sys;
}

ScaledComplex eval_Omega(const MultiShapeSystem& sys, const ScaledComplex& z) {
  auto value = try_Omega(sys, z);
  if (!value) throw Error(ErrorCode::kIndeterminate, "a harmonic-sum term vanishes");
  return *value;
}

ScaledComplex eval_Omega(const MultiShapeSystem& sys, Complex z, Frame frame) {
  return eval_Omega(sys, ScaledComplex(frame == Frame::kOriginal ? z - sys.t : z));
}

ScaledComplex eval_R(const MultiShapeSystem& sys, const ScaledComplex& z) {
  return z * eval_Omega(sys, z);
}

Evaluation eval_R(const MultiShapeSystem& sys, Complex z, Frame frame) {
  Evaluation out;
  if (frame == Frame::kOriginal) {
    out.value = eval_R(sys, ScaledComplex(z - sys.t)) + ScaledComplex(sys.t);
  } else {
    out.value = eval_R(sys, ScaledComplex(z));
  }
  out.escaped_large = out.value.exponent() > kExpCap;
  return out;
}

ScaledComplex RationalMap::step(const ScaledComplex& w) const {
  const auto omega = try_Omega(sys_, w);
  return omega ? w * *omega : indeterminate();
}

SystemGeometry system_geometry(const MultiShapeSystem& sys) {
  SystemGeometry g;
  g.inf_outside = std::numeric_limits<double>::infinity();
  for (const auto& annulus : sys.annuli) {
    const AnnulusSpec local = annulus.translated(-sys.t);
    if (local.inner.region(0.0) == RegionLabel::kBoundedInside) {
      g.rho = std::max(g.rho, local.inner.distance(0.0));
    }
    g.sup_inside = std::max(g.sup_inside, max_abs(local.inner.points()));
    g.sup_bounded = std::max(g.sup_bounded, max_abs(local.outer.points()));
    g.inf_outside = std::min(g.inf_outside, local.outer.distance(0.0));
  }
  return g;
}

std::pair<double, double> default_bounds(const SystemGeometry& geometry) {
  return {0.5 * geometry.rho / geometry.sup_inside,
          2.0 * geometry.sup_bounded / geometry.inf_outside};
}

MultiCertificate certify_multi(const MultiShapeSystem& sys, double b, double B,
                               const CertifyOptions& options) {
  if (!(b > 0.0) || !(B > b)) throw Error(ErrorCode::kGeometryRejected, "need B > b > 0");
  MultiCertificate cert;
  cert.b = b;
  cert.B = B;
  cert.n = sys.n();
  cert.geometry = system_geometry(sys);
  const SystemGeometry& g = cert.geometry;
  if (!(b * g.sup_inside < g.rho)) {
    throw Error(ErrorCode::kGeometryRejected, "b * sup|z| over the inside is not below rho");
  }
  if (!(B * g.inf_outside > g.sup_bounded)) {
    throw Error(ErrorCode::kGeometryRejected, "B * inf|z| over the outside does not exceed sup|z|");
  }
  cert.outside_min = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < sys.annuli.size(); ++j) {
    const AnnulusSpec local = sys.annuli[j].translated(-sys.t);
    for (const Complex z : region_samples(local.inner, options.samples_per_region, options.seed + j)) {
      cert.inside_max = std::max(cert.inside_max, abs_or_inf(try_Omega(sys, ScaledComplex(z))));
      ++cert.inside_samples;
    }
    for (const Complex z : local.outer.arclength_samples(options.samples_per_region)) {
      const auto value = try_Omega(sys, ScaledComplex(z));
      cert.outside_min = std::min(cert.outside_min, value ? std::abs(value->to_complex()) : 0.0);
      ++cert.outside_samples;
    }
  }
  cert.pass = cert.inside_max < b && cert.outside_min > B;
  return cert;
}

AnnulusSystem make_annulus_system(ShapePolynomial outer_shape, ShapePolynomial inner_shape,
                                  AnnulusSpec E, AnnulusSpec F, Complex t, double xi) {
  if (outer_shape.n != inner_shape.n) {
    throw Error(ErrorCode::kInvalidArgument, "both shapes must share n");
  }
  if (!nested_disjoint(F.outer, E.inner)) {
    throw Error(ErrorCode::kGeometryRejected, "inner annulus F must lie inside the outer annulus E");
  }
  if (E.inner.region(t) != RegionLabel::kBoundedInside ||
      F.outer.region(t) != RegionLabel::kUnboundedOutside) {
    throw Error(ErrorCode::kBadBasepoint, "t must lie in the middle region between E and F");
  }
  return AnnulusSystem{rebase(outer_shape, t), rebase(inner_shape, t), std::move(E), std::move(F), t, xi};
}

ScaledComplex eval_S(const AnnulusSystem& sys, const ScaledComplex& z) {
  auto value = try_S(sys, z);
  if (!value) throw Error(ErrorCode::kIndeterminate, "omega_F + 1 vanishes");
  return *value;
}

Evaluation eval_S(const AnnulusSystem& sys, Complex z, Frame frame) {
  Evaluation out;
  if (frame == Frame::kOriginal) {
    out.value = eval_S(sys, ScaledComplex(z - sys.t)) + ScaledComplex(sys.t);
  } else {
    out.value = eval_S(sys, ScaledComplex(z));
  }
  out.escaped_large = out.value.exponent() > kExpCap;
  return out;
}

ScaledComplex AnnulusMap::step(const ScaledComplex& w) const {
  const auto value = try_S(sys_, w);
  return value ? *value : indeterminate();
}

AnnulusCertificate certify_S(const AnnulusSystem& sys, const CertifyOptions& options) {
  const AnnulusSpec E = sys.E.translated(-sys.t);
  const AnnulusSpec F = sys.F.translated(-sys.t);
  if (E.inner.region(0.0) != RegionLabel::kBoundedInside ||
      F.outer.region(0.0) != RegionLabel::kUnboundedOutside) {
    throw Error(ErrorCode::kBadBasepoint, "t must lie in the middle region between E and F");
  }
  AnnulusCertificate cert;
  cert.n = sys.n();
  cert.r = 0.5 * std::min(E.inner.distance(0.0), F.outer.distance(0.0));
  cert.R = (1.0 + 1e-6) * max_abs(E.outer.points());
  cert.eta = 1.0 / E.outer.distance(0.0);
  cert.kappa = std::max({1.0, cert.eta * (1.0 + cert.r / 2), cert.eta * (cert.R + cert.r / 2)});
  if (!(cert.r > 0.0) || !std::isfinite(cert.eta)) {
    throw Error(ErrorCode::kGeometryRejected, "no admissible radii r < R for this geometry");
  }
  const std::size_t count = options.samples_per_region;

  // Middle region: both boundary curves plus interior points of E's inner
  // curve that fall outside F.
  std::vector<Complex> middle = E.inner.arclength_samples(count);
  const auto f_outer = F.outer.arclength_samples(count);
  middle.insert(middle.end(), f_outer.begin(), f_outer.end());
  std::size_t drawn = 0;
  for (std::uint64_t round = 0; drawn < count && round < 64; ++round) {
    for (const Complex z : interior_samples(E.inner, count, options.seed + 7919 * round)) {
      if (drawn == count) break;
      if (F.outer.region(z) != RegionLabel::kUnboundedOutside) continue;
      middle.push_back(z);
      ++drawn;
    }
  }
  if (drawn < count) throw Error(ErrorCode::kSamplingFailure, "could not sample the middle region");
  for (const Complex z : middle) {
    cert.middle_max = std::max(cert.middle_max, abs_or_inf(try_S(sys, ScaledComplex(z))));
  }
  cert.middle_samples = middle.size();

  cert.outer_min = std::numeric_limits<double>::infinity();
  cert.outer_min_ratio = std::numeric_limits<double>::infinity();
  for (const Complex z : E.outer.arclength_samples(count)) {
    const auto value = try_S(sys, ScaledComplex(z));
    const double mag = value ? std::abs(value->to_complex()) : 0.0;
    cert.outer_min = std::min(cert.outer_min, mag);
    cert.outer_min_ratio = std::min(cert.outer_min_ratio, mag / std::abs(z));
  }
  cert.outer_samples = count;

  cert.inner_min = std::numeric_limits<double>::infinity();
  for (const Complex z : region_samples(F.inner, count, options.seed + 1)) {
    const auto value = try_S(sys, ScaledComplex(z));
    cert.inner_min = std::min(cert.inner_min, value ? std::abs(value->to_complex()) : 0.0);
    ++cert.inner_samples;
  }
  cert.pass = cert.middle_max < cert.r && cert.outer_min > cert.R && cert.inner_min > cert.R &&
              cert.outer_min_ratio > 2.0;
  return cert;
}

}  // namespace jshapes
