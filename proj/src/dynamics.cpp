#include "jshapes/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "jshapes/error.hpp"

namespace jshapes {

std::string_view to_string(OrbitStatus status) {
  switch (status) {
    case OrbitStatus::kInteriorCaptured: return "INTERIOR_CAPTURED";
    case OrbitStatus::kEscaped: return "ESCAPED";
    case OrbitStatus::kUndecided: return "UNDECIDED";
  }
  return "UNKNOWN";
}

OrbitResult iterate(const DynamicalMap& map, Complex z0, double escape_radius, double capture_radius,
                    std::size_t max_iter) {
  if (!(capture_radius > 0.0) || !(escape_radius > capture_radius)) {
    throw Error(ErrorCode::kInvalidArgument, "need escape_radius > capture_radius > 0");
  }
  const double log_escape = std::log2(escape_radius);
  const double log_capture = std::log2(capture_radius);
  ScaledComplex w(z0 - map.center());
  OrbitResult result;
  for (std::size_t m = 0;; ++m) {
    result.iterations = m;
    result.final_magnitude_exponent = w.exponent();
    if (!w.is_finite()) {
      result.status = OrbitStatus::kUndecided;
      return result;
    }
    const double mag = w.log2_abs();
    if (mag < log_capture) {
      result.status = OrbitStatus::kInteriorCaptured;
      return result;
    }
    if (mag > log_escape) {
      result.status = OrbitStatus::kEscaped;
      return result;
    }
    if (m == max_iter) break;
    w = map.step(w);
  }
  result.status = OrbitStatus::kUndecided;
  return result;
}

EscapeCertificate certify(const ShapePolynomial& poly, const AnnulusSpec& annulus,
                          const CertifyOptions& options) {
  const AnnulusSpec local = annulus.translated(-poly.t);
  if (local.inner.region(0.0) != RegionLabel::kBoundedInside) {
    throw Error(ErrorCode::kSamplingFailure, "translation point is not inside the inner curve");
  }
  EscapeCertificate cert;
  for (const Complex p : local.inner.points()) cert.alpha = std::max(cert.alpha, std::abs(p));
  for (const Complex p : local.outer.points()) cert.beta = std::max(cert.beta, std::abs(p));
  cert.gamma_inf = local.outer.distance(0.0);
  cert.K_bound = std::max(1.0, cert.beta / cert.gamma_inf);
  cert.kappa = 2.0 * cert.K_bound;
  cert.r_inner = std::min(0.5 * cert.gamma_inf, local.inner.distance(0.0));
  cert.n_certified = poly.n;

  // |P| is largest on the boundary of the inside region, so boundary points
  // are sampled together with random interior points.
  std::vector<Complex> inside = local.inner.arclength_samples(options.samples_per_region);
  const auto interior = interior_samples(local.inner, options.samples_per_region, options.seed);
  inside.insert(inside.end(), interior.begin(), interior.end());
  for (const Complex z : inside) {
    cert.inside_max = std::max(cert.inside_max, std::abs(eval_P(poly, z, Frame::kTranslated).to_complex()));
  }
  cert.inside_samples = inside.size();

  const auto outside = local.outer.arclength_samples(options.samples_per_region);
  cert.outside_min_ratio = std::numeric_limits<double>::infinity();
  for (const Complex z : outside) {
    const ScaledComplex value = eval_P(poly, ScaledComplex(z));
    const double ratio = std::exp2(std::min(value.log2_abs() - std::log2(std::abs(z)), 1000.0));
    cert.outside_min_ratio = std::min(cert.outside_min_ratio, ratio);
  }
  cert.outside_samples = outside.size();
  cert.pass = cert.inside_max < cert.r_inner && cert.outside_min_ratio > cert.kappa &&
              cert.kappa * cert.gamma_inf > cert.beta;
  return cert;
}

DegreeSearch find_min_degree(const std::function<ShapePolynomial(std::size_t)>& build,
                             const AnnulusSpec& annulus, std::span<const std::size_t> schedule,
                             const CertifyOptions& options) {
  std::ostringstream margins;
  std::size_t previous = 0;
  for (const std::size_t n : schedule) {
    if (n <= previous) throw Error(ErrorCode::kInvalidArgument, "degree schedule must increase");
    previous = n;
    ShapePolynomial poly = build(n);
    EscapeCertificate cert = certify(poly, annulus, options);
    if (cert.pass) return {std::move(poly), cert};
    margins << " n=" << n << ": inside_max/r_inner=" << cert.inside_max / cert.r_inner
            << ", outside_min_ratio/kappa=" << cert.outside_min_ratio / cert.kappa << ";";
  }
  throw Error(ErrorCode::kNoDegreeFound, "no degree in the schedule passed." + margins.str());
}

GrowthCheck check_growth(const DynamicalMap& map, std::span<const Complex> points, double factor,
                         int depth) {
  GrowthCheck out;
  const double log_factor = std::log2(factor);
  for (const Complex z : points) {
    ScaledComplex w(z - map.center());
    const double base = w.log2_abs();
    for (int m = 1; m <= depth; ++m) {
      w = map.step(w);
      const double margin = w.is_finite() ? w.log2_abs() - (m * log_factor + base)
                                          : -std::numeric_limits<double>::infinity();
      out.worst_margin_log2 = std::min(out.worst_margin_log2, margin);
      if (!(margin > 0.0)) out.pass = false;
    }
    ++out.points;
  }
  return out;
}

}  // namespace jshapes
