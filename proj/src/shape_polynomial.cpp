#include "jshapes/shape_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "jshapes/error.hpp"

namespace jshapes {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

Complex root_point(std::size_t k, std::size_t n, double radius) {
  return std::polar(radius, kTwoPi * static_cast<double>(k % n) / static_cast<double>(n));
}

void check_distinct(std::span<const Complex> roots) {
  double scale = 0.0;
  for (const Complex r : roots) scale = std::max(scale, std::abs(r));
  const double tol = 1e-12 * std::max(scale, 1e-300);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) <= tol) {
        throw Error(ErrorCode::kDuplicateRoots,
                    "roots " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
}

}  // namespace

double select_epsilon(const ExteriorMap& map, const AnnulusSpec& annulus, const EpsilonOptions& options) {
  const Complex t = map.translation();
  for (int level = 1; level <= options.max_level; ++level) {
    const double radius = 1.0 + std::ldexp(1.0, -level);
    bool inside = true;
    for (std::size_t j = 0; j < options.samples && inside; ++j) {
      inside = annulus.strictly_between(map.evaluate(root_point(j, options.samples, radius)) + t);
    }
    if (inside) return std::ldexp(1.0, -level);
  }
  throw Error(ErrorCode::kNoEpsilon, "no epsilon down to 2^-" + std::to_string(options.max_level) +
                                         " keeps the inflated curve inside the annulus");
}

ShapePolynomial sample_roots(const ExteriorMap& map, double epsilon, std::size_t n) {
  if (n < 8) throw Error(ErrorCode::kInvalidArgument, "n must be at least 8");
  if (!(epsilon > 0.0)) throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  ShapePolynomial poly;
  poly.n = n;
  poly.epsilon = epsilon;
  poly.t = map.translation();
  poly.capacity = (1.0 + epsilon) * map.capacity();
  poly.roots.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    poly.roots.push_back(evaluate_map(map, root_point(k, n, 1.0 + epsilon)));
  }
  check_distinct(poly.roots);
  return poly;
}

void validate(const ShapePolynomial& poly, const AnnulusSpec* annulus) {
  if (poly.n < 8 || poly.roots.size() != poly.n) {
    throw Error(ErrorCode::kInvalidArgument, "root count does not match n (or n < 8)");
  }
  if (!(std::abs(poly.capacity) > 0.0) || !(poly.epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "capacity and epsilon must be positive");
  }
  check_distinct(poly.roots);
  if (annulus != nullptr) {
    for (std::size_t k = 0; k < poly.roots.size(); ++k) {
      if (!annulus->strictly_between(poly.roots[k] + poly.t)) {
        throw Error(ErrorCode::kGeometryRejected,
                    "root " + std::to_string(k) + " is not strictly inside the annulus");
      }
    }
  }
}

ShapePolynomial rebase(const ShapePolynomial& poly, Complex new_t) {
  ShapePolynomial out = poly;
  out.t = new_t;
  for (auto& r : out.roots) r += poly.t - new_t;
  return out;
}

ScaledComplex eval_omega(const ShapePolynomial& poly, const ScaledComplex& z) {
  const Complex inv_c = 1.0 / poly.capacity;
  ScaledComplex acc(Complex(1.0, 0.0));
  if (z.exponent() > 900 || z.exponent() < -900) {
    for (const Complex r : poly.roots) acc *= (z - ScaledComplex(r)) * inv_c;
  } else {
    const Complex zc = z.to_complex();
    for (const Complex r : poly.roots) acc *= (zc - r) * inv_c;
  }
  return acc;
}

ScaledComplex eval_omega(const ShapePolynomial& poly, Complex z, Frame frame) {
  return eval_omega(poly, ScaledComplex(frame == Frame::kOriginal ? z - poly.t : z));
}

ScaledComplex eval_P(const ShapePolynomial& poly, const ScaledComplex& z) {
  return z * (eval_omega(poly, z) + ScaledComplex(Complex(1.0, 0.0)));
}

Evaluation eval_P(const ShapePolynomial& poly, Complex z, Frame frame) {
  Evaluation out;
  if (frame == Frame::kOriginal) {
    out.value = eval_P(poly, ScaledComplex(z - poly.t)) + ScaledComplex(poly.t);
  } else {
    out.value = eval_P(poly, ScaledComplex(z));
  }
  out.escaped_large = out.value.exponent() > kExpCap;
  return out;
}

}  // namespace jshapes
