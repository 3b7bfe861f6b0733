#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "jshapes/conformal.hpp"
#include "jshapes/io.hpp"
#include "jshapes/pipeline.hpp"
#include "jshapes/scaled_complex.hpp"
#include "jshapes/shape_polynomial.hpp"

using namespace jshapes;
using testing::circle;
using testing::error_of;

TEST_CASE("scaled complex arithmetic") {
  const Complex a(3.5, -2.25), b(-0.125, 7.0);
  CHECK(std::abs((ScaledComplex(a) * ScaledComplex(b)).to_complex() - a * b) < 1e-14 * std::abs(a * b));
  CHECK(std::abs((ScaledComplex(a) + ScaledComplex(b)).to_complex() - (a + b)) < 1e-14);
  CHECK(std::abs((ScaledComplex(a) - ScaledComplex(b)).to_complex() - (a - b)) < 1e-14);
  CHECK(std::abs((ScaledComplex(a) / ScaledComplex(b)).to_complex() - a / b) < 1e-14);
  CHECK(std::abs(ScaledComplex(a).reciprocal().to_complex() - 1.0 / a) < 1e-14);
  CHECK(ScaledComplex(a).log2_abs() == doctest::Approx(std::log2(std::abs(a))));

  // Far beyond double range.
  ScaledComplex big(1.0);
  for (int i = 0; i < 1000; ++i) big *= Complex(1e3, 0);
  CHECK(big.log2_abs() == doctest::Approx(3000 * std::log2(10.0)));
  CHECK(big.is_finite());
  const ScaledComplex tiny = big.reciprocal();
  CHECK((big * tiny).log2_abs() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK((big + ScaledComplex(1.0)).log2_abs() == doctest::Approx(big.log2_abs()));
  CHECK(ScaledComplex(0.0).is_zero());
  CHECK(ScaledComplex(0.75).abs_less(1.0));
}

TEST_CASE("circle polynomial has the closed form (z/c)^n - 1") {
  const ExteriorMap map = build_exterior_map(circle(0, 1), 0);
  const double eps = 0.0625;
  const ShapePolynomial p = sample_roots(map, eps, 64);
  const double c = 1.0 + eps;
  CHECK(std::abs(p.capacity) == doctest::Approx(c).epsilon(1e-12));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const Complex z = std::polar(3 * c * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
    const Complex exact = std::pow(z / c, 64) - 1.0;
    const Complex got = eval_omega(p, z, Frame::kOriginal).to_complex();
    worst = std::max(worst, std::abs(got - exact) / std::abs(exact));
  }
  CHECK(worst < 1e-10);

  // Large n stays finite in scaled arithmetic.
  const ShapePolynomial big = sample_roots(map, eps, 512);
  const double expected = 512 * std::log2(10.0 / c);
  CHECK(eval_omega(big, Complex(10, 0), Frame::kOriginal).log2_abs() == doctest::Approx(expected).epsilon(1e-9));
  const Evaluation e = eval_P(big, Complex(1e300, 0), Frame::kOriginal);
  CHECK(e.value.is_finite());
}

TEST_CASE("roots are fixed points of P") {
  const PreparedShape shape = prepare_shape(load_curve(testing::data("blob.txt")), 0.05);
  for (std::size_t n : {64, 300}) {
    const ShapePolynomial p = shape.polynomial(n);
    CHECK(p.degree() == n + 1);
    double worst = 0;
    for (Complex r : p.roots) {
      const Complex z = r + p.t;
      const Complex pz = eval_P(p, z, Frame::kOriginal).to_complex();
      worst = std::max(worst, std::abs(pz - z) / std::abs(z));
    }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("epsilon selection and root placement") {
  const JordanCurve sq = testing::square();
  const AnnulusSpec annulus = offset_annulus(sq, 0.05);
  const ExteriorMap map = build_exterior_map(sq, {0.5, 0.5});
  const double eps = select_epsilon(map, annulus);
  CHECK(eps > 0);
  CHECK(std::log2(eps) == doctest::Approx(std::round(std::log2(eps))));
  const ShapePolynomial p = sample_roots(map, eps, 128);
  for (Complex r : p.roots) CHECK(annulus.strictly_between(r + p.t));
  validate(p, &annulus);

  // A hair-thin annulus cannot hold the root curve at any admissible level.
  EpsilonOptions few;
  few.max_level = 2;
  CHECK(error_of([&] { select_epsilon(map, offset_annulus(sq, 1e-4), few); }) == ErrorCode::kNoEpsilon);
}

TEST_CASE("polynomial invariants") {
  const ExteriorMap map = build_exterior_map(circle(0, 1), 0);
  CHECK(error_of([&] { sample_roots(map, 0.1, 4); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([&] { sample_roots(map, 0.0, 16); }) == ErrorCode::kInvalidArgument);
  ShapePolynomial p = sample_roots(map, 0.1, 16);
  p.roots[3] = p.roots[4];
  CHECK(error_of([&] { validate(p); }) == ErrorCode::kDuplicateRoots);
  const ShapePolynomial q = sample_roots(map, 0.5, 16);
  const AnnulusSpec thin = offset_annulus(circle(0, 1), 0.1);
  CHECK(error_of([&] { validate(q, &thin); }) == ErrorCode::kGeometryRejected);
}

TEST_CASE("rebasing keeps omega") {
  const PreparedShape shape = prepare_shape(load_curve(testing::data("blob.txt")), 0.05);
  const ShapePolynomial p = shape.polynomial(64);
  const ShapePolynomial q = rebase(p, {0.2, -0.1});
  for (Complex z : {Complex(0.3, 0.3), Complex(-1.1, 0.2), Complex(0.9, -0.9)}) {
    const Complex a = eval_omega(p, z, Frame::kOriginal).to_complex();
    const Complex b = eval_omega(q, z, Frame::kOriginal).to_complex();
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    // P itself moves with t: P_q(z) - P_p(z) = (p.t - q.t) omega(z).
    const Complex pa = eval_P(p, z, Frame::kOriginal).to_complex();
    const Complex pb = eval_P(q, z, Frame::kOriginal).to_complex();
    CHECK(std::abs((pb - pa) - (p.t - q.t) * a) <= 1e-9 * std::max(1.0, std::abs(pa)));
  }
}

TEST_CASE("polynomial json round trip") {
  const PreparedShape shape = prepare_shape(circle(0, 1), 0.1);
  const ShapePolynomial p = shape.polynomial(32);
  const Json j = Json::parse(to_json(p, &shape.annulus).dump());
  const ShapePolynomial back = polynomial_from_json(j);
  CHECK(back.roots == p.roots);
  CHECK(back.capacity == p.capacity);
  CHECK(polynomial_annulus_from_json(j).has_value());
  Json broken = j;
  broken["roots"].erase(0);
  CHECK(error_of([&] { polynomial_from_json(broken); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([&] { polynomial_from_json(Json{{"n", 3}}); }) == ErrorCode::kParseError);
}
