#include "doctest.h"
#include "helpers.hpp"
#include "jshapes/dynamics.hpp"
#include "jshapes/pipeline.hpp"

using namespace jshapes;
using testing::circle;
using testing::error_of;

namespace {

const PreparedShape& unit_circle() {
  static const PreparedShape shape = prepare_shape(circle(0, 1), 0.1);
  return shape;
}

}  // namespace

TEST_CASE("orbit classification on the circle polynomial") {
  const PreparedShape& s = unit_circle();
  const ShapePolynomial p = s.polynomial(64);
  const PolynomialMap P(p);
  const double esc = 1.5, cap = 0.5;
  CHECK(iterate(P, 0.0, esc, cap, 50).status == OrbitStatus::kInteriorCaptured);
  CHECK(iterate(P, 0.9, esc, cap, 50).status == OrbitStatus::kInteriorCaptured);
  const OrbitResult out = iterate(P, 1.2, esc, cap, 50);
  CHECK(out.status == OrbitStatus::kEscaped);
  CHECK(out.iterations >= 1);
  // A root is a fixed point on the Julia set.
  CHECK(iterate(P, p.roots[5] + p.t, esc, cap, 50).status == OrbitStatus::kUndecided);
  CHECK(error_of([&] { iterate(P, 0.0, 0.5, 0.5, 10); }) == ErrorCode::kInvalidArgument);
  CHECK(iterate(ConstantMap(5.0), 1.5, 2.0, 1.0, 10).status == OrbitStatus::kEscaped);
}

TEST_CASE("classification is translation equivariant") {
  const JordanCurve blob = load_curve(testing::data("blob.txt"));
  const Complex shift(3.25, -1.5);
  const PreparedShape a = prepare_shape(blob, 0.05, Complex(0.0, 0.0));
  const PreparedShape b = prepare_shape(blob.translated(shift), 0.05, shift);
  const PolynomialMap Pa(a.polynomial(64)), Pb(b.polynomial(64));
  for (Complex z : {Complex(0.2, 0.1), Complex(1.3, 0.0), Complex(-0.7, 0.8), Complex(1.1, 0.4)}) {
    const OrbitResult ra = iterate(Pa, z, 1.6, 0.3, 100);
    const OrbitResult rb = iterate(Pb, z + shift, 1.6, 0.3, 100);
    CHECK(ra.status == rb.status);
  }
}

TEST_CASE("escape certificate on the circle") {
  const PreparedShape& s = unit_circle();
  const EscapeCertificate low = certify(s.polynomial(8), s.annulus);
  CHECK_FALSE(low.pass);
  const EscapeCertificate high = certify(s.polynomial(64), s.annulus);
  CHECK(high.pass);
  CHECK(high.kappa == doctest::Approx(2 * high.K_bound));
  CHECK(high.inside_max < high.r_inner);
  CHECK(high.outside_min_ratio > high.kappa);
  CHECK(high.escape_radius() > high.capture_radius());
  // Same seed, same certificate.
  const EscapeCertificate again = certify(s.polynomial(64), s.annulus);
  CHECK(again.inside_max == high.inside_max);
  CHECK(again.outside_min_ratio == high.outside_min_ratio);
}

TEST_CASE("degree search") {
  const PreparedShape& s = unit_circle();
  auto build = [&](std::size_t n) { return s.polynomial(n); };
  const std::vector<std::size_t> schedule{8, 16, 32, 64, 128};
  const DegreeSearch found = find_min_degree(build, s.annulus, schedule);
  CHECK(found.certificate.pass);
  CHECK(found.polynomial.n == found.certificate.n_certified);
  // Every earlier degree failed.
  for (std::size_t n : schedule) {
    if (n >= found.polynomial.n) break;
    CHECK_FALSE(certify(s.polynomial(n), s.annulus).pass);
  }
  const std::vector<std::size_t> too_small{8, 16};
  CHECK(error_of([&] { find_min_degree(build, s.annulus, too_small); }) == ErrorCode::kNoDegreeFound);
  const std::vector<std::size_t> bad{16, 8};
  CHECK(error_of([&] { find_min_degree(build, s.annulus, bad); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("growth on the outer boundary") {
  const PreparedShape& s = unit_circle();
  const ShapePolynomial p = s.polynomial(64);
  const EscapeCertificate cert = certify(p, s.annulus);
  REQUIRE(cert.pass);
  const auto pts = s.annulus.outer.arclength_samples(200);
  const GrowthCheck g = check_growth(PolynomialMap(p), pts, cert.kappa, 5);
  CHECK(g.pass);
  CHECK(g.points == 200);
  CHECK(g.worst_margin_log2 > 0);
  // The bound is not vacuous: a huge factor fails.
  CHECK_FALSE(check_growth(PolynomialMap(p), pts, 1e6, 5).pass);
}
