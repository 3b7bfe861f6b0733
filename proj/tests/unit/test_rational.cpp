#include "doctest.h"
#include "helpers.hpp"
#include "jshapes/io.hpp"
#include "jshapes/pipeline.hpp"
#include "jshapes/rational.hpp"

using namespace jshapes;
using testing::circle;
using testing::error_of;

TEST_CASE("single shape system is the polynomial") {
  const PreparedShape s = prepare_shape(load_curve(testing::data("blob.txt")), 0.05);
  const ShapePolynomial p = s.polynomial(64);
  const MultiShapeSystem sys = make_system({p}, {s.annulus}, s.t);
  for (Complex z : {Complex(0.3, 0.2), Complex(-1.2, 0.1), Complex(0.8, 1.0), Complex(2, -2)}) {
    const Complex r = eval_R(sys, z, Frame::kOriginal).to_complex();
    const Complex q = eval_P(p, z, Frame::kOriginal).to_complex();
    CHECK(std::abs(r - q) <= 1e-12 * std::abs(q));
  }
}

TEST_CASE("two circle geometry") {
  const std::vector<JordanCurve> curves{circle(-2.5, 1), circle(2.5, 1)};
  const PreparedSystem ps = prepare_system(curves, 0.075);
  CHECK(ps.t == ps.shapes[0].t);
  const MultiShapeSystem sys = ps.system(16);
  CHECK(sys.n() == 16);
  const SystemGeometry g = system_geometry(sys);
  // Offsets are circles of radius 0.925 and 1.075 about -2.5 and 2.5; t = -2.5.
  CHECK(g.rho == doctest::Approx(0.925).epsilon(1e-3));
  CHECK(g.sup_inside == doctest::Approx(5.925).epsilon(1e-3));
  CHECK(g.inf_outside == doctest::Approx(1.075).epsilon(1e-3));
  CHECK(g.sup_bounded == doctest::Approx(6.075).epsilon(1e-3));
  const auto [b, B] = default_bounds(g);
  CHECK(b == doctest::Approx(0.5 * 0.925 / 5.925).epsilon(1e-3));
  CHECK(B == doctest::Approx(2 * 6.075 / 1.075).epsilon(1e-3));
  CHECK_FALSE(certify_multi(sys, b, B).pass);
  CHECK(error_of([&] { certify_multi(sys, B, b); }) == ErrorCode::kGeometryRejected);

  const MultiShapeSystem back = system_from_json(Json::parse(to_json(sys).dump()));
  const Complex z(0.4, 0.3);
  CHECK(eval_R(back, z, Frame::kOriginal).to_complex() == eval_R(sys, z, Frame::kOriginal).to_complex());
}

TEST_CASE("system preconditions") {
  const std::vector<JordanCurve> overlapping{circle(0, 1), circle(1.5, 1)};
  CHECK(error_of([&] { prepare_system(overlapping, 0.05); }) == ErrorCode::kNotMutuallyExterior);
  const std::vector<JordanCurve> apart{circle(-2.5, 1), circle(2.5, 1)};
  CHECK(error_of([&] { prepare_system(apart, 0.05, Complex(0, 0)); }) == ErrorCode::kBadBasepoint);
  std::vector<AnnulusSpec> annuli{offset_annulus(apart[0], 0.05), offset_annulus(apart[1], 0.05)};
  CHECK(mutually_exterior(annuli));
  annuli[1] = offset_annulus(circle(-2.5, 0.5), 0.05);
  CHECK_FALSE(mutually_exterior(annuli));
}

TEST_CASE("rational map is indeterminate only where a term vanishes") {
  const std::vector<JordanCurve> curves{circle(-2.5, 1), circle(2.5, 1)};
  const MultiShapeSystem sys = prepare_system(curves, 0.075).system(16);
  const RationalMap R(sys);
  const ScaledComplex w = R.step(ScaledComplex(Complex(0.1, 0.2)));
  CHECK(w.is_finite());
  CHECK(std::abs(R.center() - sys.t) == 0.0);
}

TEST_CASE("annulus system setup") {
  const JordanCurve outer = circle(0, 2), inner = circle(0, 1);
  CHECK(error_of([&] { prepare_annulus(outer, inner, 0.3, Complex(0.2, 0)); }) == ErrorCode::kBadBasepoint);
  CHECK(error_of([&] { prepare_annulus(inner, outer, 0.3); }) == ErrorCode::kGeometryRejected);
  CHECK(error_of([&] { prepare_annulus(outer, inner, 0.0); }) == ErrorCode::kInvalidArgument);

  const PreparedAnnulus pa = prepare_annulus(outer, inner, 0.3, Complex(1.5, 0));
  CHECK(pa.xi == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(pa.delta1 == doctest::Approx(0.1).epsilon(1e-3));
  const AnnulusSystem sys = pa.system(16);
  const AnnulusCertificate cert = certify_S(sys);
  // r is half the clearance of t = 1.5 from the middle region's boundary.
  CHECK(cert.r == doctest::Approx(0.2).epsilon(1e-3));
  CHECK(cert.R > 3.5);

  const AnnulusSystem back = annulus_system_from_json(Json::parse(to_json(sys).dump()));
  const Complex z(0.0, 1.5);
  CHECK(eval_S(back, z, Frame::kOriginal).to_complex() == eval_S(sys, z, Frame::kOriginal).to_complex());

  // Without t the max-clearance point of the middle region is used.
  const PreparedAnnulus auto_t = prepare_annulus(outer, inner, 0.3);
  CHECK(std::abs(auto_t.t) == doctest::Approx(1.5).epsilon(0.02));
}
