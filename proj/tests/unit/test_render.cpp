#include <cstdio>

#include "doctest.h"
#include "helpers.hpp"
#include "jshapes/io.hpp"
#include "jshapes/render.hpp"

using namespace jshapes;
using testing::circle;
using testing::error_of;

namespace {

// P(z) = z^{n+1}: roots at the n-th roots of unity, capacity 1. Its Julia set
// is the unit circle.
ShapePolynomial power_map(std::size_t n) {
  ShapePolynomial p;
  p.n = n;
  p.epsilon = 0.0625;
  p.capacity = 1.0;
  for (std::size_t k = 1; k <= n; ++k) p.roots.push_back(std::polar(1.0, 2 * std::numbers::pi * k / n));
  return p;
}

EscapeField small_field(const std::vector<OrbitStatus>& statuses, std::size_t w) {
  EscapeField f;
  f.bbox = {Complex(0, 0), Complex(1, 1)};
  f.width = w;
  f.height = statuses.size() / w;
  for (OrbitStatus s : statuses) f.cells.push_back({s, s == OrbitStatus::kEscaped ? 3u : 0u});
  return f;
}

}  // namespace

TEST_CASE("fnv1a reference values") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("boundary mask and gray levels") {
  using S = OrbitStatus;
  const auto C = S::kInteriorCaptured, E = S::kEscaped, U = S::kUndecided;
  const EscapeField f = small_field({C, C, E, E,  //
                                     C, C, E, E,  //
                                     C, U, E, E},
                                    4);
  const auto mask = boundary_mask(f);
  const std::vector<bool> expected{false, true, true, false,  //
                                   false, true, true, false,  //
                                   false, true, false, false};
  CHECK(mask == expected);
  const auto g = gray_levels(f);
  CHECK(g[0] == 0);
  CHECK(g[1] == 128);
  CHECK(g[3] == 252);
  CHECK(boundary_pixels(f).size() == 5);
  CHECK(error_of([] { boundary_pixels(small_field(std::vector<OrbitStatus>(16, OrbitStatus::kEscaped), 4)); }) ==
        ErrorCode::kMonochromeField);
}

TEST_CASE("pgm round trip") {
  const auto dir = testing::scratch_dir("pgm");
  GrayImage img{5, 3, {}};
  for (int i = 0; i < 15; ++i) img.pixels.push_back(static_cast<std::uint8_t>(i * 17));
  write_pgm(img, dir / "a.pgm");
  const GrayImage back = read_pgm(dir / "a.pgm");
  CHECK(back.width == 5);
  CHECK(back.height == 3);
  CHECK(back.pixels == img.pixels);
  CHECK(encode_pgm(img).rfind("P5\n5 3\n255\n", 0) == 0);
  CHECK(error_of([&] { read_pgm(dir / "missing.pgm"); }) == ErrorCode::kIoError);
  std::FILE* f = std::fopen((dir / "bad.pgm").c_str(), "w");
  std::fputs("P2\n1 1\n255\n0\n", f);
  std::fclose(f);
  CHECK(error_of([&] { read_pgm(dir / "bad.pgm"); }) == ErrorCode::kParseError);
}

TEST_CASE("render is deterministic across thread counts") {
  const PolynomialMap P(power_map(64));
  const BoundingBox box{Complex(-1.5, -1.5), Complex(1.5, 1.5)};
  const IterateParams params{1.25, 0.5, 100};
  const EscapeField one = render(P, box, 96, 80, params, 1);
  const EscapeField three = render(P, box, 96, 80, params, 3);
  CHECK(one.cells == three.cells);
  CHECK(one.width == 96);
  CHECK(one.height == 80);
  // Row 0 is the top edge.
  CHECK(one.pixel_center(0, 0).imag() > one.pixel_center(0, 79).imag());
  CHECK(error_of([&] { render(P, box, 8, 8, params); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([&] { render(P, box, 32, 32, {0.5, 1.0, 10}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("pinned circle checksum") {
  const PolynomialMap P(power_map(64));
  const EscapeField f = render(P, {Complex(-1.5, -1.5), Complex(1.5, 1.5)}, 64, 64, {1.25, 0.5, 200});
  const std::string pgm = encode_pgm({f.width, f.height, gray_levels(f)});
  CHECK(fnv1a(pgm) == 0xeac5ec4551441234ULL);
}

TEST_CASE("hausdorff verification of z^65") {
  const PolynomialMap P(power_map(64));
  const std::vector<JordanCurve> target{circle(0, 1)};
  const double delta = 0.1;
  const EscapeField f = render(P, default_bbox(target, delta), 256, 256, {1.25, 0.5, 200});
  const VerifyReport r = verify_hausdorff(f, target, delta);
  CHECK(r.pass);
  CHECK(r.d_J < r.pixel_diagonal);
  CHECK(r.d_K < r.pixel_diagonal);
  CHECK(r.d_L < r.pixel_diagonal);

  CHECK_FALSE(verify_hausdorff(f, target, 0.0).pass);
  const std::vector<JordanCurve> wrong{circle(0, 0.6)};
  CHECK_FALSE(verify_hausdorff(f, wrong, delta).pass);
  const std::vector<JordanCurve> huge{circle(0, 3)};
  CHECK(error_of([&] { verify_hausdorff(f, huge, delta); }) == ErrorCode::kBboxTooSmall);

  const EscapeField back = field_from_json(Json::parse(to_json(f).dump()));
  CHECK(back.cells == f.cells);
  CHECK(back.bbox.min == f.bbox.min);
}
