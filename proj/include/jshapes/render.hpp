#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "jshapes/curve.hpp"
#include "jshapes/dynamics.hpp"

namespace jshapes {

struct Cell {
  OrbitStatus status = OrbitStatus::kUndecided;
  std::uint32_t iterations = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Per-pixel orbit classification over a rectangle. Pixel (x, y) has its
/// center at bbox.min.real() + (x + 0.5) * dx and bbox.max.imag() - (y + 0.5) *
/// dy, so row 0 is the top of the image.
struct EscapeField {
  BoundingBox bbox;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Cell> cells;  // row-major

  const Cell& at(std::size_t x, std::size_t y) const { return cells[y * width + x]; }
  Cell& at(std::size_t x, std::size_t y) { return cells[y * width + x]; }
  double dx() const { return bbox.width() / static_cast<double>(width); }
  double dy() const { return bbox.height() / static_cast<double>(height); }
  Complex pixel_center(std::size_t x, std::size_t y) const {
    return {bbox.min.real() + (static_cast<double>(x) + 0.5) * dx(),
            bbox.max.imag() - (static_cast<double>(y) + 0.5) * dy()};
  }
  double pixel_diagonal() const { return std::hypot(dx(), dy()); }
};

struct IterateParams {
  double escape_radius = 0.0;
  double capture_radius = 0.0;
  std::size_t max_iter = 200;
};

// Square box around the curves with a margin of max(15% of their extent,
// 1.25 * delta) on every side.
BoundingBox default_bbox(std::span<const JordanCurve> curves, double delta);

// Classifies every pixel center with iterate(). Work is handed out in tiles of
// 16 rows; `threads` = 0 uses the hardware concurrency. The result does not
// depend on the thread count.
EscapeField render(const DynamicalMap& map, const BoundingBox& bbox, std::size_t width,
                   std::size_t height, const IterateParams& params, unsigned threads = 0);

// Per-pixel boundary flag: UNDECIDED, or a 4-neighborhood (pixel included)
// holding both captured and escaped pixels.
std::vector<bool> boundary_mask(const EscapeField& field);

// Centers of boundary pixels. Throws MONOCHROME_FIELD when the field lacks
// either captured or escaped pixels.
std::vector<Complex> boundary_pixels(const EscapeField& field);

struct VerifyReport {
  double d_K = 0.0;  // inside region vs non-escaping pixels
  double d_J = 0.0;  // curves vs boundary pixels
  double d_L = 0.0;  // outside region vs escaping pixels (clipped to the box)
  double delta = 0.0;
  double pixel_diagonal = 0.0;
  bool pass = false;
};

// Inside means odd total winding over `curves`, which covers both disjoint
// curves and an annulus given as outer and inner curve. PASS iff delta > 0 and
// every distance is below delta plus one pixel diagonal. Throws BBOX_TOO_SMALL
// and MONOCHROME_FIELD.
VerifyReport verify_hausdorff(const EscapeField& field, std::span<const JordanCurve> curves,
                              double delta);

// Gray levels: captured 0, boundary 128, escaped 255 - min(iterations, 126).
std::vector<std::uint8_t> gray_levels(const EscapeField& field);

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;
};

std::string encode_pgm(const GrayImage& image);
void write_pgm(const GrayImage& image, const std::filesystem::path& path);  // IO_ERROR
GrayImage read_pgm(const std::filesystem::path& path);                      // IO_ERROR, PARSE_ERROR
void write_image(const EscapeField& field, const std::filesystem::path& path);

// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace jshapes
