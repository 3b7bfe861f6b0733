#include "jshapes/render.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

#include "jshapes/error.hpp"
#include "jshapes/hausdorff.hpp"

namespace jshapes {
namespace {

constexpr std::size_t kTileRows = 16;

bool is_captured(const Cell& c) { return c.status == OrbitStatus::kInteriorCaptured; }
bool is_escaped(const Cell& c) { return c.status == OrbitStatus::kEscaped; }

}  // namespace

BoundingBox default_bbox(std::span<const JordanCurve> curves, double delta) {
  if (curves.empty()) throw Error(ErrorCode::kInvalidArgument, "no curves to frame");
  BoundingBox box = curves.front().bounds();
  for (const auto& c : curves) {
    const BoundingBox b = c.bounds();
    box.min = {std::min(box.min.real(), b.min.real()), std::min(box.min.imag(), b.min.imag())};
    box.max = {std::max(box.max.real(), b.max.real()), std::max(box.max.imag(), b.max.imag())};
  }
  const double size = std::max(box.width(), box.height());
  const double half = 0.5 * size + std::max(0.15 * size, 1.25 * std::max(delta, 0.0));
  const Complex c = box.center();
  return {c - Complex(half, half), c + Complex(half, half)};
}

EscapeField render(const DynamicalMap& map, const BoundingBox& bbox, std::size_t width,
                   std::size_t height, const IterateParams& params, unsigned threads) {
  if (width < 16 || height < 16) throw Error(ErrorCode::kInvalidArgument, "grid must be at least 16x16");
  if (!(params.capture_radius > 0.0) || !(params.escape_radius > params.capture_radius)) {
    throw Error(ErrorCode::kInvalidArgument, "need escape_radius > capture_radius > 0");
  }
  EscapeField field;
  field.bbox = bbox;
  field.width = width;
  field.height = height;
  field.cells.resize(width * height);

  const std::size_t tiles = (height + kTileRows - 1) / kTileRows;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t tile = next++; tile < tiles; tile = next++) {
      const std::size_t y_end = std::min(height, (tile + 1) * kTileRows);
      for (std::size_t y = tile * kTileRows; y < y_end; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
          const OrbitResult orbit = iterate(map, field.pixel_center(x, y), params.escape_radius,
                                            params.capture_radius, params.max_iter);
          field.at(x, y) = {orbit.status, static_cast<std::uint32_t>(orbit.iterations)};
        }
      }
    }
  };
  unsigned count = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::size_t>(count, tiles));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  return field;
}

std::vector<bool> boundary_mask(const EscapeField& field) {
  const long w = static_cast<long>(field.width);
  const long h = static_cast<long>(field.height);
  std::vector<bool> mask(field.cells.size(), false);
  for (long y = 0; y < h; ++y) {
    for (long x = 0; x < w; ++x) {
      const Cell& c = field.at(x, y);
      if (c.status == OrbitStatus::kUndecided) {
        mask[y * w + x] = true;
        continue;
      }
      bool captured = is_captured(c);
      bool escaped = is_escaped(c);
      constexpr long kSteps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
      for (const auto& s : kSteps) {
        const long nx = x + s[0];
        const long ny = y + s[1];
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
        captured = captured || is_captured(field.at(nx, ny));
        escaped = escaped || is_escaped(field.at(nx, ny));
      }
      mask[y * w + x] = captured && escaped;
    }
  }
  return mask;
}

std::vector<Complex> boundary_pixels(const EscapeField& field) {
  const bool any_captured = std::any_of(field.cells.begin(), field.cells.end(), is_captured);
  const bool any_escaped = std::any_of(field.cells.begin(), field.cells.end(), is_escaped);
  if (!any_captured || !any_escaped) {
    throw Error(ErrorCode::kMonochromeField, "field lacks captured or escaped pixels");
  }
  const auto mask = boundary_mask(field);
  std::vector<Complex> out;
  for (std::size_t y = 0; y < field.height; ++y) {
    for (std::size_t x = 0; x < field.width; ++x) {
      if (mask[y * field.width + x]) out.push_back(field.pixel_center(x, y));
    }
  }
  return out;
}

VerifyReport verify_hausdorff(const EscapeField& field, std::span<const JordanCurve> curves,
                              double delta) {
  if (curves.empty()) throw Error(ErrorCode::kInvalidArgument, "no target curves");
  for (const auto& c : curves) {
    const BoundingBox need = c.bounds().expanded(std::max(delta, 0.0));
    if (!field.bbox.contains(need.min) || !field.bbox.contains(need.max)) {
      throw Error(ErrorCode::kBboxTooSmall, "render box does not contain the delta-neighborhood");
    }
  }
  const auto boundary = boundary_pixels(field);

  std::vector<Complex> inside, outside, kept, escaped;
  for (std::size_t y = 0; y < field.height; ++y) {
    for (std::size_t x = 0; x < field.width; ++x) {
      const Complex z = field.pixel_center(x, y);
      int winding = 0;
      for (const auto& c : curves) winding += c.winding_number(z) != 0 ? 1 : 0;
      (winding % 2 == 1 ? inside : outside).push_back(z);
      (is_escaped(field.at(x, y)) ? escaped : kept).push_back(z);
    }
  }
  std::vector<Complex> curve_samples;
  const double spacing = 0.25 * std::min(field.dx(), field.dy());
  for (const auto& c : curves) {
    const auto s = c.arclength_samples(
        std::max<std::size_t>(c.size(), static_cast<std::size_t>(std::ceil(c.perimeter() / spacing))));
    curve_samples.insert(curve_samples.end(), s.begin(), s.end());
  }

  VerifyReport report;
  report.delta = delta;
  report.pixel_diagonal = field.pixel_diagonal();
  report.d_K = hausdorff_distance(inside, kept);
  report.d_J = hausdorff_distance(curve_samples, boundary);
  report.d_L = hausdorff_distance(outside, escaped);
  const double limit = delta + report.pixel_diagonal;
  report.pass = delta > 0.0 && report.d_K < limit && report.d_J < limit && report.d_L < limit;
  return report;
}

std::vector<std::uint8_t> gray_levels(const EscapeField& field) {
  const auto mask = boundary_mask(field);
  std::vector<std::uint8_t> out(field.cells.size());
  for (std::size_t i = 0; i < field.cells.size(); ++i) {
    const Cell& c = field.cells[i];
    if (mask[i]) {
      out[i] = 128;
    } else if (is_escaped(c)) {
      out[i] = static_cast<std::uint8_t>(255 - std::min<std::uint32_t>(c.iterations, 126));
    } else {
      out[i] = 0;
    }
  }
  return out;
}

std::string encode_pgm(const GrayImage& image) {
  std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  out.append(image.pixels.begin(), image.pixels.end());
  return out;
}

void write_pgm(const GrayImage& image, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  const std::string bytes = encode_pgm(image);
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::string magic;
  GrayImage image;
  int maxval = 0;
  file >> magic >> image.width >> image.height >> maxval;
  if (!file || magic != "P5" || maxval != 255) {
    throw Error(ErrorCode::kParseError, "not an 8-bit binary graymap: " + path.string());
  }
  file.get();  // single whitespace after the header
  image.pixels.resize(image.width * image.height);
  file.read(reinterpret_cast<char*>(image.pixels.data()), static_cast<std::streamsize>(image.pixels.size()));
  if (file.gcount() != static_cast<std::streamsize>(image.pixels.size())) {
    throw Error(ErrorCode::kParseError, "truncated graymap: " + path.string());
  }
  return image;
}

void write_image(const EscapeField& field, const std::filesystem::path& path) {
  write_pgm(GrayImage{field.width, field.height, gray_levels(field)}, path);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char ch : bytes) {
    hash ^= static_cast<std::uint8_t>(ch);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace jshapes
