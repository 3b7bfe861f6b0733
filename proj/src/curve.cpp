#include "jshapes/curve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

#include "jshapes/error.hpp"

namespace jshapes {
namespace {

constexpr double kPi = 3.14159265358979323846;

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

double orient(Complex a, Complex b, Complex c) { return cross(b - a, c - a); }

int sign_of(double v) { return (v > 0) - (v < 0); }

bool on_segment(Complex a, Complex b, Complex p) {
  return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
         std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_touch(Complex p1, Complex p2, Complex q1, Complex q2) {
  const int d1 = sign_of(orient(q1, q2, p1));
  const int d2 = sign_of(orient(q1, q2, p2));
  const int d3 = sign_of(orient(p1, p2, q1));
  const int d4 = sign_of(orient(p1, p2, q2));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

// Intersection point of two touching segments (any point of the overlap when
// they are collinear).
Complex touch_point(Complex p1, Complex p2, Complex q1, Complex q2) {
  const Complex r = p2 - p1;
  const Complex s = q2 - q1;
  const double denom = cross(r, s);
  if (std::abs(denom) > 1e-300) {
    const double u = std::clamp(cross(q1 - p1, s) / denom, 0.0, 1.0);
    return p1 + u * r;
  }
  if (on_segment(p1, p2, q1)) return q1;
  if (on_segment(p1, p2, q2)) return q2;
  return p1;
}

double segment_distance(Complex a, Complex b, Complex z) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  double u = len2 > 0 ? dot(z - a, ab) / len2 : 0.0;
  u = std::clamp(u, 0.0, 1.0);
  return std::abs(z - (a + u * ab));
}

struct EdgeBox {
  double xmin, xmax, ymin, ymax;
  std::size_t curve;
  std::size_t index;
};

std::vector<EdgeBox> edge_boxes(std::span<const Complex> poly, std::size_t curve_id) {
  std::vector<EdgeBox> boxes;
  boxes.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Complex a = poly[i];
    const Complex b = poly[(i + 1) % poly.size()];
    boxes.push_back({std::min(a.real(), b.real()), std::max(a.real(), b.real()),
                     std::min(a.imag(), b.imag()), std::max(a.imag(), b.imag()), curve_id, i});
  }
  return boxes;
}

// Sweep over x-sorted edge boxes; calls visit(e, f) for overlapping pairs until
// it returns true.
template <typename Visit>
bool sweep_pairs(std::vector<EdgeBox>& boxes, Visit&& visit) {
  std::sort(boxes.begin(), boxes.end(),
            [](const EdgeBox& l, const EdgeBox& r) { return l.xmin < r.xmin; });
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size() && boxes[j].xmin <= boxes[i].xmax; ++j) {
      if (boxes[j].ymin > boxes[i].ymax || boxes[i].ymin > boxes[j].ymax) continue;
      if (visit(boxes[i], boxes[j])) return true;
    }
  }
  return false;
}

std::vector<Complex> convex_hull(std::vector<Complex> pts) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  if (pts.size() < 3) return pts;
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Complex p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

BoundingBox bounds_of(std::span<const Complex> points) {
  BoundingBox box{Complex(std::numeric_limits<double>::infinity(),
                          std::numeric_limits<double>::infinity()),
                  Complex(-std::numeric_limits<double>::infinity(),
                          -std::numeric_limits<double>::infinity())};
  for (const Complex p : points) {
    box.min = Complex(std::min(box.min.real(), p.real()), std::min(box.min.imag(), p.imag()));
    box.max = Complex(std::max(box.max.real(), p.real()), std::max(box.max.imag(), p.imag()));
  }
  return box;
}

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::kBoundedInside: return "BOUNDED_INSIDE";
    case RegionLabel::kOnAnnulus: return "ON_ANNULUS";
    case RegionLabel::kUnboundedOutside: return "UNBOUNDED_OUTSIDE";
  }
  return "UNKNOWN";
}

double signed_area(std::span<const Complex> points) {
  double twice = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    twice += cross(points[i], points[(i + 1) % points.size()]);
  }
  return 0.5 * twice;
}

int winding_number(std::span<const Complex> polygon, Complex z) {
  int winding = 0;
  Complex start = polygon.back();
  for (const Complex end : polygon) {
    if (start.imag() <= z.imag()) {
      if (end.imag() > z.imag() && orient(start, end, z) > 0) ++winding;
    } else if (end.imag() <= z.imag() && orient(start, end, z) < 0) {
      --winding;
    }
    start = end;
  }
  return winding;
}

double distance_to_polyline(std::span<const Complex> polygon, Complex z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    best = std::min(best, segment_distance(polygon[i], polygon[(i + 1) % polygon.size()], z));
  }
  return best;
}

std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(
    std::span<const Complex> polygon) {
  const std::size_t n = polygon.size();
  auto boxes = edge_boxes(polygon, 0);
  std::optional<std::pair<std::size_t, std::size_t>> found;
  sweep_pairs(boxes, [&](const EdgeBox& e, const EdgeBox& f) {
    std::size_t i = std::min(e.index, f.index);
    std::size_t j = std::max(e.index, f.index);
    const Complex p1 = polygon[i], p2 = polygon[(i + 1) % n];
    const Complex q1 = polygon[j], q2 = polygon[(j + 1) % n];
    const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
    if (adjacent) {
      // Adjacent edges share a vertex; they conflict only by folding back.
      const Complex shared = (j == i + 1) ? p2 : p1;
      const Complex u = (j == i + 1) ? p1 - shared : p2 - shared;
      const Complex v = (j == i + 1) ? q2 - shared : q1 - shared;
      if (cross(u, v) == 0.0 && dot(u, v) > 0.0) {
        found = std::make_pair(i, j);
        return true;
      }
      return false;
    }
    if (segments_touch(p1, p2, q1, q2)) {
      found = std::make_pair(i, j);
      return true;
    }
    return false;
  });
  return found;
}

bool polygons_intersect(std::span<const Complex> a, std::span<const Complex> b) {
  auto boxes = edge_boxes(a, 0);
  auto more = edge_boxes(b, 1);
  boxes.insert(boxes.end(), more.begin(), more.end());
  return sweep_pairs(boxes, [&](const EdgeBox& e, const EdgeBox& f) {
    if (e.curve == f.curve) return false;
    const auto& pe = e.curve == 0 ? a : b;
    const auto& pf = f.curve == 0 ? a : b;
    return segments_touch(pe[e.index], pe[(e.index + 1) % pe.size()], pf[f.index],
                          pf[(f.index + 1) % pf.size()]);
  });
}

JordanCurve::JordanCurve(std::vector<Complex> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  if (n < kMinPoints) {
    throw Error(ErrorCode::kTooFewPoints,
                "need at least " + std::to_string(kMinPoints) + " points, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Complex p = points_[i];
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
      throw Error(ErrorCode::kParseError, "non-finite coordinate at index " + std::to_string(i));
    }
    if (p == points_[(i + 1) % n]) {
      throw Error(ErrorCode::kNotSimple,
                  "repeated consecutive point at index " + std::to_string(i));
    }
  }
  area_ = signed_area(points_);
  if (area_ == 0.0) throw Error(ErrorCode::kNotSimple, "zero enclosed area");
  if (auto hit = find_self_intersection(points_)) {
    throw Error(ErrorCode::kNotSimple, "segments " + std::to_string(hit->first) + " and " +
                                           std::to_string(hit->second) + " intersect");
  }
  if (area_ < 0) {
    std::reverse(points_.begin(), points_.end());
    area_ = -area_;
  }
  for (std::size_t i = 0; i < n; ++i) perimeter_ += std::abs(points_[(i + 1) % n] - points_[i]);
  bounds_ = bounds_of(points_);
  const auto hull = convex_hull(points_);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      diameter_ = std::max(diameter_, std::abs(hull[i] - hull[j]));
    }
  }
}

Complex JordanCurve::centroid() const {
  Complex sum = 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Complex a = points_[i];
    const Complex b = points_[(i + 1) % points_.size()];
    const double c = cross(a, b);
    sum += (a + b) * c;
    twice += c;
  }
  return sum / (3.0 * twice);
}

int JordanCurve::winding_number(Complex z) const { return jshapes::winding_number(points_, z); }

double JordanCurve::distance(Complex z) const { return distance_to_polyline(points_, z); }

RegionLabel JordanCurve::region(Complex z, double tol_on) const {
  if (distance(z) <= tol_on) return RegionLabel::kOnAnnulus;
  return winding_number(z) != 0 ? RegionLabel::kBoundedInside : RegionLabel::kUnboundedOutside;
}

std::vector<Complex> JordanCurve::arclength_samples(std::size_t count) const {
  std::vector<double> positions(count);
  const double step = perimeter_ / static_cast<double>(count);
  for (std::size_t k = 0; k < count; ++k) positions[k] = step * static_cast<double>(k);
  return points_at(positions);
}

std::vector<Complex> JordanCurve::points_at(std::span<const double> arclengths) const {
  std::vector<Complex> out;
  out.reserve(arclengths.size());
  const std::size_t n = points_.size();
  std::size_t edge = 0;
  double edge_start = 0.0;
  double edge_len = std::abs(points_[1] - points_[0]);
  for (const double s : arclengths) {
    while (edge + 1 < n && s > edge_start + edge_len) {
      edge_start += edge_len;
      ++edge;
      edge_len = std::abs(points_[(edge + 1) % n] - points_[edge]);
    }
    const double u = edge_len > 0 ? std::clamp((s - edge_start) / edge_len, 0.0, 1.0) : 0.0;
    out.push_back(points_[edge] + u * (points_[(edge + 1) % n] - points_[edge]));
  }
  return out;
}

std::vector<double> JordanCurve::vertex_arclengths() const {
  std::vector<double> out(points_.size(), 0.0);
  for (std::size_t i = 1; i < points_.size(); ++i) {
    out[i] = out[i - 1] + std::abs(points_[i] - points_[i - 1]);
  }
  return out;
}

JordanCurve JordanCurve::resampled(std::size_t count) const {
  return JordanCurve(arclength_samples(count));
}

JordanCurve JordanCurve::translated(Complex shift) const {
  std::vector<Complex> pts(points_);
  for (auto& p : pts) p += shift;
  return JordanCurve(std::move(pts));
}

JordanCurve JordanCurve::scaled(double factor) const {
  std::vector<Complex> pts(points_);
  for (auto& p : pts) p *= factor;
  return JordanCurve(std::move(pts));
}

Complex JordanCurve::interior_point() const {
  constexpr int kGrid = 64;
  Complex best = centroid();
  double best_clearance = 0.0;
  for (int iy = 0; iy < kGrid; ++iy) {
    for (int ix = 0; ix < kGrid; ++ix) {
      const Complex z(bounds_.min.real() + (ix + 0.5) * bounds_.width() / kGrid,
                      bounds_.min.imag() + (iy + 0.5) * bounds_.height() / kGrid);
      if (winding_number(z) == 0) continue;
      const double d = distance(z);
      if (d > best_clearance) {
        best_clearance = d;
        best = z;
      }
    }
  }
  const Complex c = centroid();
  if (winding_number(c) != 0 && distance(c) >= 0.5 * best_clearance) return c;
  return best;
}

std::vector<Complex> interior_samples(const JordanCurve& curve, std::size_t count,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const BoundingBox box = curve.bounds();
  std::vector<Complex> out;
  out.reserve(count);
  const std::size_t max_attempts = 200 * count + 1000;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
    const Complex z(box.min.real() + unit() * box.width(), box.min.imag() + unit() * box.height());
    if (curve.region(z) == RegionLabel::kBoundedInside) out.push_back(z);
  }
  if (out.size() < count) {
    throw Error(ErrorCode::kSamplingFailure, "could not draw interior samples");
  }
  return out;
}

JordanCurve parse_curve(std::string_view text) {
  std::vector<Complex> pts;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      const auto doc = nlohmann::json::parse(text);
      for (const auto& p : doc.at("points")) {
        if (p.size() != 2) throw Error(ErrorCode::kParseError, "point must have two coordinates");
        pts.emplace_back(p[0].get<double>(), p[1].get<double>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::replace(line.begin(), line.end(), ',', ' ');
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream fields(line);
      double x = 0, y = 0;
      std::string extra;
      if (!(fields >> x >> y) || (fields >> extra)) {
        throw Error(ErrorCode::kParseError, "line " + std::to_string(lineno) + ": expected 'x y'");
      }
      pts.emplace_back(x, y);
    }
  }
  return JordanCurve(std::move(pts));
}

JordanCurve load_curve(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve(buf.str());
}

RegionLabel AnnulusSpec::region(Complex z) const {
  const double tol = outer.default_tolerance();
  if (outer.distance(z) <= tol || inner.distance(z) <= tol) return RegionLabel::kOnAnnulus;
  if (outer.winding_number(z) == 0) return RegionLabel::kUnboundedOutside;
  if (inner.winding_number(z) != 0) return RegionLabel::kBoundedInside;
  return RegionLabel::kOnAnnulus;
}

bool AnnulusSpec::strictly_between(Complex z) const {
  return outer.winding_number(z) != 0 && inner.winding_number(z) == 0 &&
         outer.distance(z) > outer.default_tolerance() &&
         inner.distance(z) > inner.default_tolerance();
}

AnnulusSpec AnnulusSpec::translated(Complex shift) const {
  return AnnulusSpec{outer.translated(shift), inner.translated(shift), width_hint};
}

AnnulusSpec make_annulus(JordanCurve outer, JordanCurve inner) {
  for (const Complex p : inner.points()) {
    if (outer.winding_number(p) != 1) {
      throw Error(ErrorCode::kGeometryRejected, "inner curve is not inside outer curve");
    }
  }
  if (polygons_intersect(outer.points(), inner.points())) {
    throw Error(ErrorCode::kGeometryRejected, "inner and outer curves intersect");
  }
  double width = std::numeric_limits<double>::infinity();
  for (const Complex p : inner.points()) width = std::min(width, outer.distance(p));
  return AnnulusSpec{std::move(outer), std::move(inner), width};
}

std::vector<Complex> offset_polygon(const JordanCurve& curve, double distance) {
  const auto src = curve.points();
  const std::size_t n = src.size();
  const double d = std::abs(distance);
  const double side = distance > 0 ? 1.0 : -1.0;
  constexpr double kArcStep = 5.0 * kPi / 180.0;

  // Outward unit normal of each CCW edge.
  std::vector<Complex> normal(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex e = src[(i + 1) % n] - src[i];
    normal[i] = Complex(e.imag(), -e.real()) / std::abs(e);
  }

  std::vector<Complex> raw;
  raw.reserve(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex u0 = side * normal[(i + n - 1) % n];
    const Complex u1 = side * normal[i];
    const double turn = std::atan2(cross(u0, u1), dot(u0, u1));
    // Convex side of the join: the displaced edges separate and need an arc.
    const bool arc_side = side * turn > 0;
    if (arc_side) {
      const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(turn) / kArcStep)));
      for (int k = 0; k <= steps; ++k) {
        raw.push_back(src[i] + d * u0 * std::polar(1.0, turn * k / steps));
      }
    } else {
      // Miter: intersection of the two displaced edge lines.
      const Complex miter = (u0 + u1) / (1.0 + dot(u0, u1));
      raw.push_back(src[i] + d * miter);
    }
  }

  const double tiny = 1e-12 * curve.diameter();
  auto cleanup = [&](std::vector<Complex>& pts) {
    bool changed = true;
    while (changed && pts.size() >= 3) {
      changed = false;
      std::vector<Complex> out;
      out.reserve(pts.size());
      for (const Complex p : pts) {
        if (!out.empty() && std::abs(p - out.back()) <= tiny) continue;
        out.push_back(p);
      }
      while (out.size() > 1 && std::abs(out.front() - out.back()) <= tiny) out.pop_back();
      // Drop spike tips where the polyline reverses on itself.
      for (std::size_t i = 0; out.size() >= 3 && i < out.size(); ++i) {
        const Complex a = out[(i + out.size() - 1) % out.size()];
        const Complex b = out[i];
        const Complex c = out[(i + 1) % out.size()];
        if (std::abs(cross(b - a, c - b)) <= tiny * (std::abs(b - a) + std::abs(c - b)) &&
            dot(b - a, c - b) < 0) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
      pts.swap(out);
    }
  };

  cleanup(raw);
  for (std::size_t guard = 0; guard < 4 * n + 16 && raw.size() >= 3; ++guard) {
    const auto hit = find_self_intersection(raw);
    if (!hit) break;
    const auto [i, j] = *hit;
    const std::size_t m = raw.size();
    const Complex x = touch_point(raw[i], raw[(i + 1) % m], raw[j], raw[(j + 1) % m]);
    std::vector<Complex> loop_a{x};
    for (std::size_t k = i + 1; k <= j; ++k) loop_a.push_back(raw[k]);
    std::vector<Complex> loop_b;
    for (std::size_t k = j + 1; k < m; ++k) loop_b.push_back(raw[k]);
    for (std::size_t k = 0; k <= i; ++k) loop_b.push_back(raw[k]);
    loop_b.push_back(x);
    raw = signed_area(loop_a) > signed_area(loop_b) ? std::move(loop_a) : std::move(loop_b);
    cleanup(raw);
  }
  return raw;
}

AnnulusSpec offset_annulus(const JordanCurve& curve, double eps_geom) {
  if (!(eps_geom > 0)) throw Error(ErrorCode::kInvalidArgument, "eps_geom must be positive");
  auto make_offset = [&](double signed_distance, const char* which) {
    auto pts = offset_polygon(curve, signed_distance);
    const double floor = eps_geom * (1.0 - 1e-6);
    if (pts.size() < JordanCurve::kMinPoints || signed_area(pts) <= 0) {
      throw Error(ErrorCode::kOffsetCollapse, std::string(which) + " offset vanished");
    }
    for (const Complex p : pts) {
      if (curve.distance(p) < floor) {
        throw Error(ErrorCode::kOffsetCollapse,
                    std::string(which) + " offset folds closer than eps_geom to the curve");
      }
    }
    try {
      return JordanCurve(std::move(pts));
    } catch (const Error& e) {
      throw Error(ErrorCode::kOffsetCollapse, std::string(which) + " offset: " + e.what());
    }
  };
  JordanCurve outer = make_offset(eps_geom, "outward");
  JordanCurve inner = make_offset(-eps_geom, "inward");
  try {
    AnnulusSpec annulus = make_annulus(std::move(outer), std::move(inner));
    annulus.width_hint = eps_geom;
    return annulus;
  } catch (const Error& e) {
    throw Error(ErrorCode::kOffsetCollapse, e.what());
  }
}

}  // namespace jshapes
