#include "jshapes/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jshapes/error.hpp"

namespace jshapes {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr Complex kI(0.0, 1.0);

// Square root whose real part has the sign of `re_hint`; with no hint, the
// root in the closed upper half plane.
Complex signed_root(Complex x, double re_hint) {
  Complex r = std::sqrt(x);
  if (r.real() * re_hint < 0.0) r = -r;
  if ((re_hint == 0.0 || r.real() == 0.0) && r.imag() < 0.0) r = -r;
  return r;
}

// Projection onto the closed upper half plane (with +0 imaginary part).
Complex clamp_upper(Complex z) {
  if (!(z.imag() > 0.0)) z.imag(0.0);
  return z;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct Slit {
  double b;  // pole of the straightening Moebius map (infinite when Re a = 0)
  double c;  // height of the straightened slit
  explicit Slit(Complex a)
      : b(a.real() == 0.0 ? std::numeric_limits<double>::infinity() : std::norm(a) / a.real()),
        c(std::norm(a) / a.imag()) {}

  Complex unzip(Complex z) const {
    const Complex u = std::isinf(b) ? z : z / (1.0 - z / b);
    return signed_root(u * u + c * c, u.real());
  }
  Complex zip(Complex w) const {
    w = clamp_upper(w);
    const Complex u = signed_root(w * w - c * c, w.real());
    return std::isinf(b) ? u : u / (1.0 + u / b);
  }
  // Image of a real boundary value (nullopt = infinity).
  std::optional<double> unzip_real(std::optional<double> x) const {
    double u;
    if (!x) {
      if (std::isinf(b)) return std::nullopt;
      u = -b;
    } else {
      if (!std::isinf(b) && *x == b) {
        u = std::numeric_limits<double>::infinity();
        return std::nullopt;
      }
      u = std::isinf(b) ? *x : *x / (1.0 - *x / b);
    }
    const double r = std::sqrt(u * u + c * c);
    return u < 0 ? -r : r;
  }
};

}  // namespace

GeodesicZipper::GeodesicZipper(std::span<const Complex> boundary, Complex basepoint) {
  const std::size_t n = boundary.size();
  if (n < 3) throw Error(ErrorCode::kMapDiverged, "zipper needs at least three points");
  state_.z0 = boundary[0];
  state_.z1 = boundary[1];
  const Complex z0 = state_.z0, z1 = state_.z1;
  // The arc z0 -> z1 is taken on the circle through z0, z1, z2; the rotation
  // sends that circle onto R with z2 on the positive side.
  const Complex m2 = (boundary[2] - z1) / (boundary[2] - z0);
  state_.first_rotation = std::abs(m2) / m2;
  auto open_first = [&](Complex z) {
    return kI * std::sqrt((z - z1) / (z - z0) * state_.first_rotation);
  };

  std::vector<Complex> zeta(n);
  for (std::size_t j = 2; j < n; ++j) zeta[j] = open_first(boundary[j]);
  Complex base = open_first(basepoint);
  std::optional<double> last;  // z0 sits at infinity after the first map
  state_.slits.reserve(n - 2);
  for (std::size_t k = 2; k < n; ++k) {
    Complex a = zeta[k];
    const double scale = std::abs(a);
    if (!finite(a) || a.imag() < -1e-10 * scale) {
      throw Error(ErrorCode::kMapDiverged,
                  "boundary point " + std::to_string(k) + " left the upper half plane");
    }
    a.imag(std::max(a.imag(), 1e-300 + 1e-15 * scale));
    state_.slits.push_back(a);
    const Slit slit(a);
    for (std::size_t j = k + 1; j < n; ++j) zeta[j] = slit.unzip(zeta[j]);
    base = slit.unzip(base);
    last = slit.unzip_real(last);
  }
  state_.last = last;
  const Complex v = last ? base / (1.0 - base / *last) : base;
  state_.fold_sign = (v * v).imag() >= 0 ? 1.0 : -1.0;
  state_.basepoint_image = state_.fold_sign * v * v;
  if (!finite(state_.basepoint_image) || state_.basepoint_image.imag() <= 0) {
    throw Error(ErrorCode::kMapDiverged, "basepoint image is degenerate");
  }
}

Complex GeodesicZipper::to_half_plane(Complex z) const {
  Complex w = kI * std::sqrt((z - state_.z1) / (z - state_.z0) * state_.first_rotation);
  for (const Complex a : state_.slits) w = Slit(a).unzip(w);
  const Complex v = state_.last ? w / (1.0 - w / *state_.last) : w;
  return state_.fold_sign * v * v;
}

Complex GeodesicZipper::from_half_plane(Complex w) const {
  w = clamp_upper(w);
  // Quadrant I (fold_sign +1) or quadrant II (fold_sign -1) square root.
  Complex v = std::sqrt(state_.fold_sign * w);
  if (state_.fold_sign < 0) v = -v;
  v = clamp_upper(v);
  Complex u = state_.last ? v / (1.0 + v / *state_.last) : v;
  for (auto it = state_.slits.rbegin(); it != state_.slits.rend(); ++it) u = Slit(*it).zip(u);
  u = clamp_upper(u);
  const Complex q = -u * u / state_.first_rotation;
  return (state_.z1 - q * state_.z0) / (1.0 - q);
}

Complex GeodesicZipper::forward(Complex z) const {
  if (z == state_.z0) return 1.0;
  const Complex w = to_half_plane(z);
  const Complex w0 = state_.basepoint_image;
  return (w - w0) / (w - std::conj(w0));
}

Complex GeodesicZipper::inverse(Complex zeta) const {
  if (zeta == Complex(1.0, 0.0)) return state_.z0;
  const Complex w0 = state_.basepoint_image;
  return from_half_plane((w0 - zeta * std::conj(w0)) / (1.0 - zeta));
}

ExteriorMap::ExteriorMap(GeodesicZipper zipper, Complex translation, std::vector<Complex> source_curve)
    : zipper_(std::move(zipper)), translation_(translation), source_(std::move(source_curve)) {}

Complex ExteriorMap::evaluate(Complex w) const {
  Complex zeta = 1.0 / w;
  const double r = std::abs(zeta);
  if (r > 1.0) zeta /= r;
  return 1.0 / zipper_.inverse(zeta);
}

Complex evaluate_map(const ExteriorMap& map, Complex w) {
  constexpr double kTol = 1e-9;
  if (!(std::abs(w) >= 1.0 - kTol)) {
    throw Error(ErrorCode::kOutOfDomain, "|w| < 1 is outside the exterior map domain");
  }
  return map.evaluate(w);
}

namespace {

std::vector<Complex> dft_coefficients(const ExteriorMap& map, std::size_t m, double rho,
                                      std::size_t samples) {
  std::vector<Complex> values(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    values[j] = map.evaluate(std::polar(rho, kTwoPi * static_cast<double>(j) / samples));
  }
  std::vector<Complex> coeffs(m);
  const double inv_n = 1.0 / static_cast<double>(samples);
  for (std::size_t idx = 0; idx < m; ++idx) {
    // idx 0 -> power +1; idx >= 1 -> power -(idx - 1).
    const long power = idx == 0 ? 1 : -static_cast<long>(idx - 1);
    Complex sum = 0.0;
    for (std::size_t j = 0; j < samples; ++j) {
      const double angle = -kTwoPi * static_cast<double>((static_cast<long>(j) * power) %
                                                         static_cast<long>(samples)) *
                           inv_n;
      sum += values[j] * std::polar(1.0, angle);
    }
    coeffs[idx] = sum * inv_n * std::pow(rho, -static_cast<double>(power));
  }
  return coeffs;
}

// Uniform arclength nodes plus nodes graded geometrically toward corners,
// where geodesic arcs between uniform nodes overshoot the boundary.
std::vector<Complex> zipper_nodes(const JordanCurve& curve, const MapOptions& options) {
  const std::size_t count = options.resample_points;
  const double length = curve.perimeter();
  const double h = length / static_cast<double>(count);
  std::vector<double> positions(count);
  for (std::size_t k = 0; k < count; ++k) positions[k] = h * static_cast<double>(k);

  const auto pts = curve.points();
  const auto at = curve.vertex_arclengths();
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n && options.corner_levels > 0; ++i) {
    const Complex in = pts[i] - pts[(i + n - 1) % n];
    const Complex out = pts[(i + 1) % n] - pts[i];
    if (std::abs(std::arg(out / in)) < options.corner_angle) continue;
    positions.push_back(at[i]);
    double d = h;
    for (int level = 0; level < options.corner_levels; ++level) {
      d *= 0.5;
      positions.push_back(at[i] + d);
      positions.push_back(at[i] - d);
    }
  }
  for (double& s : positions) s = std::fmod(std::fmod(s, length) + length, length);
  std::sort(positions.begin(), positions.end());
  const double min_gap = std::ldexp(h, -options.corner_levels - 2);
  std::vector<double> kept;
  kept.reserve(positions.size());
  for (const double s : positions) {
    if (kept.empty() || s - kept.back() > min_gap) kept.push_back(s);
  }
  while (kept.size() > 1 && kept.back() > length - min_gap) kept.pop_back();
  return curve.points_at(kept);
}

}  // namespace

std::vector<Complex> laurent_coefficients(const ExteriorMap& map, std::size_t m, double rho,
                                          double rel_tol) {
  if (m < 1 || !(rho > 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "need m >= 1 and rho > 1");
  }
  if (!map.boundary_samples().empty() && m > map.boundary_samples().size() / 2) {
    throw Error(ErrorCode::kInvalidArgument, "m exceeds half the boundary sample count");
  }
  const std::size_t samples = std::max<std::size_t>(1024, 4 * m);
  auto coarse = dft_coefficients(map, m, rho, samples);
  const auto check = dft_coefficients(map, m, 2.0 * rho, samples);
  // Compare the two expansions term by term on |w| = 2 rho.
  const double outer = 2.0 * rho;
  double worst = 0.0;
  for (std::size_t idx = 0; idx < m; ++idx) {
    const double weight = idx == 0 ? outer : std::pow(outer, -static_cast<double>(idx - 1));
    worst = std::max(worst, std::abs(coarse[idx] - check[idx]) * weight);
  }
  const double scale = std::abs(coarse[0]) * outer;
  if (!(worst <= rel_tol * scale)) {
    throw Error(ErrorCode::kAliasing, "Laurent coefficients at rho and 2 rho disagree (" +
                                          std::to_string(worst / scale) + " relative)");
  }
  return coarse;
}

Complex evaluate_laurent(std::span<const Complex> coefficients, Complex w) {
  if (coefficients.empty()) return 0.0;
  // Horner in 1/w for the principal part.
  const Complex inv = 1.0 / w;
  Complex tail = 0.0;
  for (std::size_t idx = coefficients.size(); idx-- > 1;) tail = tail * inv + coefficients[idx];
  return coefficients[0] * w + tail;
}

MapQuality measure_quality(const ExteriorMap& map, std::size_t samples) {
  std::vector<Complex> image(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    image[j] = map.evaluate(std::polar(1.0, kTwoPi * static_cast<double>(j) / samples));
  }
  const auto source = map.source_curve();
  double worst = 0.0;
  for (const Complex p : image) worst = std::max(worst, distance_to_polyline(source, p));
  for (const Complex p : source) worst = std::max(worst, distance_to_polyline(image, p));

  MapQuality quality;
  quality.boundary_rmse = worst;
  quality.derivative_min = std::numeric_limits<double>::infinity();
  quality.derivative_max = 0.0;
  constexpr double kRadius = 1.0 + 1e-3;
  constexpr double kStep = 1e-7;
  for (std::size_t j = 0; j < samples; ++j) {
    const Complex dir = std::polar(1.0, kTwoPi * static_cast<double>(j) / samples);
    const Complex hi = map.evaluate(dir * (kRadius + kStep));
    const Complex lo = map.evaluate(dir * (kRadius - kStep));
    const double deriv = std::abs(hi - lo) / (2.0 * kStep);
    quality.derivative_min = std::min(quality.derivative_min, deriv);
    quality.derivative_max = std::max(quality.derivative_max, deriv);
  }
  return quality;
}

ExteriorMap build_exterior_map(const JordanCurve& curve, Complex t, const MapOptions& options) {
  if (curve.winding_number(t) == 0 || curve.distance(t) <= curve.default_tolerance()) {
    throw Error(ErrorCode::kBadBasepoint, "translation point is not inside the curve");
  }
  const JordanCurve source = options.resample ? JordanCurve(zipper_nodes(curve, options)) : curve;
  std::vector<Complex> shifted(source.points().begin(), source.points().end());
  for (auto& p : shifted) p -= t;
  // Rotation gauge: start at the point of maximal real part (then imaginary).
  const auto start = std::max_element(shifted.begin(), shifted.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  std::rotate(shifted.begin(), start, shifted.end());

  // Inversion about the basepoint turns the exterior into a bounded domain
  // around 0; the reversed order keeps that domain on the zipper's left.
  std::vector<Complex> inverted;
  inverted.reserve(shifted.size());
  inverted.push_back(1.0 / shifted[0]);
  for (std::size_t k = shifted.size(); k-- > 1;) inverted.push_back(1.0 / shifted[k]);

  ExteriorMap map(GeodesicZipper(inverted, 0.0), t, shifted);
  std::vector<std::pair<Complex, Complex>> samples;
  samples.reserve(options.boundary_sample_count);
  for (std::size_t j = 0; j < options.boundary_sample_count; ++j) {
    const Complex w = std::polar(1.0, kTwoPi * static_cast<double>(j) / options.boundary_sample_count);
    const Complex z = map.evaluate(w);
    if (!finite(z)) throw Error(ErrorCode::kMapDiverged, "non-finite boundary value");
    samples.emplace_back(w, z);
  }
  map.set_boundary_samples(std::move(samples));
  map.set_laurent(laurent_coefficients(map, options.laurent_order, options.laurent_radius,
                                       options.rel_tol_map));
  const MapQuality quality = measure_quality(map, options.quality_sample_count);
  if (!std::isfinite(quality.boundary_rmse) || !(quality.derivative_min > 0)) {
    throw Error(ErrorCode::kMapDiverged, "map failed the quality checks");
  }
  map.set_quality(quality);
  return map;
}

}  // namespace jshapes
