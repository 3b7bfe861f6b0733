#include "jshapes/io.hpp"

#include <fstream>
#include <sstream>

#include "jshapes/error.hpp"

namespace jshapes {
namespace {

template <typename F>
auto parsing(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string(what) + ": " + e.what());
  }
}

Json complex_list(std::span<const Complex> values) {
  Json out = Json::array();
  for (const Complex z : values) out.push_back(to_json(z));
  return out;
}

std::vector<Complex> complex_list_from_json(const Json& j) {
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(complex_from_json(item));
  return out;
}

const char* status_letter(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::kInteriorCaptured: return "C";
    case OrbitStatus::kEscaped: return "E";
    case OrbitStatus::kUndecided: return "U";
  }
  return "U";
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  return parsing("complex", [&] {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::kParseError, "expected [re, im]");
    return Complex(j.at(0).get<double>(), j.at(1).get<double>());
  });
}

Json to_json(const JordanCurve& curve) { return Json{{"points", complex_list(curve.points())}}; }

JordanCurve curve_from_json(const Json& j) {
  return parsing("curve", [&] { return JordanCurve(complex_list_from_json(j.at("points"))); });
}

Json to_json(const AnnulusSpec& annulus) {
  return Json{{"outer", to_json(annulus.outer)},
              {"inner", to_json(annulus.inner)},
              {"width_hint", annulus.width_hint}};
}

AnnulusSpec annulus_from_json(const Json& j) {
  return parsing("annulus", [&] {
    AnnulusSpec a = make_annulus(curve_from_json(j.at("outer")), curve_from_json(j.at("inner")));
    a.width_hint = j.value("width_hint", 0.0);
    return a;
  });
}

Json to_json(const ExteriorMap& map) {
  const auto& st = map.zipper().state();
  Json samples = Json::array();
  for (const auto& [w, z] : map.boundary_samples()) samples.push_back(Json::array({to_json(w), to_json(z)}));
  return Json{
      {"kind", "exterior_map"},
      {"translation", to_json(map.translation())},
      {"capacity", to_json(map.capacity())},
      {"laurent", complex_list(map.laurent())},
      {"boundary_samples", samples},
      {"source_curve", complex_list(map.source_curve())},
      {"quality",
       {{"boundary_rmse", map.quality().boundary_rmse},
        {"derivative_min", map.quality().derivative_min},
        {"derivative_max", map.quality().derivative_max}}},
      {"zipper",
       {{"z0", to_json(st.z0)},
        {"z1", to_json(st.z1)},
        {"first_rotation", to_json(st.first_rotation)},
        {"slits", complex_list(st.slits)},
        {"last", st.last ? Json(*st.last) : Json(nullptr)},
        {"fold_sign", st.fold_sign},
        {"basepoint_image", to_json(st.basepoint_image)}}},
  };
}

ExteriorMap map_from_json(const Json& j) {
  return parsing("exterior map", [&] {
    const Json& zj = j.at("zipper");
    GeodesicZipper::State st;
    st.z0 = complex_from_json(zj.at("z0"));
    st.z1 = complex_from_json(zj.at("z1"));
    st.first_rotation = complex_from_json(zj.at("first_rotation"));
    st.slits = complex_list_from_json(zj.at("slits"));
    if (!zj.at("last").is_null()) st.last = zj.at("last").get<double>();
    st.fold_sign = zj.at("fold_sign").get<double>();
    st.basepoint_image = complex_from_json(zj.at("basepoint_image"));
    ExteriorMap map(GeodesicZipper::from_state(std::move(st)), complex_from_json(j.at("translation")),
                    complex_list_from_json(j.at("source_curve")));
    map.set_laurent(complex_list_from_json(j.at("laurent")));
    std::vector<std::pair<Complex, Complex>> samples;
    for (const auto& s : j.at("boundary_samples")) {
      samples.emplace_back(complex_from_json(s.at(0)), complex_from_json(s.at(1)));
    }
    map.set_boundary_samples(std::move(samples));
    const Json& q = j.at("quality");
    map.set_quality({q.at("boundary_rmse").get<double>(), q.at("derivative_min").get<double>(),
                     q.at("derivative_max").get<double>()});
    return map;
  });
}

Json to_json(const ShapePolynomial& poly, const AnnulusSpec* annulus) {
  Json out{{"kind", "polynomial"},
           {"n", poly.n},
           {"degree", poly.degree()},
           {"epsilon", poly.epsilon},
           {"t", to_json(poly.t)},
           {"capacity", to_json(poly.capacity)},
           {"roots", complex_list(poly.roots)}};
  if (annulus != nullptr) out["annulus"] = to_json(*annulus);
  return out;
}

ShapePolynomial polynomial_from_json(const Json& j) {
  return parsing("polynomial", [&] {
    ShapePolynomial poly;
    poly.n = j.at("n").get<std::size_t>();
    poly.epsilon = j.at("epsilon").get<double>();
    poly.t = complex_from_json(j.at("t"));
    poly.capacity = complex_from_json(j.at("capacity"));
    poly.roots = complex_list_from_json(j.at("roots"));
    const auto annulus = polynomial_annulus_from_json(j);
    validate(poly, annulus ? &*annulus : nullptr);
    return poly;
  });
}

std::optional<AnnulusSpec> polynomial_annulus_from_json(const Json& j) {
  if (!j.contains("annulus")) return std::nullopt;
  return annulus_from_json(j.at("annulus"));
}

Json to_json(const EscapeCertificate& c) {
  return Json{{"kind", "escape_certificate"},
              {"pass", c.pass},
              {"r_inner", c.r_inner},
              {"kappa", c.kappa},
              {"K_bound", c.K_bound},
              {"alpha", c.alpha},
              {"beta", c.beta},
              {"gamma_inf", c.gamma_inf},
              {"n_certified", c.n_certified},
              {"inside_max", c.inside_max},
              {"outside_min_ratio", c.outside_min_ratio},
              {"sample_counts", {{"inside", c.inside_samples}, {"outside", c.outside_samples}}},
              {"escape_radius", c.escape_radius()},
              {"capture_radius", c.capture_radius()}};
}

Json to_json(const MultiCertificate& c) {
  return Json{{"kind", "multi_certificate"},
              {"pass", c.pass},
              {"b", c.b},
              {"B", c.B},
              {"n", c.n},
              {"rho", c.geometry.rho},
              {"sup_inside", c.geometry.sup_inside},
              {"inf_outside", c.geometry.inf_outside},
              {"sup_bounded", c.geometry.sup_bounded},
              {"inside_max", c.inside_max},
              {"outside_min", c.outside_min},
              {"sample_counts", {{"inside", c.inside_samples}, {"outside", c.outside_samples}}},
              {"escape_radius", c.escape_radius()},
              {"capture_radius", c.capture_radius()}};
}

Json to_json(const AnnulusCertificate& c) {
  return Json{{"kind", "annulus_certificate"},
              {"pass", c.pass},
              {"r", c.r},
              {"R", c.R},
              {"eta", c.eta},
              {"kappa", c.kappa},
              {"n", c.n},
              {"middle_max", c.middle_max},
              {"outer_min", c.outer_min},
              {"inner_min", c.inner_min},
              {"outer_min_ratio", c.outer_min_ratio},
              {"sample_counts",
               {{"middle", c.middle_samples}, {"outer", c.outer_samples}, {"inner", c.inner_samples}}},
              {"escape_radius", c.escape_radius()},
              {"capture_radius", c.capture_radius()}};
}

Json to_json(const MultiShapeSystem& sys) {
  Json shapes = Json::array();
  for (std::size_t i = 0; i < sys.shapes.size(); ++i) shapes.push_back(to_json(sys.shapes[i], &sys.annuli[i]));
  return Json{{"kind", "rational"}, {"t", to_json(sys.t)}, {"n", sys.n()}, {"shapes", shapes}};
}

MultiShapeSystem system_from_json(const Json& j) {
  return parsing("rational system", [&] {
    std::vector<ShapePolynomial> shapes;
    std::vector<AnnulusSpec> annuli;
    for (const auto& s : j.at("shapes")) {
      shapes.push_back(polynomial_from_json(s));
      annuli.push_back(annulus_from_json(s.at("annulus")));
    }
    return make_system(std::move(shapes), std::move(annuli), complex_from_json(j.at("t")));
  });
}

Json to_json(const AnnulusSystem& sys) {
  return Json{{"kind", "annulus"},
              {"t", to_json(sys.t)},
              {"n", sys.n()},
              {"xi", sys.xi},
              {"outer_shape", to_json(sys.outer_shape, &sys.E)},
              {"inner_shape", to_json(sys.inner_shape, &sys.F)}};
}

AnnulusSystem annulus_system_from_json(const Json& j) {
  return parsing("annulus system", [&] {
    const Json& o = j.at("outer_shape");
    const Json& i = j.at("inner_shape");
    return make_annulus_system(polynomial_from_json(o), polynomial_from_json(i),
                               annulus_from_json(o.at("annulus")), annulus_from_json(i.at("annulus")),
                               complex_from_json(j.at("t")), j.at("xi").get<double>());
  });
}

Json to_json(const EscapeField& field) {
  std::string status;
  status.reserve(field.cells.size());
  Json iterations = Json::array();
  for (const Cell& c : field.cells) {
    status += status_letter(c.status);
    iterations.push_back(c.iterations);
  }
  return Json{{"kind", "escape_field"},
              {"bbox", {to_json(field.bbox.min), to_json(field.bbox.max)}},
              {"width", field.width},
              {"height", field.height},
              {"status", status},
              {"iterations", iterations}};
}

EscapeField field_from_json(const Json& j) {
  return parsing("escape field", [&] {
    EscapeField field;
    field.bbox = {complex_from_json(j.at("bbox").at(0)), complex_from_json(j.at("bbox").at(1))};
    field.width = j.at("width").get<std::size_t>();
    field.height = j.at("height").get<std::size_t>();
    const auto status = j.at("status").get<std::string>();
    const Json& iterations = j.at("iterations");
    if (status.size() != field.width * field.height || iterations.size() != status.size()) {
      throw Error(ErrorCode::kParseError, "escape field: cell count does not match width * height");
    }
    field.cells.resize(status.size());
    for (std::size_t i = 0; i < status.size(); ++i) {
      const char s = status[i];
      field.cells[i].status = s == 'C'   ? OrbitStatus::kInteriorCaptured
                              : s == 'E' ? OrbitStatus::kEscaped
                                         : OrbitStatus::kUndecided;
      field.cells[i].iterations = iterations[i].get<std::uint32_t>();
    }
    return field;
  });
}

Json to_json(const VerifyReport& r) {
  return Json{{"d_K", r.d_K},       {"d_J", r.d_J}, {"d_L", r.d_L}, {"delta", r.delta},
              {"pixel_diagonal", r.pixel_diagonal}, {"pass", r.pass}};
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parsing(path.string().c_str(), [&] { return Json::parse(buffer.str()); });
}

void write_json(const Json& j, const std::filesystem::path& path) {
  std::ofstream file(path);
  file << j.dump(1) << '\n';
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

}  // namespace jshapes
