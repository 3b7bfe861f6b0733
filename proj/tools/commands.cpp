#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <memory>

#include "jshapes/error.hpp"
#include "jshapes/pipeline.hpp"

namespace jshapes::cli {

using jshapes::to_json;

namespace {

namespace fs = std::filesystem;

fs::path out_dir(const RunConfig& config) {
  const fs::path dir(config.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

void require_inputs(const RunConfig& config, std::size_t count) {
  if (config.inputs.size() < count) {
    throw Error(ErrorCode::kInvalidArgument, config.command + ": missing input file");
  }
}

std::vector<JordanCurve> load_curves(const std::vector<std::string>& paths) {
  std::vector<JordanCurve> out;
  for (const auto& p : paths) out.push_back(load_curve(p));
  return out;
}

double max_diameter(const std::vector<JordanCurve>& curves) {
  double d = 0.0;
  for (const auto& c : curves) d = std::max(d, c.diameter());
  return d;
}

ShapeOptions shape_options(const RunConfig& config) {
  ShapeOptions options;
  options.epsilon = config.epsilon;
  return options;
}

CertifyOptions certify_options(const RunConfig& config) {
  CertifyOptions options;
  options.seed = config.seed;
  return options;
}

std::vector<std::size_t> schedule(const RunConfig& config) {
  if (config.n) return {*config.n};
  return degree_schedule(config.n_max);
}

// A dynamical map loaded from a dump, with the radii its certificate uses.
struct LoadedMap {
  std::unique_ptr<DynamicalMap> map;
  IterateParams params;
  std::vector<JordanCurve> frame_curves;  // used for the render box when no target is given
};

LoadedMap load_map(const Json& dump, const RunConfig& config) {
  const std::string kind = dump.value("kind", "");
  LoadedMap out;
  out.params.max_iter = config.max_iter;
  if (kind == "polynomial") {
    ShapePolynomial poly = polynomial_from_json(dump);
    const auto annulus = polynomial_annulus_from_json(dump);
    if (!annulus) throw Error(ErrorCode::kParseError, "polynomial dump has no annulus");
    const EscapeCertificate cert = certify(poly, *annulus, certify_options(config));
    out.params.escape_radius = cert.escape_radius();
    out.params.capture_radius = cert.capture_radius();
    out.frame_curves.push_back(annulus->outer);
    out.map = std::make_unique<PolynomialMap>(std::move(poly));
  } else if (kind == "rational") {
    MultiShapeSystem sys = system_from_json(dump);
    const SystemGeometry g = system_geometry(sys);
    out.params.escape_radius = g.sup_bounded;
    out.params.capture_radius = g.rho;
    for (const auto& a : sys.annuli) out.frame_curves.push_back(a.outer);
    out.map = std::make_unique<RationalMap>(std::move(sys));
  } else if (kind == "annulus") {
    AnnulusSystem sys = annulus_system_from_json(dump);
    const AnnulusCertificate cert = certify_S(sys, certify_options(config));
    out.params.escape_radius = cert.escape_radius();
    out.params.capture_radius = cert.capture_radius();
    out.frame_curves.push_back(sys.E.outer);
    out.map = std::make_unique<AnnulusMap>(std::move(sys));
  } else {
    throw Error(ErrorCode::kParseError, "unsupported dump kind '" + kind + "'");
  }
  return out;
}

EscapeField render_for(const DynamicalMap& map, const IterateParams& params,
                       const std::vector<JordanCurve>& curves, double delta, const RunConfig& config) {
  return render(map, default_bbox(curves, delta), config.grid, config.grid, params, config.threads);
}

Json field_summary(const EscapeField& field) {
  std::size_t counts[3] = {0, 0, 0};
  for (const Cell& c : field.cells) ++counts[static_cast<int>(c.status)];
  const std::string pgm = encode_pgm({field.width, field.height, gray_levels(field)});
  char checksum[17];
  std::snprintf(checksum, sizeof checksum, "%016llx", static_cast<unsigned long long>(fnv1a(pgm)));
  return Json{{"width", field.width},
              {"height", field.height},
              {"bbox", {to_json(field.bbox.min), to_json(field.bbox.max)}},
              {"pixel_diagonal", field.pixel_diagonal()},
              {"status_counts",
               {{std::string(to_string(OrbitStatus::kInteriorCaptured)), counts[0]},
                {std::string(to_string(OrbitStatus::kEscaped)), counts[1]},
                {std::string(to_string(OrbitStatus::kUndecided)), counts[2]}}},
              {"pgm_fnv1a", checksum}};
}

void write_field(const EscapeField& field, const fs::path& dir) {
  write_json(to_json(field), dir / "field.json");
  write_image(field, dir / "image.pgm");
}

int finish(Json report, const fs::path& dir, int code) {
  report["exit_code"] = code;
  write_json(report, dir / "report.json");
  std::printf("%s\n", report.at("status").get<std::string>().c_str());
  return code;
}

// Renders with the certificate radii and checks the Hausdorff bounds against
// the target curves. Returns the verification exit code.
int render_and_verify(const DynamicalMap& map, const IterateParams& params,
                      const std::vector<JordanCurve>& curves, double delta, const RunConfig& config,
                      const fs::path& dir, Json& report) {
  const EscapeField field = render_for(map, params, curves, delta, config);
  write_field(field, dir);
  const VerifyReport verify = verify_hausdorff(field, curves, delta);
  write_json(Json{{"config", to_json(config)}, {"verify", to_json(verify)}}, dir / "verify.json");
  report["render"] = field_summary(field);
  report["verify"] = to_json(verify);
  return verify.pass ? kOk : kVerificationFail;
}

}  // namespace

Json to_json(const RunConfig& c) {
  Json j{{"command", c.command},  {"inputs", c.inputs},   {"n_max", c.n_max},
         {"grid", c.grid},        {"max_iter", c.max_iter}, {"seed", c.seed},
         {"out", c.out},          {"threads", c.threads}, {"curves", c.curves}};
  j["n"] = c.n ? Json(*c.n) : Json(nullptr);
  j["epsilon"] = c.epsilon ? Json(*c.epsilon) : Json(nullptr);
  j["eps_geom"] = c.eps_geom ? Json(*c.eps_geom) : Json(nullptr);
  j["delta"] = c.delta ? Json(*c.delta) : Json(nullptr);
  j["basepoint"] = c.basepoint ? jshapes::to_json(*c.basepoint) : Json(nullptr);
  return j;
}

int cmd_build(const RunConfig& config) {
  require_inputs(config, 1);
  const JordanCurve curve = load_curve(config.inputs[0]);
  const double eps_geom = config.eps_geom  ? *config.eps_geom
                          : config.delta   ? *config.delta / 4.0
                                           : 0.025 * curve.diameter();
  const PreparedShape shape = prepare_shape(curve, eps_geom, config.basepoint, shape_options(config));
  const auto dir = out_dir(config);

  Json report{{"config", to_json(config)},
              {"eps_geom", eps_geom},
              {"epsilon", shape.epsilon},
              {"t", to_json(shape.t)},
              {"capacity", to_json(shape.map.capacity())},
              {"map_boundary_error", shape.map.quality().boundary_rmse}};

  const auto degrees = schedule(config);
  bool found = false;
  ShapePolynomial last;
  EscapeCertificate last_cert;
  for (const std::size_t n : degrees) {
    last = shape.polynomial(n);
    last_cert = certify(last, shape.annulus, certify_options(config));
    if ((found = last_cert.pass)) break;
  }
  write_json(to_json(last, &shape.annulus), dir / "polynomial.json");
  write_json(to_json(last_cert), dir / "certificate.json");
  report["n"] = last.n;
  report["degree"] = last.degree();
  report["certificate"] = to_json(last_cert);
  report["status"] = found ? "PASS" : "FAIL";
  return finish(std::move(report), dir, found ? kOk : kCertificationFail);
}

int cmd_render(const RunConfig& config) {
  require_inputs(config, 1);
  const LoadedMap loaded = load_map(read_json(config.inputs[0]), config);
  const auto curves = config.curves.empty() ? loaded.frame_curves : load_curves(config.curves);
  const double delta = config.delta ? *config.delta : 0.2 * max_diameter(curves);
  const auto dir = out_dir(config);
  const EscapeField field = render_for(*loaded.map, loaded.params, curves, delta, config);
  write_field(field, dir);
  Json report{{"config", to_json(config)},
              {"escape_radius", loaded.params.escape_radius},
              {"capture_radius", loaded.params.capture_radius},
              {"render", field_summary(field)},
              {"status", "RENDERED"}};
  return finish(std::move(report), dir, kOk);
}

int cmd_verify(const RunConfig& config) {
  require_inputs(config, 2);
  if (!config.delta) throw Error(ErrorCode::kInvalidArgument, "verify needs --delta");
  const Json dump = read_json(config.inputs[0]);
  const std::vector<JordanCurve> curves =
      load_curves({config.inputs.begin() + 1, config.inputs.end()});
  const auto dir = out_dir(config);
  Json report{{"config", to_json(config)}};
  int code;
  if (dump.value("kind", "") == "escape_field") {
    const EscapeField field = field_from_json(dump);
    const VerifyReport verify = verify_hausdorff(field, curves, *config.delta);
    write_json(Json{{"config", to_json(config)}, {"verify", to_json(verify)}}, dir / "verify.json");
    report["verify"] = to_json(verify);
    code = verify.pass ? kOk : kVerificationFail;
  } else {
    const LoadedMap loaded = load_map(dump, config);
    code = render_and_verify(*loaded.map, loaded.params, curves, *config.delta, config, dir, report);
  }
  report["status"] = code == kOk ? "PASS" : "FAIL";
  return finish(std::move(report), dir, code);
}

int cmd_rational(const RunConfig& config) {
  require_inputs(config, 1);
  const std::vector<JordanCurve> curves = load_curves(config.inputs);
  const double delta = config.delta ? *config.delta : 0.1 * max_diameter(curves);
  const double eps_geom = config.eps_geom ? *config.eps_geom : delta / 4.0;
  const PreparedSystem prepared = prepare_system(curves, eps_geom, config.basepoint, shape_options(config));
  const auto dir = out_dir(config);

  Json report{{"config", to_json(config)}, {"delta", delta}, {"eps_geom", eps_geom},
              {"t", to_json(prepared.t)}};
  std::optional<MultiShapeSystem> sys;
  MultiCertificate cert;
  for (const std::size_t n : schedule(config)) {
    sys = prepared.system(n);
    const auto [b, B] = default_bounds(system_geometry(*sys));
    cert = certify_multi(*sys, b, B, certify_options(config));
    if (cert.pass) break;
  }
  write_json(to_json(*sys), dir / "system.json");
  write_json(to_json(cert), dir / "certificate.json");
  report["n"] = sys->n();
  report["certificate"] = to_json(cert);
  if (!cert.pass) {
    report["status"] = "FAIL";
    return finish(std::move(report), dir, kCertificationFail);
  }
  const IterateParams params{cert.escape_radius(), cert.capture_radius(), config.max_iter};
  const int code = render_and_verify(RationalMap(*sys), params, curves, delta, config, dir, report);
  report["status"] = code == kOk ? "PASS" : "FAIL";
  return finish(std::move(report), dir, code);
}

int cmd_annulus(const RunConfig& config) {
  require_inputs(config, 2);
  const JordanCurve outer = load_curve(config.inputs[0]);
  const JordanCurve inner = load_curve(config.inputs[1]);
  const double delta = config.delta ? *config.delta : 0.1 * outer.diameter();
  const PreparedAnnulus prepared = prepare_annulus(outer, inner, delta, config.basepoint, shape_options(config));
  const auto dir = out_dir(config);

  Json report{{"config", to_json(config)}, {"delta", delta}, {"delta1", prepared.delta1},
              {"xi", prepared.xi},         {"t", to_json(prepared.t)}};
  std::optional<AnnulusSystem> sys;
  AnnulusCertificate cert;
  for (const std::size_t n : schedule(config)) {
    sys = prepared.system(n);
    cert = certify_S(*sys, certify_options(config));
    if (cert.pass) break;
  }
  write_json(to_json(*sys), dir / "system.json");
  write_json(to_json(cert), dir / "certificate.json");
  report["n"] = sys->n();
  report["certificate"] = to_json(cert);
  if (!cert.pass) {
    report["status"] = "FAIL";
    return finish(std::move(report), dir, kCertificationFail);
  }
  const IterateParams params{cert.escape_radius(), cert.capture_radius(), config.max_iter};
  const std::vector<JordanCurve> curves{outer, inner};
  const int code = render_and_verify(AnnulusMap(*sys), params, curves, delta, config, dir, report);
  report["status"] = code == kOk ? "PASS" : "FAIL";
  return finish(std::move(report), dir, code);
}

int run(const RunConfig& config) {
  try {
    if (config.command == "build") return cmd_build(config);
    if (config.command == "render") return cmd_render(config);
    if (config.command == "verify") return cmd_verify(config);
    if (config.command == "rational") return cmd_rational(config);
    if (config.command == "annulus") return cmd_annulus(config);
    throw Error(ErrorCode::kInvalidArgument, "unknown command '" + config.command + "'");
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", std::string(to_string(e.code())).c_str(), e.what());
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    std::fprintf(stderr, "error: IO_ERROR: %s\n", e.what());
    return kIo;
  }
}

}  // namespace jshapes::cli
