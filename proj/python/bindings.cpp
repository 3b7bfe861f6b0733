#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "commands.hpp"
#include "jshapes/error.hpp"
#include "jshapes/pipeline.hpp"

namespace py = pybind11;
using namespace jshapes;

namespace {

JordanCurve curve_from(const std::vector<Complex>& points) { return JordanCurve(points); }

py::dict field_arrays(const EscapeField& f) {
  py::array_t<std::uint8_t> status({f.height, f.width});
  py::array_t<std::uint32_t> iterations({f.height, f.width});
  auto s = status.mutable_unchecked<2>();
  auto it = iterations.mutable_unchecked<2>();
  for (std::size_t y = 0; y < f.height; ++y) {
    for (std::size_t x = 0; x < f.width; ++x) {
      s(y, x) = static_cast<std::uint8_t>(f.at(x, y).status);
      it(y, x) = f.at(x, y).iterations;
    }
  }
  py::dict out;
  out["status"] = status;
  out["iterations"] = iterations;
  out["bbox"] = py::make_tuple(f.bbox.min, f.bbox.max);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Julia-set shape approximation";

  static py::exception<Error> error(m, "JShapesError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error((std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::enum_<OrbitStatus>(m, "OrbitStatus")
      .value("INTERIOR_CAPTURED", OrbitStatus::kInteriorCaptured)
      .value("ESCAPED", OrbitStatus::kEscaped)
      .value("UNDECIDED", OrbitStatus::kUndecided);

  py::class_<JordanCurve>(m, "JordanCurve")
      .def(py::init(&curve_from), py::arg("points"))
      .def_property_readonly("points", [](const JordanCurve& c) {
        return std::vector<Complex>(c.points().begin(), c.points().end());
      })
      .def_property_readonly("area", &JordanCurve::area)
      .def_property_readonly("perimeter", &JordanCurve::perimeter)
      .def_property_readonly("diameter", &JordanCurve::diameter)
      .def("winding_number", &JordanCurve::winding_number)
      .def("distance", &JordanCurve::distance)
      .def("__len__", &JordanCurve::size);

  m.def("load_curve", [](const std::filesystem::path& p) { return load_curve(p); });

  py::class_<AnnulusSpec>(m, "AnnulusSpec")
      .def_readonly("outer", &AnnulusSpec::outer)
      .def_readonly("inner", &AnnulusSpec::inner);
  m.def("offset_annulus", &offset_annulus, py::arg("curve"), py::arg("eps_geom"));

  py::class_<ExteriorMap>(m, "ExteriorMap")
      .def("__call__", &ExteriorMap::evaluate)
      .def_property_readonly("capacity", &ExteriorMap::capacity)
      .def_property_readonly("laurent", [](const ExteriorMap& map) {
        return std::vector<Complex>(map.laurent().begin(), map.laurent().end());
      })
      .def_property_readonly("boundary_error", [](const ExteriorMap& map) { return map.quality().boundary_rmse; });
  m.def("build_exterior_map",
        [](const JordanCurve& c, Complex t) { return build_exterior_map(c, t); }, py::arg("curve"),
        py::arg("t"));

  py::class_<ShapePolynomial>(m, "ShapePolynomial")
      .def_readonly("n", &ShapePolynomial::n)
      .def_readonly("epsilon", &ShapePolynomial::epsilon)
      .def_readonly("t", &ShapePolynomial::t)
      .def_readonly("capacity", &ShapePolynomial::capacity)
      .def_property_readonly("degree", &ShapePolynomial::degree)
      .def_property_readonly("roots", [](const ShapePolynomial& p) {
        std::vector<Complex> out;
        for (Complex r : p.roots) out.push_back(r + p.t);
        return out;
      })
      .def("omega", [](const ShapePolynomial& p, Complex z) { return eval_omega(p, z, Frame::kOriginal).to_complex(); })
      .def("__call__", [](const ShapePolynomial& p, Complex z) { return eval_P(p, z, Frame::kOriginal).to_complex(); });

  py::class_<EscapeCertificate>(m, "EscapeCertificate")
      .def_readonly("passed", &EscapeCertificate::pass)
      .def_readonly("kappa", &EscapeCertificate::kappa)
      .def_readonly("inside_max", &EscapeCertificate::inside_max)
      .def_readonly("outside_min_ratio", &EscapeCertificate::outside_min_ratio)
      .def_readonly("r_inner", &EscapeCertificate::r_inner)
      .def_property_readonly("escape_radius", &EscapeCertificate::escape_radius)
      .def_property_readonly("capture_radius", &EscapeCertificate::capture_radius);

  py::class_<PreparedShape>(m, "PreparedShape")
      .def_readonly("curve", &PreparedShape::curve)
      .def_readonly("annulus", &PreparedShape::annulus)
      .def_readonly("t", &PreparedShape::t)
      .def_readonly("epsilon", &PreparedShape::epsilon)
      .def_readonly("map", &PreparedShape::map)
      .def("polynomial", &PreparedShape::polynomial, py::arg("n"))
      .def("certify",
           [](const PreparedShape& s, const ShapePolynomial& p, std::uint64_t seed) {
             return certify(p, s.annulus, CertifyOptions{4096, seed});
           },
           py::arg("polynomial"), py::arg("seed") = 0)
      .def("find_min_degree", [](const PreparedShape& s, std::size_t n_max) {
        const DegreeSearch found =
            find_min_degree([&](std::size_t n) { return s.polynomial(n); }, s.annulus, degree_schedule(n_max));
        return py::make_tuple(found.polynomial, found.certificate);
      }, py::arg("n_max") = 512);
  m.def("prepare_shape",
        [](const JordanCurve& c, double eps_geom, std::optional<Complex> t, std::optional<double> epsilon) {
          ShapeOptions options;
          options.epsilon = epsilon;
          return prepare_shape(c, eps_geom, t, options);
        },
        py::arg("curve"), py::arg("eps_geom"), py::arg("t") = py::none(), py::arg("epsilon") = py::none());

  m.def("iterate",
        [](const ShapePolynomial& p, Complex z, double escape, double capture, std::size_t max_iter) {
          const OrbitResult r = iterate(PolynomialMap(p), z, escape, capture, max_iter);
          return py::make_tuple(r.status, r.iterations);
        },
        py::arg("polynomial"), py::arg("z"), py::arg("escape_radius"), py::arg("capture_radius"),
        py::arg("max_iter") = 200);

  m.def("render",
        [](const ShapePolynomial& p, Complex lo, Complex hi, std::size_t width, std::size_t height,
           double escape, double capture, std::size_t max_iter, unsigned threads) {
          EscapeField f;
          {
            py::gil_scoped_release release;
            f = render(PolynomialMap(p), BoundingBox{lo, hi}, width, height, {escape, capture, max_iter}, threads);
          }
          return field_arrays(f);
        },
        py::arg("polynomial"), py::arg("lo"), py::arg("hi"), py::arg("width"), py::arg("height"),
        py::arg("escape_radius"), py::arg("capture_radius"), py::arg("max_iter") = 200, py::arg("threads") = 0);

  m.def("run",
        [](const std::string& command, const std::vector<std::string>& inputs, const std::string& out,
           std::optional<double> delta, std::optional<double> eps_geom, std::optional<std::size_t> n,
           std::size_t n_max, std::size_t grid, std::size_t max_iter, std::uint64_t seed) {
          cli::RunConfig c;
          c.command = command;
          c.inputs = inputs;
          c.out = out;
          c.delta = delta;
          c.eps_geom = eps_geom;
          c.n = n;
          c.n_max = n_max;
          c.grid = grid;
          c.max_iter = max_iter;
          c.seed = seed;
          py::gil_scoped_release release;
          return cli::run(c);
        },
        "Runs a command-line subcommand in process and returns its exit code.", py::arg("command"),
        py::arg("inputs"), py::arg("out") = ".", py::arg("delta") = py::none(), py::arg("eps_geom") = py::none(),
        py::arg("n") = py::none(), py::arg("n_max") = 512, py::arg("grid") = 512, py::arg("max_iter") = 200,
        py::arg("seed") = 0);
}
