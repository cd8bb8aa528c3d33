#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gabor/constructor.hpp"
#include "gabor/error.hpp"
#include "gabor/finite_model.hpp"
#include "gabor/frame_analysis.hpp"
#include "gabor/io.hpp"
#include "gabor/zak.hpp"

namespace py = pybind11;
using namespace gabor;

namespace {

py::dict report_dict(const FrameReport& r) {
  py::dict d;
  d["bessel_bound"] = r.bessel_bound;
  d["lower_bound"] = r.lower_bound;
  d["is_bessel"] = r.is_bessel;
  d["is_frame_sufficient"] = r.is_frame_sufficient;
  d["is_parseval"] = r.is_parseval;
  d["is_riesz"] = r.is_riesz;
  d["is_orthonormal"] = r.is_orthonormal;
  d["density_ok"] = r.density_ok;
  d["card_SN"] = r.card_SN;
  d["LM"] = r.LM;
  if (r.narrow) {
    d["narrow_support"] = py::make_tuple(r.narrow->A, r.narrow->B, r.narrow->is_frame);
  } else {
    d["narrow_support"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Frame analysis of multi-window discrete Gabor systems";

  static py::exception<Error> gabor_error(m, "GaborError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(gabor_error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<PeriodicSet>(m, "PeriodicSet")
      .def(py::init([](std::int64_t period, std::vector<std::int64_t> residues) {
             return PeriodicSet::make(period, residues);
           }),
           py::arg("period"), py::arg("residues"))
      .def_static("integers", &PeriodicSet::integers)
      .def_property_readonly("period", &PeriodicSet::period)
      .def_property_readonly("residues", &PeriodicSet::residues)
      .def("contains", &PeriodicSet::contains)
      .def("truncation_cardinality", &PeriodicSet::truncation_cardinality)
      .def("__repr__", [](const PeriodicSet& s) { return "PeriodicSet(" + io::to_json(s).dump() + ")"; });

  py::class_<Window>(m, "Window")
      .def(py::init([](std::int64_t offset, std::vector<cplx> values) { return Window(offset, std::move(values)); }),
           py::arg("offset"), py::arg("values"))
      .def_static("delta", &Window::delta, py::arg("j"), py::arg("amplitude") = cplx(1.0))
      .def_property_readonly("offset", &Window::offset)
      .def_property_readonly("values", &Window::values)
      .def("__call__", &Window::operator())
      .def("norm", &Window::norm)
      .def("__eq__", [](const Window& a, const Window& b) { return a == b; })
      .def("__repr__", [](const Window& w) { return "Window(" + io::to_json(w).dump() + ")"; });

  py::class_<GaborSystem>(m, "GaborSystem")
      .def(py::init<std::int64_t, std::int64_t, PeriodicSet, std::vector<Window>>(), py::arg("M"), py::arg("N"),
           py::arg("set"), py::arg("windows"))
      .def(py::init([](std::int64_t M, std::int64_t N, std::vector<Window> windows) {
             return GaborSystem(M, N, PeriodicSet::integers(), std::move(windows));
           }),
           py::arg("M"), py::arg("N"), py::arg("windows"))
      .def_property_readonly("L", &GaborSystem::L)
      .def_property_readonly("M", &GaborSystem::M)
      .def_property_readonly("N", &GaborSystem::N)
      .def_property_readonly("set", &GaborSystem::set)
      .def_property_readonly("windows", &GaborSystem::windows)
      .def("scaled", &GaborSystem::scaled)
      .def("to_json", [](const GaborSystem& s) { return io::to_json(s).dump(); })
      .def_static("from_json", [](const std::string& text) { return io::system_from_json(io::json::parse(text)); })
      .def_static("load", [](const std::string& path) { return io::load_system(path); });

  m.def("correlation_table",
        [](const GaborSystem& g, std::optional<GaborSystem> h) {
          const auto t = h ? cross_correlation_table(g, *h) : autocorrelation_table(g);
          std::map<std::pair<std::int64_t, std::int64_t>, cplx> out;
          for (const auto j : t.rows()) {
            for (std::int64_t k = -t.band_radius(); k <= t.band_radius(); ++k) out[{j, k}] = t(k, j);
          }
          return out;
        },
        py::arg("g"), py::arg("h") = py::none(), "Entries {(j, k): G_k(j)} over S_N and the band");
  m.def("analyze", [](const GaborSystem& s, double tol) { return report_dict(analyze(s, tol)); }, py::arg("system"),
        py::arg("tol") = kDefaultTol);
  m.def("parseval_check_exact", py::overload_cast<const GaborSystem&>(&parseval_check_exact));
  m.def("orthonormal_check_exact", &orthonormal_check_exact);
  m.def("energy",
        [](const GaborSystem& s, const Window& f) { return energy_via_table(autocorrelation_table(s), f); });
  m.def("apply_frame_operator", [](const GaborSystem& g, const GaborSystem& h, const Window& f) {
    return apply_frame_operator(cross_correlation_table(g, h), f);
  });
  m.def("dual_check", [](const GaborSystem& g, const GaborSystem& h, double tol) {
    return dual_check(cross_correlation_table(g, h), tol);
  }, py::arg("g"), py::arg("h"), py::arg("tol") = kDefaultTol);
  m.def("perturbation_bound",
        [](const GaborSystem& g, const GaborSystem& h, double A, double B) -> std::optional<py::tuple> {
          const auto p = perturbation_bound(g, h, A, B);
          if (!p) return std::nullopt;
          return py::make_tuple(p->A, p->B, p->R);
        });
  m.def("rayleigh_bounds",
        [](const GaborSystem& s, std::int64_t trials, std::int64_t radius, std::uint64_t seed) {
          const auto r = randomized_rayleigh_bounds(s, trials, radius, seed);
          return py::make_tuple(r.min_ratio, r.max_ratio);
        },
        py::arg("system"), py::arg("trials") = 200, py::arg("radius") = 8, py::arg("seed") = 0);

  m.def("construct_parseval", &construct_parseval, py::arg("L"), py::arg("M"), py::arg("N"));
  m.def("construct_orthonormal", &construct_orthonormal, py::arg("L"), py::arg("M"), py::arg("N"));
  m.def("dual_completion", &dual_completion);

  m.def("zak_grid",
        [](const Window& f, std::int64_t M, std::int64_t T) {
          const auto g = zak_grid(f, M, T);
          Eigen::MatrixXcd out(M, T);
          for (std::int64_t j = 0; j < M; ++j) {
            for (std::int64_t t = 0; t < T; ++t) out(j, t) = g(j, t);
          }
          return out;
        },
        py::arg("f"), py::arg("M"), py::arg("T"));
  m.def("frame_check_NM",
        [](const GaborSystem& s, std::int64_t T) {
          const auto e = frame_check_NM(s, T > 0 ? T : default_grid(s));
          py::dict d;
          d["A_est"] = e.A_est;
          d["B_est"] = e.B_est;
          d["refined_A"] = e.refined_A;
          d["refined_B"] = e.refined_B;
          d["grid"] = e.grid;
          d["is_frame"] = e.is_frame;
          return d;
        },
        py::arg("system"), py::arg("T") = 0);
  m.def("common_zero_check", [](const GaborSystem& s, std::int64_t T) {
    return common_zero_check(s, T > 0 ? T : default_grid(s));
  }, py::arg("system"), py::arg("T") = 0);
  m.def("truncated_gaussian", &truncated_gaussian, py::arg("r") = 1.0, py::arg("tail_tol") = 1e-14);

  py::class_<FiniteModel>(m, "FiniteModel")
      .def(py::init<const GaborSystem&, std::int64_t>(), py::arg("system"), py::arg("periods") = 1)
      .def_property_readonly("P", &FiniteModel::P)
      .def_property_readonly("synthesis", &FiniteModel::synthesis)
      .def("frame_operator", &FiniteModel::frame_operator)
      .def("spectral_bounds", [](const FiniteModel& fm) {
        const auto b = spectral_frame_bounds(fm);
        return py::make_tuple(b.A, b.B);
      });
  m.def("range_projector", [](const FiniteModel& fm) { return range_projector(fm.synthesis()); });
  m.def("kframe_verdict", [](const FiniteModel& fm, const Matrix& K) {
    const auto v = kframe_verdict(fm, KOperator{K});
    py::dict d;
    d["is_kframe"] = v.is_kframe;
    d["A_opt"] = v.A_opt;
    d["B"] = v.B;
    d["zero_operator"] = v.zero_operator;
    d["scope"] = "in finite model P=" + std::to_string(v.P);
    return d;
  });
  m.def("douglas_range_check", [](const FiniteModel& fm, const Matrix& K) {
    return douglas_range_check(fm, KOperator{K});
  });
  m.def("k_minimality_check", [](const FiniteModel& fm) { return k_minimality_check(fm); });
  m.def("k_dual", [](const FiniteModel& fm, const Matrix& K) { return k_dual_minimal_norm(fm, KOperator{K}); });
}
