#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bhphase/blowup.hpp"
#include "bhphase/compact.hpp"
#include "bhphase/equilibria.hpp"
#include "bhphase/errors.hpp"
#include "bhphase/export.hpp"
#include "bhphase/flow.hpp"
#include "bhphase/pde.hpp"
#include "bhphase/portrait.hpp"
#include "bhphase/wave.hpp"

namespace py = pybind11;
using namespace bh;

namespace {

py::array_t<double> as_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::dict equilibrium_dict(const Params& p, const Equilibrium& e) {
  py::dict d;
  d["label"] = e.label;
  d["chart"] = e.chart_name();
  d["kind"] = std::string(to_string(e.kind));
  if (e.finite) {
    d["x"] = e.finite->x;
    d["y"] = e.finite->y;
    const EigenData ed = eigen_data(p, e);
    d["eigenvalues"] = std::vector<std::complex<double>>{ed.values[0], ed.values[1]};
  } else {
    d["u"] = e.at_infinity->u;
    d["v"] = e.at_infinity->v;
    std::vector<std::string> sectors;
    for (Sector s : e.sectors) sectors.emplace_back(to_string(s));
    d["sectors"] = sectors;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_bhphase, m) {
  m.doc() = "Phase portraits and traveling waves of the generalized Burgers-Huxley equation";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<Params>(m, "Params")
      .def(py::init<int, int, double, int>(), py::arg("n"), py::arg("k"), py::arg("c"), py::arg("m") = 1)
      .def_property_readonly("n", &Params::n)
      .def_property_readonly("k", &Params::k)
      .def_property_readonly("c", &Params::c)
      .def_property_readonly("m", &Params::m)
      .def_property_readonly("degree", &Params::degree)
      .def("__repr__", [](const Params& p) {
        return "Params(n=" + std::to_string(p.n()) + ", k=" + std::to_string(p.k()) + ", c=" + py::repr(py::float_(p.c())).cast<std::string>() + ")";
      });

  m.def("field", [](const Params& p, double x, double y) {
    const Vec2 f = eval_field(p, Vec2{x, y});
    return std::pair{f.x, f.y};
  }, py::arg("p"), py::arg("x"), py::arg("y"));

  m.def("finite_equilibria", [](const Params& p) {
    py::list out;
    for (const auto& e : finite_equilibria(p)) out.append(equilibrium_dict(p, e));
    return out;
  });

  m.def("infinite_equilibria", [](const Params& p) {
    py::list out;
    for (const auto& e : infinite_equilibria(p)) out.append(equilibrium_dict(p, e));
    return out;
  });

  m.def("pushforward_residual", [](const Params& p, const std::string& chart, double u, double v) {
    return pushforward_residual(p, {chart_from_string(chart), u, v});
  }, py::arg("p"), py::arg("chart"), py::arg("u"), py::arg("v"));

  m.def("circle_equilibria", [](const Params& p) {
    const BlowupCase bc = blowup_case(p);
    py::list out;
    for (const auto& ce : circle_equilibria(p, bc)) {
      py::dict d;
      d["label"] = ce.label;
      d["theta"] = ce.theta;
      d["kind"] = std::string(to_string(ce.kind));
      d["radial_sign"] = ce.radial_sign;
      d["angular_sign"] = ce.angular_sign;
      out.append(d);
    }
    return out;
  });

  m.def("classify_portrait", [](const Params& p, double seed_eps) {
    TraceOptions opt;
    opt.seed_eps = seed_eps;
    const PortraitResult r = classify_portrait(p, opt);
    py::dict d;
    d["tag"] = r.cls.tag;
    d["equivalence_class"] = r.cls.equivalence_class;
    d["assumes_no_limit_cycles"] = r.assumes_no_limit_cycles;
    d["evidence_match"] = r.evidence_match;
    d["fixture_source"] = std::string(to_string(r.source));
    d["observed"] = r.observed;
    return d;
  }, py::arg("p"), py::arg("seed_eps") = kDefaultSeedEps);

  m.def("portrait_json", [](const Params& p) { return to_json(export_portrait(p)); });

  m.def("cycle_search", [](const Params& p, int grid) {
    CycleBudget b;
    b.grid = grid;
    const CycleSearchResult r = cycle_search(p, Window{}, b);
    py::dict d;
    d["found"] = r.found();
    d["seeds"] = r.seeds;
    d["crossings"] = r.crossings;
    return d;
  }, py::arg("p"), py::arg("grid") = 20);

  m.def("shoot_wave", [](const Params& p, double seed_eps) {
    WaveOptions opt;
    opt.seed_eps = seed_eps;
    const WaveProfile wp = shoot_heteroclinic(p, opt);
    const AsymptoticsReport rep = verify_asymptotics(wp);
    py::dict checks;
    for (const auto& c : rep.checks) checks[py::str(c.name)] = c.pass || !c.applicable;
    py::dict d;
    d["xi"] = as_array(wp.xi);
    d["phi"] = as_array(wp.phi);
    d["dphi"] = as_array(wp.dphi);
    d["residual"] = wave_residual(wp);
    d["checks"] = checks;
    d["all_pass"] = rep.all_pass();
    return d;
  }, py::arg("p"), py::arg("seed_eps") = 1e-7);

  m.def("pde_speed", [](const Params& p, int N, double T, double L) {
    PdeConfig cfg;
    cfg.N = N;
    cfg.T = T;
    cfg.L = L;
    SpeedReport rep;
    {
      py::gil_scoped_release release;
      rep = speed_estimate(p, shoot_heteroclinic(p), cfg);
    }
    py::dict d;
    d["speed"] = rep.speed;
    d["relative_error"] = rep.relative_error;
    d["shape_drift"] = rep.shape_drift;
    return d;
  }, py::arg("p"), py::arg("N") = 4096, py::arg("T") = 10.0, py::arg("L") = 60.0);
}
