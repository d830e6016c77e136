#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lensreeb/certify.hpp"
#include "lensreeb/chen_ruan.hpp"
#include "lensreeb/cli.hpp"
#include "lensreeb/ellipsoid.hpp"
#include "lensreeb/errors.hpp"
#include "lensreeb/report.hpp"
#include "lensreeb/toric.hpp"

namespace py = pybind11;
using namespace lensreeb;

namespace {

// Results cross the boundary as JSON text; the Python layer turns "num/den" into Fraction.
std::string dump(const Json& j) { return j.dump(); }

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(Rational::parse(s));
  return out;
}

EllipsoidModel make_ellipsoid(std::int64_t p, const std::vector<std::int64_t>& weights, const std::vector<std::string>& axes) {
  return EllipsoidModel(LensSpace::make(p, weights), parse_rationals(axes));
}

ToricModel make_toric(std::int64_t p, const std::vector<std::int64_t>& weights) {
  return build_toric_model(normalize(LensSpace::make(p, weights)).space);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact lens-space invariants";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<IdentityViolation> identity_violation(m, "IdentityViolation", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const DomainError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(domain_error.ptr())(e.what());
      exc.attr("kind") = e.kind();
      PyErr_SetObject(domain_error.ptr(), exc.ptr());
    } catch (const IdentityViolation& e) {
      py::set_error(identity_violation, e.what());
    }
  });

  m.def("lens_space", [](std::int64_t p, const std::vector<std::int64_t>& w) { return dump(to_json(LensSpace::make(p, w))); });
  m.def("normalize", [](std::int64_t p, const std::vector<std::int64_t>& w) {
    auto ns = normalize(LensSpace::make(p, w));
    return dump({{"space", to_json(ns.space)}, {"relabel", ns.relabel}});
  });
  m.def("cr_table", [](std::int64_t p, const std::vector<std::int64_t>& w) { return dump(to_json(cr_table(LensSpace::make(p, w)))); });
  m.def("existence_report", [](std::int64_t p, const std::vector<std::int64_t>& w) {
    return dump(to_json(existence_report(LensSpace::make(p, w))));
  });

  m.def("toric_model", [](std::int64_t p, const std::vector<std::int64_t>& w) {
    auto model = make_toric(p, w);
    Json j = to_json(model);
    j["det"] = int_json(verify_determinant(model));
    j["kernel"] = to_json(verify_kernel_generator(model));
    j["mean_index"] = to_json(mean_index(model));
    return dump(j);
  });
  m.def("cz_index", [](std::int64_t p, const std::vector<std::int64_t>& w, std::int64_t n) {
    return cz_index(make_toric(p, w), n).str();
  });
  m.def("mean_index", [](std::int64_t p, const std::vector<std::int64_t>& w) { return mean_index(make_toric(p, w)).str(); });
  m.def("hc_table", [](std::int64_t p, const std::vector<std::int64_t>& w, std::int64_t cls, const std::string& cap) {
    return dump(to_json(hc_table(make_toric(p, w), cls, Rational::parse(cap))));
  });
  m.def("k0_threshold", [](std::int64_t p, const std::vector<std::int64_t>& w, std::int64_t cls) {
    return k0_threshold(make_toric(p, w), cls).str();
  });

  m.def("ellipsoid_cz", [](std::int64_t p, const std::vector<std::int64_t>& w, const std::vector<std::string>& axes, std::size_t j,
                           std::int64_t n) { return ellipsoid_cz(make_ellipsoid(p, w, axes), j, n); });
  m.def("ellipsoid_mean_index", [](std::int64_t p, const std::vector<std::int64_t>& w, const std::vector<std::string>& axes,
                                   std::size_t j) { return ellipsoid_mean_index(make_ellipsoid(p, w, axes), j).str(); });
  m.def("symmetric_spectrum", [](std::int64_t p, const std::vector<std::int64_t>& w, const std::vector<std::string>& axes,
                                 std::int64_t cls, const std::string& cap) {
    Json out = Json::array();
    for (const auto& e : symmetric_spectrum(make_ellipsoid(p, w, axes), cls, Rational::parse(cap))) out.push_back(to_json(e));
    return dump(out);
  });
  m.def("check_dynamical_convexity", [](std::int64_t p, const std::vector<std::int64_t>& w, const std::vector<std::string>& axes,
                                        std::int64_t max_iter) {
    return dump(to_json(check_dynamical_convexity(make_ellipsoid(p, w, axes), max_iter)));
  });

  m.def("check_final_inequality", [](const std::string& budget) {
    return dump(to_json(check_final_inequality(budget_from_json(Json::parse(budget)))));
  });
  m.def("single_orbit_contradiction", [](std::int64_t p, const std::string& delta) {
    return to_string(single_orbit_contradiction(p, Rational::parse(delta)));
  });
  m.def("matching_feasibility", [](const std::string& budget, std::int64_t horizon, std::int64_t n, const std::string& k0) {
    return dump(to_json(matching_feasibility(budget_from_json(Json::parse(budget)), horizon, n, Rational::parse(k0))));
  });
  m.def("orbit_density", [](std::int64_t p, const std::string& delta) { return orbit_density(p, Rational::parse(delta)).str(); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"lensreeb"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
