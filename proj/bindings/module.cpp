// Thin python bindings: every structured result crosses the boundary as a
// canonical JSON string and is decoded to dicts on the python side.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qhchain/charpoly.hpp"
#include "qhchain/exceptional.hpp"
#include "qhchain/gauge.hpp"
#include "qhchain/io_util.hpp"
#include "qhchain/model.hpp"
#include "qhchain/models.hpp"
#include "qhchain/spectral.hpp"
#include "qhchain/two_level.hpp"

namespace py = pybind11;
using namespace qhchain;
using nlohmann::json;
using cplx = std::complex<double>;

namespace {

#ifndef QHCHAIN_VERSION
#define QHCHAIN_VERSION "0.0.0"
#endif

ChainModel parse_descriptor(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad descriptor JSON: ") + e.what());
  }
  return load_model(j);
}

std::optional<Rational> parse_param(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return rat_parse(*text);
}

json complex_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json real_root_json(const RealRoot& root) {
  json j;
  if (root.is_exact())
    j["exact"] = rat_str(*root.exact);
  else
    j["interval"] = {rat_str(root.lo), rat_str(root.hi)};
  j["approx"] = root.approx;
  return j;
}

json poly_coeff_json(const Poly& p) {
  json arr = json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    GRat c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_real())
      arr.push_back(rat_str(c.re));
    else
      arr.push_back(json::array({rat_str(c.re), rat_str(c.im)}));
  }
  if (p.is_zero()) arr.push_back("0");
  return arr;
}

std::string py_canonical(const std::string& descriptor) {
  return canonical_json(model_to_json(parse_descriptor(descriptor)));
}

std::string py_hash(const std::string& descriptor) {
  return model_hash_hex(parse_descriptor(descriptor));
}

std::string py_roccati(int n, const std::string& j,
                       const std::optional<std::string>& delta,
                       const std::string& variant) {
  RoccatiSpec spec;
  spec.n = n;
  spec.j = rat_parse(j);
  if (delta) spec.delta = rat_parse(*delta);
  if (variant == "obc")
    spec.variant = RoccatiSpec::Variant::Obc;
  else if (variant == "pbc-naive")
    spec.variant = RoccatiSpec::Variant::PbcNaive;
  else if (variant == "pbc-corrected")
    spec.variant = RoccatiSpec::Variant::PbcCorrected;
  else
    throw UsageError("unknown variant: " + variant);
  return canonical_json(model_to_json(build_roccati(spec)));
}

std::string py_yr(int n, const std::string& beta,
                  const std::vector<std::string>& t, int bond,
                  const std::optional<std::string>& gamma) {
  YRSpec spec;
  spec.n = n;
  spec.beta = rat_parse(beta);
  for (const auto& tv : t) spec.t.push_back(rat_parse(tv));
  spec.bond = bond;
  if (gamma) spec.gamma = rat_parse(*gamma);
  return canonical_json(model_to_json(build_yr(spec)));
}

std::string py_spectrum(const std::string& descriptor,
                        const std::optional<std::string>& param) {
  ChainModel m = parse_descriptor(descriptor);
  SpectrumReport rep = eigen_general(m, parse_param(param));
  json out;
  out["exact_path"] = rep.exact_path;
  json evs = json::array();
  for (const auto& e : rep.eigenvalues) {
    json je;
    je["value"] = complex_json(e.value);
    je["is_real"] = e.is_real;
    if (e.exact_known) je["exact"] = rat_str(e.exact);
    je["algebraic_multiplicity"] = e.algebraic_multiplicity;
    je["geometric_multiplicity"] = e.geometric_multiplicity;
    je["residual"] = e.residual;
    evs.push_back(std::move(je));
  }
  out["eigenvalues"] = std::move(evs);
  return canonical_json(out);
}

std::string py_gauge(const std::string& descriptor,
                     const std::optional<std::string>& param) {
  ChainModel m = parse_descriptor(descriptor);
  auto pv = parse_param(param);
  GaugeReport rep = build_gauge(m, pv);
  json out;
  out["verdict"] = verdict_name(rep.verdict);
  json ratios = json::array();
  for (const auto& r : rep.ratios) {
    json jr;
    jr["flag"] = ratio_flag_name(r.flag);
    jr["value"] = complex_json(r.approx);
    ratios.push_back(std::move(jr));
  }
  out["ratios"] = std::move(ratios);
  if (!rep.q.empty()) {
    out["q"] = rep.q;
    Certificate cert = check_quasi_hermitian(m, pv);
    out["certificate_holds"] = cert.holds;
    out["certificate_residual"] = cert.residual;
  }
  if (rep.witness > 0) {
    out["witness_bond"] = rep.witness;
    out["reason"] = rep.reason;
  }
  return canonical_json(out);
}

std::string py_discriminant(const std::string& descriptor) {
  ChainModel m = parse_descriptor(descriptor);
  Poly d = discriminant_of_model(m);
  json out;
  out["degree"] = d.degree();
  out["coefficients"] = poly_coeff_json(d);
  return canonical_json(out);
}

std::string py_eps(const std::string& descriptor) {
  EPReport rep = find_eps(parse_descriptor(descriptor));
  json out;
  out["discriminant"] = poly_coeff_json(rep.discriminant);
  json cands = json::array();
  for (const auto& c : rep.candidates) {
    json jc;
    jc["location"] = real_root_json(c.location);
    jc["eigenvalue"] = complex_json(c.eigenvalue);
    jc["algebraic_multiplicity"] = c.algebraic_multiplicity;
    jc["geometric_multiplicity"] = c.geometric_multiplicity;
    jc["ep_order"] = c.ep_order;
    jc["is_ep"] = c.is_ep;
    jc["certified"] = c.certified;
    cands.push_back(std::move(jc));
  }
  out["candidates"] = std::move(cands);
  return canonical_json(out);
}

std::string py_evolve(const std::string& descriptor,
                      const std::optional<std::string>& param,
                      const std::vector<cplx>& psi0,
                      const std::vector<double>& times) {
  ChainModel m = parse_descriptor(descriptor);
  EvolutionTrace tr = evolve(m, parse_param(param), psi0, times);
  json out;
  out["times"] = tr.times;
  json states = json::array();
  for (const auto& st : tr.states) {
    json row = json::array();
    for (const auto& v : st) row.push_back(complex_json(v));
    states.push_back(std::move(row));
  }
  out["states"] = std::move(states);
  out["transformed_norms"] = tr.transformed_norms;
  out["eta_norms"] = tr.eta_norms;
  return canonical_json(out);
}

std::string py_metric2x2(const cplx& a, const cplx& b) {
  MetricG g = metric_from_condition(a, b);
  json out;
  out["g12"] = complex_json(g.g12);
  out["g1"] = g.g1();
  out["g2"] = g.g2();
  out["positive_definite"] = g.positive_definite();
  if (g.positive_definite()) {
    Eigen::Matrix2cd h;
    h << a, b, std::conj(b), std::conj(a);
    Eigen::Matrix2cd sq = g.sqrt();
    Eigen::Matrix2cd ht = hermitize_via_G(h, g);
    auto mat = [](const Eigen::Matrix2cd& m) {
      return json::array(
          {json::array({complex_json(m(0, 0)), complex_json(m(0, 1))}),
           json::array({complex_json(m(1, 0)), complex_json(m(1, 1))})});
    };
    out["g_sqrt"] = mat(sq);
    out["h_tilde"] = mat(ht);
  }
  return canonical_json(out);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "exact and floating-point tools for non-Hermitian chain models";
  mod.attr("__version__") = QHCHAIN_VERSION;

  py::register_exception<UsageError>(mod, "UsageError", PyExc_ValueError);
  py::register_exception<NonConvergence>(mod, "NonConvergence",
                                         PyExc_RuntimeError);
  py::register_exception<ComputeError>(mod, "ComputeError", PyExc_RuntimeError);

  mod.def("canonical_model", &py_canonical, py::arg("descriptor"),
          "validate a model descriptor and return its canonical JSON");
  mod.def("model_hash", &py_hash, py::arg("descriptor"),
          "64-bit hash of the canonical descriptor, as hex");
  mod.def("roccati", &py_roccati, py::arg("n") = 4, py::arg("j") = "1",
          py::arg("delta") = std::nullopt, py::arg("variant") = "obc",
          "asymmetric-hop chain descriptor (variant: obc, pbc-naive, "
          "pbc-corrected)");
  mod.def("yr", &py_yr, py::arg("n") = 4, py::arg("beta") = "0",
          py::arg("t") = std::vector<std::string>{}, py::arg("bond") = -1,
          py::arg("gamma") = std::nullopt,
          "uniform chain with one perturbed reverse hop");
  mod.def("spectrum", &py_spectrum, py::arg("descriptor"),
          py::arg("param") = std::nullopt);
  mod.def("gauge", &py_gauge, py::arg("descriptor"),
          py::arg("param") = std::nullopt);
  mod.def("discriminant", &py_discriminant, py::arg("descriptor"));
  mod.def("exceptional_points", &py_eps, py::arg("descriptor"));
  mod.def("evolve", &py_evolve, py::arg("descriptor"), py::arg("param"),
          py::arg("psi0"), py::arg("times"));
  mod.def("metric2x2", &py_metric2x2, py::arg("a"), py::arg("b"));
}
