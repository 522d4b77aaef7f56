// qhchain command-line front end: model generation, spectra, gauge reports,
// discriminants, collision scans, parameter sweeps, time evolution, and the
// 2x2 metric construction. CSV output is RFC 4180 with a `# key=value`
// metadata preamble; JSON output has canonical (sorted) keys.
//
// Exit codes: 0 success, 1 compute failure, 2 usage/parse, 3 non-convergence.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qhchain/charpoly.hpp"
#include "qhchain/exceptional.hpp"
#include "qhchain/gauge.hpp"
#include "qhchain/io_util.hpp"
#include "qhchain/model.hpp"
#include "qhchain/models.hpp"
#include "qhchain/rng.hpp"
#include "qhchain/spectral.hpp"
#include "qhchain/two_level.hpp"

namespace {

using namespace qhchain;
using nlohmann::json;

#ifndef QHCHAIN_VERSION
#define QHCHAIN_VERSION "0.0.0"
#endif

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << content;
}

Rational parse_rat(const std::string& text, const std::string& what) {
  try {
    return rat_parse(text);
  } catch (const std::exception&) {
    throw UsageError(what + ": cannot parse \"" + text + "\" as a rational");
  }
}

std::optional<Rational> opt_rat(const std::string& text,
                                const std::string& what) {
  if (text.empty()) return std::nullopt;
  return parse_rat(text, what);
}

std::complex<double> parse_complex(const std::string& text,
                                   const std::string& what) {
  std::string s = text;
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError(what + ": cannot parse \"" + text + "\" as re[,im]");
  }
}

struct Range {
  Rational lo, hi;
  int steps = 1;
};

Range parse_range(const std::string& text, const std::string& what) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3)
    throw UsageError(what + ": expected lo:hi:steps, got \"" + text + "\"");
  Range r;
  r.lo = parse_rat(parts[0], what);
  r.hi = parse_rat(parts[1], what);
  try {
    r.steps = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw UsageError(what + ": bad step count \"" + parts[2] + "\"");
  }
  if (r.steps < 1) throw UsageError(what + ": need at least 1 step");
  return r;
}

Rational grid_point(const Range& r, int i) {
  if (r.steps == 1) return r.lo;
  return r.lo + (r.hi - r.lo) * Rational(i) / Rational(r.steps - 1);
}

json real_root_json(const RealRoot& root) {
  json j;
  if (root.is_exact()) {
    j["exact"] = rat_str(*root.exact);
  } else {
    j["interval"] = {rat_str(root.lo), rat_str(root.hi)};
  }
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

json complex_json(const std::complex<double>& z) {
  return json::array({z.real(), z.imag()});
}

// model file + optional exact parameter value, shared by most subcommands
struct ModelArgs {
  std::string path;
  std::string param_text;

  void attach(CLI::App* cmd) {
    cmd->add_option("model", path, "model descriptor JSON file")->required();
    cmd->add_option("--param", param_text,
                    "parameter value (rational, e.g. 1/2 or -0.5)");
  }
  ChainModel load() const { return load_model_file(path); }
  std::optional<Rational> value() const {
    return opt_rat(param_text, "--param");
  }
};

void preamble(CsvWriter& csv, const ChainModel& model,
              const std::string& command) {
  csv.comment("tool", "qhchain " QHCHAIN_VERSION);
  csv.comment("command", command);
  csv.comment("model_hash", model_hash_hex(model));
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
  std::string kind;
  int n = 4;
  std::string j_text = "1";
  std::string delta_text;
  std::string beta_text = "0";
  std::vector<std::string> t_texts;
  std::vector<std::string> j_over_texts;
  int bond = -1;
  std::string gamma_text;
  std::string out;
};

void run_generate(const GenerateOpts& o) {
  ChainModel model;
  if (o.kind == "yr") {
    YRSpec spec;
    spec.n = o.n;
    spec.beta = parse_rat(o.beta_text, "--beta");
    spec.bond = o.bond;
    if (!o.t_texts.empty()) {
      if (o.t_texts.size() == 1) {
        spec.t.assign(static_cast<std::size_t>(o.n - 1),
                      parse_rat(o.t_texts[0], "--t"));
      } else {
        for (const auto& t : o.t_texts) spec.t.push_back(parse_rat(t, "--t"));
      }
    }
    if (!o.j_over_texts.empty()) {
      std::vector<Rational> js;
      for (const auto& t : o.j_over_texts)
        js.push_back(parse_rat(t, "--j-list"));
      spec.j_override = std::move(js);
    }
    if (!o.gamma_text.empty())
      spec.gamma = parse_rat(o.gamma_text, "--gamma");
    model = build_yr(spec);
  } else {
    RoccatiSpec spec;
    spec.n = o.n;
    spec.j = parse_rat(o.j_text, "--j");
    if (!o.delta_text.empty())
      spec.delta = parse_rat(o.delta_text, "--delta");
    if (o.kind == "roccati-obc")
      spec.variant = RoccatiSpec::Variant::Obc;
    else if (o.kind == "roccati-pbc-naive")
      spec.variant = RoccatiSpec::Variant::PbcNaive;
    else if (o.kind == "roccati-pbc-corrected")
      spec.variant = RoccatiSpec::Variant::PbcCorrected;
    else
      throw UsageError("unknown model kind: " + o.kind);
    model = build_roccati(spec);
  }
  write_output(o.out, canonical_json(model_to_json(model)) + "\n");
}

// ---------------------------------------------------------------- spectrum

void run_spectrum(const ModelArgs& margs, const std::string& format,
                  double tol, const std::string& out) {
  ChainModel model = margs.load();
  SpectrumReport rep = eigen_general(model, margs.value(), tol);
  std::ostringstream os;
  if (format == "json") {
    json j;
    j["tool"] = "qhchain " QHCHAIN_VERSION;
    j["model_hash"] = model_hash_hex(model);
    j["exact_path"] = rep.exact_path;
    json evs = json::array();
    for (const auto& e : rep.eigenvalues) {
      json je;
      je["value"] = complex_json(e.value);
      je["is_real"] = e.is_real;
      if (e.exact_known) je["exact"] = rat_str(e.exact);
      je["algebraic_multiplicity"] = e.algebraic_multiplicity;
      je["geometric_multiplicity"] = e.geometric_multiplicity;
      je["multiplicity_uncertain"] = e.multiplicity_uncertain;
      je["residual"] = e.residual;
      evs.push_back(std::move(je));
    }
    j["eigenvalues"] = std::move(evs);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    CsvWriter csv(os);
    preamble(csv, model, "spectrum");
    if (!margs.param_text.empty()) csv.comment("param", margs.param_text);
    csv.row({"index", "re", "im", "is_real", "exact", "algebraic_multiplicity",
             "geometric_multiplicity", "residual"});
    int idx = 0;
    for (const auto& e : rep.eigenvalues) {
      csv.row({std::to_string(idx++), format_double(e.value.real()),
               format_double(e.value.imag()), e.is_real ? "1" : "0",
               e.exact_known ? rat_str(e.exact) : "",
               std::to_string(e.algebraic_multiplicity),
               std::to_string(e.geometric_multiplicity),
               format_double(e.residual)});
    }
  } else {
    throw UsageError("unknown format: " + format);
  }
  write_output(out, os.str());
}

// ------------------------------------------------------------------- gauge

void run_gauge(const ModelArgs& margs, double tol, const std::string& out) {
  ChainModel model = margs.load();
  GaugeReport rep = build_gauge(model, margs.value(), tol);
  json j;
  j["tool"] = "qhchain " QHCHAIN_VERSION;
  j["model_hash"] = model_hash_hex(model);
  j["verdict"] = verdict_name(rep.verdict);
  json ratios = json::array();
  for (const auto& r : rep.ratios) {
    json jr;
    jr["flag"] = ratio_flag_name(r.flag);
    jr["value"] = complex_json(r.approx);
    if (r.has_exact && r.exact.is_real()) jr["exact"] = rat_str(r.exact.re);
    ratios.push_back(std::move(jr));
  }
  j["ratios"] = std::move(ratios);
  if (rep.witness > 0) {
    j["witness_bond"] = rep.witness;
    j["reason"] = rep.reason;
  }
  if (rep.holonomy_checked) j["ring_product_is_one"] = rep.holonomy_ok;
  if (!rep.q.empty()) {
    j["q"] = rep.q;
    if (!rep.q_squared.empty()) {
      json q2 = json::array();
      for (const auto& v : rep.q_squared) q2.push_back(rat_str(v));
      j["q_squared"] = std::move(q2);
    }
    json ut = json::array(), lt = json::array();
    for (const auto& v : rep.upper_t) ut.push_back(complex_json(v));
    for (const auto& v : rep.lower_t) lt.push_back(complex_json(v));
    j["transformed_upper"] = std::move(ut);
    j["transformed_lower"] = std::move(lt);
    if (model.pbc()) {
      j["transformed_corner_upper"] = complex_json(rep.corner_upper_t);
      j["transformed_corner_lower"] = complex_json(rep.corner_lower_t);
    }
    Certificate cert = check_quasi_hermitian(model, margs.value(), tol);
    json jc;
    jc["holds"] = cert.holds;
    jc["residual"] = cert.residual;
    if (!cert.note.empty()) jc["note"] = cert.note;
    j["certificate"] = std::move(jc);
  }
  write_output(out, j.dump(2) + "\n");
}

// ------------------------------------------------------------ discriminant

void run_discriminant(const ModelArgs& margs, const std::string& format,
                      const std::string& out) {
  ChainModel model = margs.load();
  CharPoly cp = char_poly(model);
  if (cp.poly.degree() < 2)
    throw UsageError("discriminant needs at least two eigenvalues");
  Poly disc = discriminant_of_model(model);
  std::ostringstream os;
  if (format == "json") {
    json j;
    j["tool"] = "qhchain " QHCHAIN_VERSION;
    j["model_hash"] = model_hash_hex(model);
    j["degree"] = disc.degree();
    j["coefficients"] = poly_coeff_json(disc);
    if (cp.denom.degree() > 0) j["excluded"] = poly_coeff_json(cp.denom);
    os << j.dump(2) << "\n";
  } else {
    // exact coefficients, lowest degree first, one per line
    for (int k = 0; k <= disc.degree(); ++k) {
      GRat c = disc.coeff(static_cast<std::size_t>(k));
      os << (c.is_real() ? rat_str(c.re) : grat_str(c)) << "\n";
    }
    if (disc.is_zero()) os << "0\n";
  }
  write_output(out, os.str());
}

// ---------------------------------------------------------------------- ep

void run_ep(const ModelArgs& margs, const std::string& out) {
  ChainModel model = margs.load();
  EPReport rep = find_eps(model);
  json j;
  j["tool"] = "qhchain " QHCHAIN_VERSION;
  j["model_hash"] = model_hash_hex(model);
  j["discriminant_degree"] = rep.discriminant.degree();
  j["discriminant"] = poly_coeff_json(rep.discriminant);
  if (rep.excluded.degree() > 0) j["excluded"] = poly_coeff_json(rep.excluded);
  json cands = json::array();
  for (const auto& c : rep.candidates) {
    json jc;
    jc["location"] = real_root_json(c.location);
    jc["root_multiplicity"] = c.root_multiplicity;
    jc["eigenvalue"] = complex_json(c.eigenvalue);
    if (c.eigen_exact) jc["eigenvalue_exact"] = rat_str(c.eigen_rational);
    jc["algebraic_multiplicity"] = c.algebraic_multiplicity;
    jc["geometric_multiplicity"] = c.geometric_multiplicity;
    jc["ep_order"] = c.ep_order;
    jc["is_ep"] = c.is_ep;
    jc["certified"] = c.certified;
    cands.push_back(std::move(jc));
  }
  j["candidates"] = std::move(cands);
  write_output(out, j.dump(2) + "\n");
}

// ------------------------------------------------------------------- sweep

void run_sweep(const ModelArgs& margs, const std::string& range_text,
               double tol, const std::string& out) {
  ChainModel model = margs.load();
  if (!model.exact() || !model.has_parameter())
    throw UsageError("sweep needs an exact one-parameter model");
  Range range = parse_range(range_text, "--range");

  std::ostringstream os;
  CsvWriter csv(os);
  preamble(csv, model, "sweep");
  csv.comment("range", range_text);
  std::vector<std::string> header{"param"};
  for (int k = 1; k <= model.n; ++k) {
    header.push_back("re_" + std::to_string(k));
    header.push_back("im_" + std::to_string(k));
  }
  csv.row(header);

  std::vector<std::complex<double>> prev, vel;
  for (int i = 0; i < range.steps; ++i) {
    Rational x = grid_point(range, i);
    std::vector<std::complex<double>> vals;
    try {
      SpectrumReport rep = eigen_general(model, x, tol);
      vals = rep.values_with_multiplicity();
    } catch (const ComputeError& e) {
      std::cerr << "warning: skipping param " << rat_str(x) << ": " << e.what()
                << "\n";
      continue;
    }
    if (static_cast<int>(vals.size()) != model.n)
      throw ComputeError("eigenvalue count mismatch in sweep");
    if (!prev.empty()) {
      // continuity pairing: match each branch to the value nearest its
      // predicted position (previous + velocity)
      std::size_t n = vals.size();
      std::vector<std::complex<double>> predicted(n);
      for (std::size_t b = 0; b < n; ++b)
        predicted[b] = prev[b] + (vel.empty() ? std::complex<double>(0, 0) : vel[b]);
      struct Pair {
        double d;
        std::size_t branch, value;
      };
      std::vector<Pair> pairs;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < n; ++k)
          pairs.push_back({std::abs(predicted[b] - vals[k]), b, k});
      std::sort(pairs.begin(), pairs.end(),
                [](const Pair& a, const Pair& b) { return a.d < b.d; });
      std::vector<bool> busy_b(n, false), busy_v(n, false);
      std::vector<std::complex<double>> ordered(n);
      std::size_t assigned = 0;
      for (const Pair& p : pairs) {
        if (assigned == n) break;
        if (busy_b[p.branch] || busy_v[p.value]) continue;
        busy_b[p.branch] = true;
        busy_v[p.value] = true;
        ordered[p.branch] = vals[p.value];
        ++assigned;
      }
      vel.resize(n);
      for (std::size_t b = 0; b < n; ++b) vel[b] = ordered[b] - prev[b];
      vals = std::move(ordered);
    }
    prev = vals;

    std::vector<std::string> row{rat_str(x)};
    for (const auto& v : vals) {
      row.push_back(format_double(v.real()));
      row.push_back(format_double(v.imag()));
    }
    csv.row(row);
  }
  write_output(out, os.str());
}

// ------------------------------------------------------------------ evolve

void run_evolve(const ModelArgs& margs, const std::string& state_text,
                bool random_state, std::uint64_t seed,
                const std::string& times_text, const std::string& out) {
  ChainModel model = margs.load();
  std::vector<std::complex<double>> psi0;
  if (random_state) {
    SplitMix64 rng = stream_rng(seed, 0);
    for (int k = 0; k < model.n; ++k)
      psi0.emplace_back(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
  } else if (!state_text.empty()) {
    std::stringstream ss(state_text);
    std::string item;
    while (std::getline(ss, item, ';'))
      psi0.push_back(parse_complex(item, "--state"));
  } else {
    throw UsageError("provide --state or --random-state");
  }
  Range tr = parse_range(times_text, "--times");
  std::vector<double> times;
  for (int i = 0; i < tr.steps; ++i) times.push_back(rat_double(grid_point(tr, i)));

  EvolutionTrace trace = evolve(model, margs.value(), psi0, times);

  std::ostringstream os;
  CsvWriter csv(os);
  preamble(csv, model, "evolve");
  if (random_state) csv.comment("seed", std::to_string(seed));
  std::vector<std::string> header{"t"};
  for (int k = 1; k <= model.n; ++k) {
    header.push_back("re_psi_" + std::to_string(k));
    header.push_back("im_psi_" + std::to_string(k));
  }
  header.push_back("transformed_norm");
  header.push_back("eta_norm");
  csv.row(header);
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    std::vector<std::string> row{format_double(trace.times[i])};
    for (const auto& v : trace.states[i]) {
      row.push_back(format_double(v.real()));
      row.push_back(format_double(v.imag()));
    }
    row.push_back(format_double(trace.transformed_norms[i]));
    row.push_back(format_double(trace.eta_norms[i]));
    csv.row(row);
  }
  write_output(out, os.str());
}

// -------------------------------------------------------------- robustness

void run_robustness(int n, int trials, std::uint64_t seed, int bond,
                    const std::string& t_fixed_text, bool random_lower,
                    const std::string& format, const std::string& out) {
  RobustnessOptions opt;
  opt.n = n;
  opt.trials = trials;
  opt.seed = seed;
  opt.bond = bond;
  opt.t_fixed = parse_rat(t_fixed_text, "--t-fixed");
  opt.random_lower = random_lower;
  RobustnessSummary summary = robustness_sweep(opt);

  std::ostringstream os;
  if (format == "json") {
    json j;
    j["tool"] = "qhchain " QHCHAIN_VERSION;
    j["n"] = n;
    j["trials"] = trials;
    j["seed"] = seed;
    j["perturbed_bond"] = opt.bond < 0 ? n - 1 : opt.bond;
    j["t_fixed"] = rat_str(opt.t_fixed);
    j["random_lower"] = random_lower;
    j["violations"] = summary.violations;
    json rows = json::array();
    for (std::size_t i = 0; i < summary.trials.size(); ++i) {
      const auto& t = summary.trials[i];
      json jt;
      jt["trial"] = i;
      json ups = json::array(), los = json::array();
      for (const auto& v : t.upper) ups.push_back(rat_str(v));
      for (const auto& v : t.lower) los.push_back(rat_str(v));
      jt["upper"] = std::move(ups);
      jt["lower"] = std::move(los);
      jt["found"] = t.found;
      if (t.found) {
        jt["gamma_ep"] = real_root_json(t.gamma_ep);
        jt["bound_ok"] = t.satisfies_bound;
      }
      rows.push_back(std::move(jt));
    }
    j["trials_detail"] = std::move(rows);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    CsvWriter csv(os);
    csv.comment("tool", "qhchain " QHCHAIN_VERSION);
    csv.comment("command", "robustness");
    csv.comment("n", std::to_string(n));
    csv.comment("seed", std::to_string(seed));
    csv.comment("t_fixed", rat_str(opt.t_fixed));
    csv.row({"trial", "gamma_exact", "gamma_lo", "gamma_hi", "approx",
             "bound_ok"});
    for (std::size_t i = 0; i < summary.trials.size(); ++i) {
      const auto& t = summary.trials[i];
      if (!t.found) {
        csv.row({std::to_string(i), "", "", "", "", "0"});
        continue;
      }
      csv.row({std::to_string(i),
               t.gamma_ep.is_exact() ? rat_str(*t.gamma_ep.exact) : "",
               t.gamma_ep.is_exact() ? "" : rat_str(t.gamma_ep.lo),
               t.gamma_ep.is_exact() ? "" : rat_str(t.gamma_ep.hi),
               format_double(t.gamma_ep.approx),
               t.satisfies_bound ? "1" : "0"});
    }
  } else {
    throw UsageError("unknown format: " + format);
  }
  write_output(out, os.str());
}

// --------------------------------------------------------------- metric2x2

void run_metric2x2(const std::string& a_text, const std::string& b_text,
                   const std::string& gamma_text, const std::string& out) {
  std::complex<double> a, b;
  if (!gamma_text.empty()) {
    double g = std::stod(gamma_text);
    a = {0.0, g};
    b = {1.0, 0.0};
  } else {
    if (a_text.empty() || b_text.empty())
      throw UsageError("provide --a and --b, or --gamma");
    a = parse_complex(a_text, "--a");
    b = parse_complex(b_text, "--b");
  }
  Eigen::Matrix2cd h;
  h << a, b, std::conj(b), std::conj(a);
  MetricG g = metric_from_condition(a, b);
  json j;
  j["tool"] = "qhchain " QHCHAIN_VERSION;
  j["a"] = complex_json(a);
  j["b"] = complex_json(b);
  j["g12"] = complex_json(g.g12);
  j["g1"] = g.g1();
  j["g2"] = g.g2();
  j["positive_definite"] = g.positive_definite();
  if (g.positive_definite()) {
    Eigen::Matrix2cd sq = g.sqrt();
    Eigen::Matrix2cd ht = hermitize_via_G(h, g);
    auto mat_json = [](const Eigen::Matrix2cd& m) {
      return json::array({json::array({complex_json(m(0, 0)), complex_json(m(0, 1))}),
                          json::array({complex_json(m(1, 0)), complex_json(m(1, 1))})});
    };
    j["g_sqrt"] = mat_json(sq);
    j["h_tilde"] = mat_json(ht);
  }
  write_output(out, j.dump(2) + "\n");
}

// ------------------------------------------------------------ series-check

void run_series(const ModelArgs& margs, const std::string& point_text,
                int side, int points, const std::string& x0_text,
                const std::string& ratio_text, const std::string& format,
                const std::string& out) {
  ChainModel model = margs.load();
  SeriesOptions opt;
  opt.point = parse_rat(point_text, "--point");
  opt.side = side;
  opt.points = points;
  opt.x0 = parse_rat(x0_text, "--x0");
  opt.ratio = parse_rat(ratio_text, "--ratio");
  SeriesCheck sc = series_check(model, opt);

  std::ostringstream os;
  if (format == "json") {
    json j;
    j["tool"] = "qhchain " QHCHAIN_VERSION;
    j["model_hash"] = model_hash_hex(model);
    j["point"] = rat_str(sc.point);
    j["side"] = sc.side;
    j["offsets"] = sc.offsets;
    j["max_imag"] = sc.max_imag;
    json branches = json::array();
    for (std::size_t b = 0; b < sc.branch_values.size(); ++b) {
      json jb;
      jb["branch"] = b;
      jb["values"] = sc.branch_values[b];
      jb["exponent"] = sc.fits[b].exponent;
      jb["coefficient"] = sc.fits[b].coefficient;
      jb["fit_residual"] = sc.fits[b].residual;
      jb["reliable"] = sc.fits[b].reliable;
      branches.push_back(std::move(jb));
    }
    j["branches"] = std::move(branches);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    CsvWriter csv(os);
    preamble(csv, model, "series-check");
    csv.comment("point", rat_str(sc.point));
    csv.comment("side", std::to_string(sc.side));
    for (std::size_t b = 0; b < sc.fits.size(); ++b) {
      csv.comment("fit_exponent_" + std::to_string(b),
                  format_double(sc.fits[b].exponent));
      csv.comment("fit_coefficient_" + std::to_string(b),
                  format_double(sc.fits[b].coefficient));
    }
    std::vector<std::string> header{"offset"};
    for (std::size_t b = 0; b < sc.branch_values.size(); ++b)
      header.push_back("e_" + std::to_string(b + 1));
    header.push_back("max_imag");
    csv.row(header);
    for (std::size_t i = 0; i < sc.offsets.size(); ++i) {
      std::vector<std::string> row{format_double(sc.offsets[i])};
      for (std::size_t b = 0; b < sc.branch_values.size(); ++b)
        row.push_back(format_double(sc.branch_values[b][i]));
      row.push_back(format_double(sc.max_imag[i]));
      csv.row(row);
    }
  } else {
    throw UsageError("unknown format: " + format);
  }
  write_output(out, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact + floating-point toolkit for non-Hermitian chain models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qhchain " QHCHAIN_VERSION);

  double tol = 1e-10;
  app.add_option("--tol", tol, "numeric tolerance override")
      ->capture_default_str();

  // generate
  GenerateOpts gen;
  auto* cg = app.add_subcommand("generate", "emit a model descriptor");
  cg->add_option("kind", gen.kind,
                 "roccati-obc | roccati-pbc-naive | roccati-pbc-corrected | yr")
      ->required();
  cg->add_option("--n", gen.n, "number of sites")->capture_default_str();
  cg->add_option("--j", gen.j_text, "hop scale (rational)")
      ->capture_default_str();
  cg->add_option("--delta", gen.delta_text,
                 "asymmetry value; omit to keep it symbolic");
  cg->add_option("--beta", gen.beta_text, "diagonal shift (rational)")
      ->capture_default_str();
  cg->add_option("--t", gen.t_texts,
                 "forward hops: one value for all bonds or N-1 values");
  cg->add_option("--j-list", gen.j_over_texts,
                 "reverse hops off the perturbed bond (N-1 values)");
  cg->add_option("--bond", gen.bond, "perturbed bond index (default N-1)");
  cg->add_option("--gamma", gen.gamma_text,
                 "perturbation value; omit to keep it symbolic");
  cg->add_option("--out", gen.out, "output file (default stdout)");
  cg->callback([&] { run_generate(gen); });

  // spectrum
  ModelArgs spec_m;
  std::string spec_format = "csv", spec_out;
  auto* cs = app.add_subcommand("spectrum", "eigenvalues of a model");
  spec_m.attach(cs);
  cs->add_option("--format", spec_format, "csv | json")->capture_default_str();
  cs->add_option("--out", spec_out, "output file (default stdout)");
  cs->callback([&] { run_spectrum(spec_m, spec_format, tol, spec_out); });

  // gauge
  ModelArgs gauge_m;
  std::string gauge_out;
  auto* cga = app.add_subcommand("gauge", "diagonal gauge report");
  gauge_m.attach(cga);
  cga->add_option("--out", gauge_out, "output file (default stdout)");
  cga->callback([&] { run_gauge(gauge_m, tol, gauge_out); });

  // discriminant
  ModelArgs disc_m;
  std::string disc_format = "plain", disc_out;
  auto* cd = app.add_subcommand("discriminant",
                                "exact eigenvalue-collision polynomial");
  disc_m.attach(cd);
  cd->add_option("--format", disc_format, "plain | json")
      ->capture_default_str();
  cd->add_option("--out", disc_out, "output file (default stdout)");
  cd->callback([&] { run_discriminant(disc_m, disc_format, disc_out); });

  // ep
  ModelArgs ep_m;
  std::string ep_out;
  auto* ce = app.add_subcommand("ep", "locate and classify eigenvalue collisions");
  ep_m.attach(ce);
  ce->add_option("--out", ep_out, "output file (default stdout)");
  ce->callback([&] { run_ep(ep_m, ep_out); });

  // sweep
  ModelArgs sweep_m;
  std::string sweep_range, sweep_out;
  auto* cw = app.add_subcommand("sweep", "eigenvalue branches over a parameter grid");
  sweep_m.attach(cw);
  cw->add_option("--range", sweep_range, "lo:hi:steps")->required();
  cw->add_option("--out", sweep_out, "output file (default stdout)");
  cw->callback([&] { run_sweep(sweep_m, sweep_range, tol, sweep_out); });

  // evolve
  ModelArgs ev_m;
  std::string ev_state, ev_times = "0:10:101", ev_out;
  bool ev_random = false;
  std::uint64_t ev_seed = 1;
  auto* cv = app.add_subcommand("evolve", "metric-preserving time evolution");
  ev_m.attach(cv);
  cv->add_option("--state", ev_state, "initial state re,im;re,im;...");
  cv->add_flag("--random-state", ev_random, "draw a random initial state");
  cv->add_option("--seed", ev_seed, "RNG seed for --random-state")
      ->capture_default_str();
  cv->add_option("--times", ev_times, "t0:t1:steps")->capture_default_str();
  cv->add_option("--out", ev_out, "output file (default stdout)");
  cv->callback(
      [&] { run_evolve(ev_m, ev_state, ev_random, ev_seed, ev_times, ev_out); });

  // robustness
  int rb_n = 4, rb_trials = 50, rb_bond = -1;
  std::uint64_t rb_seed = 1;
  std::string rb_tfixed = "1", rb_format = "csv", rb_out;
  bool rb_random_lower = false;
  auto* cr = app.add_subcommand("robustness",
                                "collision location under random couplings");
  cr->add_option("--n", rb_n, "number of sites")->capture_default_str();
  cr->add_option("--trials", rb_trials, "number of random trials")
      ->capture_default_str();
  cr->add_option("--seed", rb_seed, "RNG seed")->capture_default_str();
  cr->add_option("--bond", rb_bond, "perturbed bond (default N-1)");
  cr->add_option("--t-fixed", rb_tfixed, "fixed forward hop on that bond")
      ->capture_default_str();
  cr->add_flag("--random-lower", rb_random_lower,
               "draw reverse hops independently as well");
  cr->add_option("--format", rb_format, "csv | json")->capture_default_str();
  cr->add_option("--out", rb_out, "output file (default stdout)");
  cr->callback([&] {
    run_robustness(rb_n, rb_trials, rb_seed, rb_bond, rb_tfixed,
                   rb_random_lower, rb_format, rb_out);
  });

  // metric2x2
  std::string m2_a, m2_b, m2_gamma, m2_out;
  auto* cm = app.add_subcommand(
      "metric2x2", "unit-diagonal metric and hermitization for 2x2 models");
  cm->add_option("--a", m2_a, "diagonal entry re[,im]");
  cm->add_option("--b", m2_b, "off-diagonal entry re[,im]");
  cm->add_option("--gamma", m2_gamma, "shorthand for a=i*gamma, b=1");
  cm->add_option("--out", m2_out, "output file (default stdout)");
  cm->callback([&] { run_metric2x2(m2_a, m2_b, m2_gamma, m2_out); });

  // series-check
  ModelArgs se_m;
  std::string se_point, se_x0 = "1/100", se_ratio = "1/2",
              se_format = "json", se_out;
  int se_side = 1, se_points = 12;
  auto* cse = app.add_subcommand("series-check",
                                 "power-law branch fits near a parameter point");
  se_m.attach(cse);
  cse->add_option("--point", se_point, "expansion point (rational)")
      ->required();
  cse->add_option("--side", se_side, "+1 or -1 approach direction")
      ->capture_default_str();
  cse->add_option("--points", se_points, "grid size")->capture_default_str();
  cse->add_option("--x0", se_x0, "largest offset (rational)")
      ->capture_default_str();
  cse->add_option("--ratio", se_ratio, "grid shrink factor (rational)")
      ->capture_default_str();
  cse->add_option("--format", se_format, "csv | json")->capture_default_str();
  cse->add_option("--out", se_out, "output file (default stdout)");
  cse->callback([&] {
    run_series(se_m, se_point, se_side, se_points, se_x0, se_ratio, se_format,
               se_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ComputeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
