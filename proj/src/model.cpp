#include "qhchain/model.hpp"

#include <fstream>

#include "qhchain/io_util.hpp"

namespace qhchain {

using nlohmann::json;

RatFunc::RatFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw ComputeError("zero denominator");
  if (den.degree() == 0) {
    // fold constant denominators into the numerator
    num = num * (GRat(1) / den.coeff(0));
    den = Poly(1);
  }
}

Poly RatFunc::as_poly() const {
  if (!is_poly()) throw UsageError("entry has a nonconstant denominator");
  return num;
}

GRat RatFunc::as_constant() const {
  if (!is_constant()) throw UsageError("entry is not constant");
  return num.coeff(0);
}

RatFunc RatFunc::conjugated() const {
  return RatFunc(num.conjugated(), den.conjugated());
}

bool RatFunc::is_real() const { return conjugated() == *this; }

GRat RatFunc::eval(const GRat& x) const {
  GRat d = den.eval(x);
  if (d.is_zero()) throw ComputeError("parameter value hits a pole");
  return num.eval(x) / d;
}

std::complex<double> RatFunc::eval(const std::complex<double>& x) const {
  std::complex<double> d = den.eval(x);
  if (d == std::complex<double>(0.0, 0.0))
    throw ComputeError("parameter value hits a pole");
  return num.eval(x) / d;
}

RatFunc RatFunc::normalized() const {
  if (num.is_zero()) return RatFunc(Poly(), Poly(1));
  Poly g = Poly::gcd(num, den);
  Poly n = num.divide_exact(g);
  Poly d = den.divide_exact(g);
  GRat scale = d.constant().is_zero() ? d.lc() : d.constant();
  n = n * (GRat(1) / scale);
  d = d * (GRat(1) / scale);
  return RatFunc(std::move(n), std::move(d));
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num * b.num, a.den * b.den);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num * b.den == b.num * a.den;
}

void ChainModel::validate() const {
  if (n < 1) throw UsageError("model size must be at least 1");
  if (pbc() && n < 3)
    throw UsageError("ring closure needs at least 3 sites");
  auto expect = [](std::size_t got, std::size_t want, const char* what) {
    if (got != want)
      throw UsageError(std::string(what) + ": expected " +
                       std::to_string(want) + " entries, got " +
                       std::to_string(got));
  };
  std::size_t un = static_cast<std::size_t>(n);
  if (exact()) {
    expect(diag.size(), un, "diag");
    expect(upper.size(), un - 1, "upper");
    expect(lower.size(), un - 1, "lower");
    for (std::size_t j = 0; j < diag.size(); ++j) {
      if (!diag[j].is_real())
        throw UsageError("diag[" + std::to_string(j) + "]: diagonal entries must be real");
      if (!diag[j].is_poly())
        throw UsageError("diag[" + std::to_string(j) + "]: only corner entries may carry a denominator");
    }
    for (std::size_t j = 0; j + 1 < un; ++j) {
      if (!upper[j].is_poly())
        throw UsageError("upper[" + std::to_string(j) + "]: only corner entries may carry a denominator");
      if (!lower[j].is_poly())
        throw UsageError("lower[" + std::to_string(j) + "]: only corner entries may carry a denominator");
    }
    bool symbolic = corner_upper.den.degree() > 0 || corner_lower.den.degree() > 0;
    for (const auto* vecs : {&diag, &upper, &lower})
      for (const auto& e : *vecs)
        if (e.num.degree() > 0) symbolic = true;
    if (corner_upper.num.degree() > 0 || corner_lower.num.degree() > 0)
      symbolic = true;
    if (symbolic && !has_parameter())
      throw UsageError("polynomial entries need a declared parameter");
    if (!pbc() && (!corner_upper.is_zero() || !corner_lower.is_zero()))
      throw UsageError("corner entries are only valid with periodic boundary");
  } else {
    expect(ndiag.size(), un, "diag");
    expect(nupper.size(), un - 1, "upper");
    expect(nlower.size(), un - 1, "lower");
    for (std::size_t j = 0; j < ndiag.size(); ++j)
      if (ndiag[j].imag() != 0.0)
        throw UsageError("diag[" + std::to_string(j) + "]: diagonal entries must be real");
    if (!pbc() && (ncorner_upper != std::complex<double>(0.0, 0.0) ||
                   ncorner_lower != std::complex<double>(0.0, 0.0)))
      throw UsageError("corner entries are only valid with periodic boundary");
  }
}

Eigen::MatrixXcd ChainModel::dense_numeric(
    std::optional<std::complex<double>> param) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  if (exact()) {
    std::complex<double> x(0.0, 0.0);
    if (has_parameter()) {
      if (!param) throw UsageError("model has a parameter; supply a value");
      x = *param;
    } else if (param) {
      throw UsageError("model has no parameter");
    }
    for (int j = 0; j < n; ++j) m(j, j) = diag[j].eval(x);
    for (int j = 0; j + 1 < n; ++j) {
      m(j, j + 1) = upper[j].eval(x);
      m(j + 1, j) = lower[j].eval(x);
    }
    if (pbc()) {
      m(0, n - 1) = corner_upper.eval(x);
      m(n - 1, 0) = corner_lower.eval(x);
    }
  } else {
    if (param) throw UsageError("numeric models take no parameter value");
    for (int j = 0; j < n; ++j) m(j, j) = ndiag[j];
    for (int j = 0; j + 1 < n; ++j) {
      m(j, j + 1) = nupper[j];
      m(j + 1, j) = nlower[j];
    }
    if (pbc()) {
      m(0, n - 1) = ncorner_upper;
      m(n - 1, 0) = ncorner_lower;
    }
  }
  return m;
}

std::vector<std::vector<GRat>> ChainModel::dense_exact(
    std::optional<Rational> param) const {
  if (!exact()) throw UsageError("numeric models have no exact realization");
  GRat x(0);
  if (has_parameter()) {
    if (!param) throw UsageError("model has a parameter; supply a value");
    x = GRat(*param);
  } else if (param) {
    throw UsageError("model has no parameter");
  }
  std::vector<std::vector<GRat>> m(
      static_cast<std::size_t>(n),
      std::vector<GRat>(static_cast<std::size_t>(n), GRat()));
  for (int j = 0; j < n; ++j) m[j][j] = diag[j].eval(x);
  for (int j = 0; j + 1 < n; ++j) {
    m[j][j + 1] = upper[j].eval(x);
    m[j + 1][j] = lower[j].eval(x);
  }
  if (pbc()) {
    m[0][static_cast<std::size_t>(n - 1)] = corner_upper.eval(x);
    m[static_cast<std::size_t>(n - 1)][0] = corner_lower.eval(x);
  }
  return m;
}

namespace {

bool contains_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_array() || j.is_object())
    for (const auto& el : j)
      if (contains_float(el)) return true;
  return false;
}

bool contains_poly(const json& j) {
  if (j.is_object() && j.contains("poly")) return true;
  if (j.is_array())
    for (const auto& el : j)
      if (contains_poly(el)) return true;
  return false;
}

Rational scalar_rational(const json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_number_unsigned())
    return rat_parse(j.dump());
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw UsageError(where + ": expected an integer or a rational string");
}

GRat scalar_grat(const json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2)
      throw UsageError(where + ": complex entries are [re, im] pairs");
    return GRat(scalar_rational(j[0], where + "[0]"),
                scalar_rational(j[1], where + "[1]"));
  }
  return GRat(scalar_rational(j, where));
}

Poly coeff_list(const json& j, const std::string& where) {
  if (!j.is_array())
    throw UsageError(where + ": expected a coefficient array");
  std::vector<GRat> coeffs;
  for (std::size_t k = 0; k < j.size(); ++k)
    coeffs.push_back(scalar_grat(j[k], where + "[" + std::to_string(k) + "]"));
  return Poly(std::move(coeffs));
}

RatFunc exact_entry(const json& j, const std::string& where, bool corner) {
  if (j.is_object()) {
    if (!j.contains("poly"))
      throw UsageError(where + ": object entries need a \"poly\" key");
    for (const auto& [key, value] : j.items()) {
      (void)value;
      if (key != "poly" && key != "den")
        throw UsageError(where + ": unknown key \"" + key + "\"");
    }
    Poly num = coeff_list(j["poly"], where + ".poly");
    if (j.contains("den")) {
      if (!corner)
        throw UsageError(where + ": denominators are only valid on corner entries");
      Poly den = coeff_list(j["den"], where + ".den");
      if (den.is_zero()) throw UsageError(where + ".den: zero denominator");
      return RatFunc(std::move(num), std::move(den));
    }
    return RatFunc(std::move(num));
  }
  return RatFunc(scalar_grat(j, where));
}

std::complex<double> numeric_scalar(const json& j, const std::string& where) {
  auto one = [&](const json& v, const std::string& w) -> double {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return rat_double(rat_parse(v.get<std::string>()));
    throw UsageError(w + ": expected a number");
  };
  if (j.is_array()) {
    if (j.size() != 2)
      throw UsageError(where + ": complex entries are [re, im] pairs");
    return {one(j[0], where + "[0]"), one(j[1], where + "[1]")};
  }
  return {one(j, where), 0.0};
}

json rational_json(const Rational& r) {
  if (rat_is_integer(r) && rat_abs(r) < Rational(static_cast<long>(1) << 53))
    return json(static_cast<std::int64_t>(rat_double(r)));
  return json(rat_str(r));
}

json grat_json(const GRat& v) {
  if (v.is_real()) return rational_json(v.re);
  return json::array({rational_json(v.re), rational_json(v.im)});
}

json poly_json(const Poly& p) {
  json arr = json::array();
  for (int k = 0; k <= p.degree(); ++k)
    arr.push_back(grat_json(p.coeff(static_cast<std::size_t>(k))));
  if (p.is_zero()) arr.push_back(0);
  return arr;
}

json exact_entry_json(const RatFunc& f) {
  if (f.is_constant()) return grat_json(f.as_constant());
  json obj;
  obj["poly"] = poly_json(f.num);
  if (!f.is_poly()) obj["den"] = poly_json(f.den);
  return obj;
}

json numeric_entry_json(const std::complex<double>& v) {
  if (v.imag() == 0.0) return json(v.real());
  return json::array({json(v.real()), json(v.imag())});
}

}  // namespace

ChainModel load_model(const json& descriptor) {
  if (!descriptor.is_object()) throw UsageError("descriptor must be an object");
  for (const char* key : {"n", "boundary", "diag", "upper", "lower"})
    if (!descriptor.contains(key))
      throw UsageError(std::string("descriptor is missing \"") + key + "\"");

  ChainModel m;
  if (!descriptor["n"].is_number_integer())
    throw UsageError("n: expected an integer");
  m.n = descriptor["n"].get<int>();
  std::string boundary = descriptor["boundary"].get<std::string>();
  if (boundary == "obc")
    m.boundary = Boundary::Obc;
  else if (boundary == "pbc")
    m.boundary = Boundary::Pbc;
  else
    throw UsageError("boundary: expected \"obc\" or \"pbc\"");
  if (descriptor.contains("parameter")) {
    m.parameter = descriptor["parameter"].get<std::string>();
    if (m.parameter.empty()) throw UsageError("parameter: empty name");
  }
  if (m.boundary == Boundary::Pbc) {
    if (!descriptor.contains("corner"))
      throw UsageError("corner: required for periodic boundary");
    if (!descriptor["corner"].contains("h_1n") ||
        !descriptor["corner"].contains("h_n1"))
      throw UsageError("corner: needs h_1n and h_n1");
  } else if (descriptor.contains("corner")) {
    throw UsageError("corner: only valid for periodic boundary");
  }

  bool any_float = contains_float(descriptor["diag"]) ||
                   contains_float(descriptor["upper"]) ||
                   contains_float(descriptor["lower"]);
  bool any_poly = contains_poly(descriptor["diag"]) ||
                  contains_poly(descriptor["upper"]) ||
                  contains_poly(descriptor["lower"]);
  if (descriptor.contains("corner")) {
    any_float = any_float || contains_float(descriptor["corner"]);
    any_poly = any_poly || contains_poly(descriptor["corner"]);
  }
  if (any_float && any_poly)
    throw UsageError("float entries cannot be mixed with polynomial entries");
  m.kind = any_float ? EntryKind::Numeric : EntryKind::Exact;

  auto entry_list = [&](const char* key, std::size_t count, bool corner,
                        auto&& parse) {
    const json& arr = descriptor[key];
    if (!arr.is_array() || arr.size() != count)
      throw UsageError(std::string(key) + ": expected an array of " +
                       std::to_string(count) + " entries");
    for (std::size_t j = 0; j < count; ++j)
      parse(arr[j], std::string(key) + "[" + std::to_string(j) + "]", corner);
  };

  std::size_t un = static_cast<std::size_t>(std::max(m.n, 1));
  if (m.kind == EntryKind::Exact) {
    entry_list("diag", un, false, [&](const json& j, const std::string& w, bool c) {
      m.diag.push_back(exact_entry(j, w, c));
    });
    entry_list("upper", un - 1, false, [&](const json& j, const std::string& w, bool c) {
      m.upper.push_back(exact_entry(j, w, c));
    });
    entry_list("lower", un - 1, false, [&](const json& j, const std::string& w, bool c) {
      m.lower.push_back(exact_entry(j, w, c));
    });
    if (m.pbc()) {
      m.corner_upper = exact_entry(descriptor["corner"]["h_1n"], "corner.h_1n", true);
      m.corner_lower = exact_entry(descriptor["corner"]["h_n1"], "corner.h_n1", true);
    }
  } else {
    entry_list("diag", un, false, [&](const json& j, const std::string& w, bool) {
      m.ndiag.push_back(numeric_scalar(j, w));
    });
    entry_list("upper", un - 1, false, [&](const json& j, const std::string& w, bool) {
      m.nupper.push_back(numeric_scalar(j, w));
    });
    entry_list("lower", un - 1, false, [&](const json& j, const std::string& w, bool) {
      m.nlower.push_back(numeric_scalar(j, w));
    });
    if (m.pbc()) {
      m.ncorner_upper = numeric_scalar(descriptor["corner"]["h_1n"], "corner.h_1n");
      m.ncorner_lower = numeric_scalar(descriptor["corner"]["h_n1"], "corner.h_n1");
    }
  }
  m.validate();
  return m;
}

ChainModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open model file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw UsageError("model file " + path + ": " + e.what());
  }
  return load_model(j);
}

json model_to_json(const ChainModel& model) {
  model.validate();
  json out;
  out["n"] = model.n;
  out["boundary"] = model.pbc() ? "pbc" : "obc";
  if (model.has_parameter()) out["parameter"] = model.parameter;
  json diag = json::array(), upper = json::array(), lower = json::array();
  if (model.exact()) {
    for (const auto& e : model.diag) diag.push_back(exact_entry_json(e));
    for (const auto& e : model.upper) upper.push_back(exact_entry_json(e));
    for (const auto& e : model.lower) lower.push_back(exact_entry_json(e));
    if (model.pbc()) {
      out["corner"] = {{"h_1n", exact_entry_json(model.corner_upper)},
                       {"h_n1", exact_entry_json(model.corner_lower)}};
    }
  } else {
    for (const auto& e : model.ndiag) diag.push_back(numeric_entry_json(e));
    for (const auto& e : model.nupper) upper.push_back(numeric_entry_json(e));
    for (const auto& e : model.nlower) lower.push_back(numeric_entry_json(e));
    if (model.pbc()) {
      out["corner"] = {{"h_1n", numeric_entry_json(model.ncorner_upper)},
                       {"h_n1", numeric_entry_json(model.ncorner_lower)}};
    }
  }
  out["diag"] = diag;
  out["upper"] = upper;
  out["lower"] = lower;
  return out;
}

std::uint64_t model_hash(const ChainModel& model) {
  return fnv1a64(model_to_json(model).dump());
}

std::string model_hash_hex(const ChainModel& model) {
  return to_hex(model_hash(model));
}

}  // namespace qhchain
