#include "doctest.h"
#include "qhchain/model.hpp"

using namespace qhchain;
using nlohmann::json;

namespace {
Poly from_ints(std::initializer_list<long> cs) {
  std::vector<GRat> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(v);
}

json basic_descriptor() {
  return json{{"n", 3},
              {"boundary", "obc"},
              {"diag", {0, 0, 0}},
              {"upper", {1, "3/2"}},
              {"lower", {1, "1/2"}}};
}
}  // namespace

TEST_CASE("rational function normalization and arithmetic") {
  Poly x = Poly::variable();
  RatFunc f(x * x - Poly(1), x - Poly(1));
  RatFunc g = f.normalized();
  CHECK(g.is_poly());             // common factor cancels
  CHECK(g.num == x + Poly(1));
  CHECK_THROWS_AS(RatFunc(Poly(1), Poly()), ComputeError);
  // constant denominators fold into the numerator
  RatFunc h(Poly(3), Poly(2));
  CHECK(h.is_poly());
  CHECK(h.as_constant() == GRat(Rational(3, 2)));
  RatFunc p = f * g;
  CHECK(p == RatFunc((x + Poly(1)) * (x + Poly(1))) * RatFunc(x * x - Poly(1), x * x - Poly(1)));
}

TEST_CASE("rational function evaluation and poles") {
  Poly x = Poly::variable();
  RatFunc f(Poly(1), x - Poly(1));
  CHECK(f.eval(GRat(Rational(3))) == GRat(Rational(1, 2)));
  CHECK_THROWS_AS(f.eval(GRat(Rational(1))), ComputeError);
  auto z = f.eval(std::complex<double>(2.0, 0.0));
  CHECK(std::abs(z - std::complex<double>(1, 0)) < 1e-15);
}

TEST_CASE("reality test conjugates coefficients") {
  Poly x = Poly::variable();
  CHECK(RatFunc(x + Poly(2)).is_real());
  std::vector<GRat> cc{GRat(Rational(0), Rational(1))};
  CHECK_FALSE(RatFunc(Poly(cc)).is_real());
}

TEST_CASE("descriptor round-trip is byte-stable") {
  ChainModel m = load_model(basic_descriptor());
  CHECK(m.n == 3);
  CHECK_FALSE(m.pbc());
  CHECK(m.exact());
  json first = model_to_json(m);
  ChainModel again = load_model(first);
  json second = model_to_json(again);
  CHECK(first.dump() == second.dump());
  CHECK(model_hash(m) == model_hash(again));
}

TEST_CASE("entry forms: integers, fractions, pairs, polynomials") {
  json d{{"n", 2},
         {"boundary", "obc"},
         {"parameter", "g"},
         {"diag", {0, "1/2"}},
         {"upper", {json{{"poly", {1, -1}}}}},
         {"lower", {json::array({0, 1})}}};
  ChainModel m = load_model(d);
  CHECK(m.diag[1].as_constant() == GRat(Rational(1, 2)));
  CHECK(m.upper[0].as_poly() == from_ints({1, -1}));
  CHECK(m.lower[0].as_constant() == GRat(Rational(0), Rational(1)));
  CHECK(m.has_parameter());
}

TEST_CASE("float entries make a numeric model, mixing is rejected") {
  json d{{"n", 2},
         {"boundary", "obc"},
         {"diag", {0.5, -0.25}},
         {"upper", {1.5}},
         {"lower", {0.75}}};
  ChainModel m = load_model(d);
  CHECK_FALSE(m.exact());
  CHECK(m.ndiag[0] == std::complex<double>(0.5, 0.0));

  json bad = d;
  bad["upper"] = {json{{"poly", {1, 2}}}};
  CHECK_THROWS_AS(load_model(bad), UsageError);
}

TEST_CASE("validation rejects malformed chains") {
  // ring closure needs at least three sites
  json ring{{"n", 2},
            {"boundary", "pbc"},
            {"diag", {0, 0}},
            {"upper", {1}},
            {"lower", {1}},
            {"corner", {{"h_1n", 1}, {"h_n1", 1}}}};
  CHECK_THROWS_AS(load_model(ring), UsageError);

  // complex diagonal
  json cdiag{{"n", 2},
             {"boundary", "obc"},
             {"diag", {json::array({0, 1}), 0}},
             {"upper", {1}},
             {"lower", {1}}};
  CHECK_THROWS_AS(load_model(cdiag), UsageError);

  // corner entries without pbc
  json corner = basic_descriptor();
  corner["corner"] = {{"h_1n", 1}, {"h_n1", 1}};
  CHECK_THROWS_AS(load_model(corner), UsageError);

  // symbolic entry without a declared parameter
  json sym{{"n", 2},
           {"boundary", "obc"},
           {"diag", {0, 0}},
           {"upper", {json{{"poly", {1, -1}}}}},
           {"lower", {1}}};
  CHECK_THROWS_AS(load_model(sym), UsageError);

  // wrong bond count
  json wrong = basic_descriptor();
  wrong["upper"] = {1};
  CHECK_THROWS_AS(load_model(wrong), UsageError);
}

TEST_CASE("denominators are confined to corner entries") {
  json d{{"n", 3},
         {"boundary", "pbc"},
         {"parameter", "d"},
         {"diag", {0, 0, 0}},
         {"upper", {json{{"poly", {1, -1}}}, json{{"poly", {1, -1}}}}},
         {"lower", {json{{"poly", {1, 1}}}, json{{"poly", {1, 1}}}}},
         {"corner",
          {{"h_1n", json{{"poly", {1, 1}}}},
           {"h_n1", json{{"poly", {1, 3, 3, 1}}, {"den", {1, -2, 1}}}}}}};
  ChainModel m = load_model(d);
  CHECK_FALSE(m.corner_lower.is_poly());
  json bond = d;
  bond["upper"][0] = json{{"poly", {1, 0}}, {"den", {1, 1}}};
  CHECK_THROWS_AS(load_model(bond), UsageError);
}

TEST_CASE("dense matrices require or forbid the parameter correctly") {
  json d{{"n", 2},
         {"boundary", "obc"},
         {"parameter", "g"},
         {"diag", {0, 0}},
         {"upper", {json{{"poly", {0, 1}}}}},
         {"lower", {1}}};
  ChainModel m = load_model(d);
  CHECK_THROWS_AS(m.dense_numeric(), UsageError);  // parameter required
  auto h = m.dense_numeric(std::complex<double>(2.0, 0.0));
  CHECK(h(0, 1) == std::complex<double>(2, 0));
  CHECK(h(1, 0) == std::complex<double>(1, 0));
  auto he = m.dense_exact(Rational(1, 2));
  CHECK(he[0][1] == GRat(Rational(1, 2)));

  ChainModel plain = load_model(basic_descriptor());
  CHECK_THROWS_AS(plain.dense_numeric(std::complex<double>(1.0, 0.0)),
                  UsageError);  // no parameter declared
  auto hp = plain.dense_numeric();
  CHECK(hp.rows() == 3);
}

TEST_CASE("hash distinguishes models and ignores formatting") {
  ChainModel a = load_model(basic_descriptor());
  json d = basic_descriptor();
  d["upper"][1] = "6/4";  // same value, different spelling
  ChainModel b = load_model(d);
  CHECK(model_hash(a) == model_hash(b));
  d["upper"][1] = "5/4";
  ChainModel c = load_model(d);
  CHECK(model_hash(a) != model_hash(c));
  CHECK(model_hash_hex(a).size() == 16);
}

TEST_CASE("missing or unknown keys fail loudly") {
  json d = basic_descriptor();
  d.erase("lower");
  CHECK_THROWS_AS(load_model(d), UsageError);
  json u = basic_descriptor();
  u["boundary"] = "ring";
  CHECK_THROWS_AS(load_model(u), UsageError);
  CHECK_THROWS_AS(load_model_file("/nonexistent/path.json"), UsageError);
}
