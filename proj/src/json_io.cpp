#include "tamelift/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tamelift/poly_io.hpp"

namespace tamelift {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    bad(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

Rational rational_from_json(const Json& v) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error&) {
      bad("malformed rational \"" + v.get<std::string>() + "\"");
    }
  }
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  bad("rationals are written as integers or \"a/b\" strings");
}

Monomial exponents_from_json(const Json& e, std::size_t n_vars) {
  if (!e.is_array() || e.size() != n_vars) bad("exponent vector has the wrong length");
  Monomial m(n_vars);
  for (std::size_t i = 0; i < n_vars; ++i) {
    if (!e[i].is_number_integer() || e[i].get<long long>() < 0) bad("exponents must be nonnegative integers");
    m[i] = static_cast<Monomial::exponent_type>(e[i].get<long long>());
  }
  return m;
}

template <class C>
Json poly_json(const Poly<C>& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json e = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) e.push_back(m[i]);
    terms.push_back({{"exp", e}, {"coeff", coeff_traits<C>::to_string(c)}});
  }
  return {{"n_vars", f.n_vars()}, {"terms", terms}};
}

Json hbar_coeff_json(const QHbar& c) {
  Json o = Json::object();
  for (int k = 0; k <= c.max_power(); ++k) {
    if (!c.coefficient(k).is_zero()) o[std::to_string(k)] = c.coefficient(k).str();
  }
  return o;
}

template <class C, class CoeffFn>
Json weyl_json(const WeylElt<C>& u, CoeffFn coeff) {
  const std::size_t n = u.n();
  Json terms = Json::array();
  for (const auto& [m, c] : u.terms()) {
    Json xe = Json::array(), ye = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      xe.push_back(m[i]);
      ye.push_back(m[n + i]);
    }
    terms.push_back({{"x_exp", xe}, {"y_exp", ye}, {"coeff", coeff(c)}});
  }
  return {{"n", n}, {"terms", terms}};
}

int hbar_key(const std::string& k) {
  std::size_t pos = 0;
  int v = -1;
  try {
    v = std::stoi(k, &pos);
  } catch (const std::exception&) {
  }
  if (pos != k.size() || v < 0) bad("hbar exponents are nonnegative integer keys");
  return v;
}

}  // namespace

Json to_json(const QPoly& f) { return poly_json(f); }
Json to_json(const FpPoly& f) { return poly_json(f); }

QPoly poly_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n_vars");
  if (j.contains("text")) {
    if (!j.at("text").is_string()) bad("\"text\" must be a string");
    return parse_poly(j.at("text").get<std::string>(), n);
  }
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  QPoly f(n);
  for (const auto& t : terms) f.add_term(exponents_from_json(field(t, "exp"), n), rational_from_json(field(t, "coeff")));
  return f;
}

Json to_json(const QEndo& phi) {
  Json images = Json::array();
  for (const auto& g : phi.images()) images.push_back(to_json(g));
  return {{"n_vars", phi.n_vars()}, {"images", images}};
}

Json to_json(const Endo<ModInt>& phi) {
  Json images = Json::array();
  for (const auto& g : phi.images()) images.push_back(to_json(g));
  return {{"n_vars", phi.n_vars()}, {"p", phi.ring().modulus}, {"images", images}};
}

QEndo endo_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n_vars");
  const Json& images = field(j, "images");
  if (!images.is_array() || images.size() != n) bad("an endomorphism needs one image per variable");
  std::vector<QPoly> out;
  for (const auto& g : images) {
    // images may omit their own arity
    Json gj = g;
    if (gj.is_string()) gj = Json{{"text", g}};
    if (!gj.contains("n_vars")) gj["n_vars"] = n;
    out.push_back(poly_from_json(gj));
    if (out.back().n_vars() != n) throw Error(ErrorCode::ArityMismatch, "image arity differs from n_vars");
  }
  return QEndo(std::move(out));
}

Json to_json(const QTameWord& w) {
  Json factors = Json::array();
  for (const auto& e : w.factors()) {
    if (e.is_linear()) {
      const QMatrix& a = e.as_linear().a;
      Json rows = Json::array();
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < a.cols(); ++k) row.push_back(a(i, k).str());
        rows.push_back(row);
      }
      factors.push_back({{"linear", rows}});
    } else {
      const auto& t = e.as_transvection();
      factors.push_back({{"transvection", {{"target", t.target}, {"poly", to_json(t.f)}}}});
    }
  }
  return {{"n_vars", w.n_vars()}, {"word", factors}};
}

QTameWord word_from_json(const Json& j) {
  const Json& factors = field(j, "word");
  if (!factors.is_array()) bad("\"word\" must be an array");
  std::size_t n = j.contains("n_vars") ? size_field(j, "n_vars") : 0;
  if (n == 0) {
    // infer the arity from the first factor
    for (const auto& f : factors) {
      if (f.contains("linear")) n = f.at("linear").size();
      else if (f.contains("transvection") && field(f.at("transvection"), "poly").contains("n_vars")) {
        n = size_field(f.at("transvection").at("poly"), "n_vars");
      }
      if (n != 0) break;
    }
  }
  if (n == 0) bad("cannot determine the number of variables of the word; add \"n_vars\"");
  QTameWord w(n);
  for (const auto& f : factors) {
    if (f.contains("linear")) {
      const Json& rows = f.at("linear");
      if (!rows.is_array() || rows.size() != n) bad("linear factor must be square of size n_vars");
      QMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) bad("linear factor must be square of size n_vars");
        for (std::size_t k = 0; k < n; ++k) {
          a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rational_from_json(rows[i][k]);
        }
      }
      w.push_back(QElementary::linear(std::move(a)));
    } else if (f.contains("transvection")) {
      const Json& t = f.at("transvection");
      Json pj = field(t, "poly");
      if (pj.is_string()) pj = Json{{"text", pj}};
      if (!pj.contains("n_vars")) pj["n_vars"] = n;
      w.push_back(QElementary::transvection(size_field(t, "target"), poly_from_json(pj)));
    } else {
      bad("each factor is {\"linear\": ...} or {\"transvection\": ...}");
    }
  }
  return w;
}

Json to_json(const HbarWeyl& u) {
  Json j = weyl_json(u, hbar_coeff_json);
  j["ring"] = "Q[h]";
  if (u.ring().order != HbarRing<Rational>::kUntruncated) j["K"] = u.ring().order;
  return j;
}

Json to_json(const FpWeyl& u) {
  Json j = weyl_json(u, [](const ModInt& c) { return c.str(); });
  const std::uint64_t m = u.ring().modulus;
  std::uint64_t p = m;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (q * q == m && is_prime(q)) p = q;
  }
  j["ring"] = p == m ? "Fp" : "Zp2";
  j["p"] = p;
  return j;
}

HbarWeyl hbar_weyl_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  if (j.contains("ring") && j.at("ring") != "Q[h]") bad("only Q[h] Weyl elements are read");
  const int order = j.contains("K") ? static_cast<int>(size_field(j, "K")) : HbarRing<Rational>::kUntruncated;
  const HbarRing<Rational> ring = hbar_ring(order);
  HbarWeyl u(n, ring, QHbar::power(ring, 1));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  for (const auto& t : terms) {
    const Monomial xm = exponents_from_json(field(t, "x_exp"), n);
    const Monomial ym = exponents_from_json(field(t, "y_exp"), n);
    Monomial m(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = xm[i];
      m[n + i] = ym[i];
    }
    QHbar c(ring);
    const Json& cj = field(t, "coeff");
    if (cj.is_object()) {
      for (const auto& [k, v] : cj.items()) c.add(hbar_key(k), rational_from_json(v));
    } else {
      c.add(0, rational_from_json(cj));
    }
    u.add_term(m, c);
  }
  return u;
}

Json to_json(const HbarWeylAuto& psi) {
  Json images = Json::array();
  for (const auto& u : psi.images()) images.push_back(to_json(u));
  Json j{{"n", psi.n()}, {"ring", "Q[h]"}, {"images", images}};
  if (psi.ring().order != HbarRing<Rational>::kUntruncated) j["K"] = psi.ring().order;
  return j;
}

Json to_json(const FpWeylAuto& psi) {
  Json images = Json::array();
  for (const auto& u : psi.images()) images.push_back(to_json(u));
  const Json first = images.at(0);
  return {{"n", psi.n()}, {"ring", first.at("ring")}, {"p", first.at("p")}, {"images", images}};
}

HbarWeylAuto hbar_auto_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const Json& images = field(j, "images");
  if (!images.is_array() || images.size() != 2 * n) bad("a Weyl automorphism needs 2n images");
  std::vector<HbarWeyl> out;
  for (const auto& u : images) {
    Json uj = u;
    if (!uj.contains("n")) uj["n"] = n;
    if (j.contains("K") && !uj.contains("K")) uj["K"] = j.at("K");
    out.push_back(hbar_weyl_from_json(uj));
  }
  return HbarWeylAuto(std::move(out));
}

Json to_json(const HbarPoly& f) {
  Json coeffs = Json::object();
  for (const auto& [k, g] : f.coeffs()) coeffs[std::to_string(k)] = to_json(g);
  return {{"n", f.n_vars() / 2}, {"coeffs", coeffs}};
}

HbarPoly parse_hbar_poly(const std::string& text, std::size_t n_vars) {
  VarNames names = default_var_names(n_vars);
  names.push_back("h");
  const QPoly g = parse_poly(text, names);
  HbarPoly f(n_vars);
  for (const auto& [m, c] : g.terms()) {
    Monomial base(n_vars);
    for (std::size_t i = 0; i < n_vars; ++i) base[i] = m[i];
    f.add(m[n_vars], QPoly::term(base, c));
  }
  return f;
}

HbarPoly hbar_poly_from_json(const Json& j, std::size_t n_vars) {
  if (j.is_string()) return parse_hbar_poly(j.get<std::string>(), n_vars);
  const std::size_t n = size_field(j, "n");
  if (2 * n != n_vars) throw Error(ErrorCode::ArityMismatch, "hbar polynomial has the wrong number of variables");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) bad("\"coeffs\" must be an object keyed by hbar exponent");
  HbarPoly f(n_vars);
  for (const auto& [k, v] : coeffs.items()) {
    Json pj = v;
    if (pj.is_string()) pj = Json{{"text", v}};
    if (!pj.contains("n_vars")) pj["n_vars"] = n_vars;
    f.add(static_cast<unsigned>(hbar_key(k)), poly_from_json(pj));
  }
  return f;
}

std::string to_string(const HbarPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [k, g] : f.coeffs()) {
    if (g.is_zero()) continue;
    std::string part = "(" + to_string(g) + ")";
    if (k == 1) part += "*h";
    if (k > 1) part += "*h^" + std::to_string(k);
    out += out.empty() ? part : " + " + part;
  }
  return out.empty() ? "0" : out;
}

Json to_json(const NormalizeResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back({{"defect_order", s.defect_order}, {"q", to_json(s.gauge.q)}});
  const auto d = defect_order(r.result);
  return {{"steps", steps}, {"result", to_json(r.result)}, {"defect_order", d ? Json(*d) : Json("none")}};
}

Json to_json(const ApproxResult& r) {
  Json iterations = Json::array();
  for (const auto& it : r.iterations) iterations.push_back({{"height", it.height}, {"prefix_length", it.prefix_length}});
  return {{"word", to_json(r.word)},
          {"achieved_height", r.achieved.is_infinite() ? Json("inf") : Json(r.achieved.value())},
          {"exact", r.exact},
          {"target", r.target},
          {"seed", r.seed},
          {"iterations", iterations}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

}  // namespace tamelift
