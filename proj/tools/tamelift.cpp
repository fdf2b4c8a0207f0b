#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tamelift/json_io.hpp"
#include "tamelift/poly_io.hpp"
#include "tamelift/suite.hpp"

using namespace tamelift;

namespace {

struct Flags {
  std::string input;
  std::string word;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> p;
  std::optional<int> height;
  std::optional<int> order;
  std::optional<std::size_t> n;
  std::string product = "normal";
  bool pretty = false;
  bool symplectic = false;
  bool restrict_center = false;
};

/// Usage problems found after CLI11 parsing; exit code 2.
struct UsageError {
  std::string detail;
};

std::string require_input(const Flags& f) {
  if (f.input.empty()) throw UsageError{"--input is required"};
  return f.input;
}

QTameWord read_word(const std::string& path) { return word_from_json(read_json_file(path)); }

/// Map from a file holding Endo JSON or TameWord JSON.
QEndo read_map(const std::string& path) {
  const Json j = read_json_file(path);
  return j.contains("word") ? tame_evaluate(word_from_json(j)) : endo_from_json(j);
}

std::string render_weyl(const Json& u) {
  const std::size_t n = u.at("n").get<std::size_t>();
  const VarNames names = weyl_var_names(n);
  std::string out;
  for (const auto& t : u.at("terms")) {
    Monomial m(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = t.at("x_exp")[i].get<Monomial::exponent_type>();
      m[n + i] = t.at("y_exp")[i].get<Monomial::exponent_type>();
    }
    std::string coeff;
    const Json& c = t.at("coeff");
    if (c.is_object()) {
      for (const auto& [k, v] : c.items()) {
        const std::string s = v.get<std::string>();
        const std::string h = k == "0" ? "" : k == "1" ? "h" : "h^" + k;
        coeff += (coeff.empty() ? "" : " + ") + (h.empty() ? s : s == "1" ? h : s + "*" + h);
      }
      if (c.size() > 1) coeff = "(" + coeff + ")";
    } else {
      coeff = c.get<std::string>();
    }
    const std::string mono = m.is_one() ? "" : monomial_str(m, names);
    std::string term = mono.empty() ? coeff : coeff == "1" ? mono : coeff + "*" + mono;
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

/// Replaces polynomial and Weyl-element objects by their text forms.
Json prettify(const Json& j) {
  if (j.is_object() && j.contains("p") && j.contains("n_vars") && j.contains("images")) {
    // center maps act on X = x^p, Y = y^p
    Json images = Json::array();
    const VarNames names = weyl_var_names(j.at("n_vars").get<std::size_t>() / 2);
    for (const auto& g : j.at("images")) images.push_back(to_string(poly_from_json(g), names));
    return {{"n_vars", j.at("n_vars")}, {"p", j.at("p")}, {"images", images}};
  }
  if (j.is_object()) {
    if (j.contains("terms") && j.contains("n_vars")) return to_string(poly_from_json(j));
    if (j.contains("terms") && j.contains("n") && !j.contains("images")) return render_weyl(j);
    Json out = Json::object();
    for (const auto& [k, v] : j.items()) out[k] = prettify(v);
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(prettify(v));
    return out;
  }
  return j;
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? prettify(j).dump(2) : j.dump()) << "\n"; }

void emit_error(std::string_view code, const std::string& detail) {
  std::cout << Json{{"error", code}, {"detail", detail}}.dump() << "\n";
}

std::uint64_t require_prime_flag(const Flags& f) {
  if (!f.p) throw UsageError{"--p is required"};
  require_prime(*f.p);
  return *f.p;
}

Json run_verify(const Flags& f) {
  const QEndo phi = read_map(require_input(f));
  if (phi.n_vars() % 2 != 0) throw Error(ErrorCode::ArityMismatch, "symplectic checks need 2n variables");
  return {{"symplectic", is_symplectomorphism(PoissonStructure(phi.n_vars() / 2), phi)},
          {"jacobian_one", jacobian_is_unit_constant(phi)}};
}

Json run_compose(const Flags& f) {
  const Json j = read_json_file(require_input(f));
  if (j.contains("word")) return to_json(tame_evaluate(word_from_json(j)));
  if (!j.contains("maps") || !j.at("maps").is_array() || j.at("maps").empty()) {
    throw Error(ErrorCode::InvalidInput, "compose expects a word or {\"maps\": [...]}");
  }
  std::optional<QEndo> acc;
  for (const auto& m : j.at("maps")) {
    const QEndo phi = m.contains("word") ? tame_evaluate(word_from_json(m)) : endo_from_json(m);
    acc = acc ? endo_compose(*acc, phi) : phi;
  }
  return to_json(*acc);
}

Json run_invert(const Flags& f) {
  const QTameWord w = read_word(require_input(f));
  const QTameWord inv = tame_invert(w);
  return {{"word", to_json(inv)}, {"map", to_json(tame_evaluate(inv))}};
}

Json run_lift(const Flags& f) {
  const HbarWeylAuto psi = lift_tame(read_word(require_input(f)));
  if (f.order) {
    if (*f.order < 0) throw UsageError{"--order must be nonnegative"};
    return to_json(truncate_auto(psi, *f.order));
  }
  return to_json(psi);
}

Json run_limit(const Flags& f) { return to_json(classical_limit(hbar_auto_from_json(read_json_file(require_input(f))))); }

Json run_star(const Flags& f) {
  const Json j = read_json_file(require_input(f));
  if (!j.contains("n") || !j.at("n").is_number_unsigned()) throw Error(ErrorCode::InvalidInput, "star input needs \"n\"");
  if (!j.contains("f") || !j.contains("g")) throw Error(ErrorCode::InvalidInput, "star input needs \"f\" and \"g\"");
  const std::size_t nv = 2 * j.at("n").get<std::size_t>();
  const StarOrdering ord = f.product == "moyal" ? StarOrdering::Moyal : StarOrdering::Normal;
  return to_json(star(hbar_poly_from_json(j.at("f"), nv), hbar_poly_from_json(j.at("g"), nv), ord));
}

Json run_gauge(const Flags& f) {
  Json j = read_json_file(require_input(f));
  if (f.order) j["K"] = *f.order;
  if (!j.contains("K")) throw UsageError{"a truncation order is needed: \"K\" in the input or --order"};
  return to_json(normalize(hbar_auto_from_json(j)));
}

Json run_modp(const Flags& f) {
  const std::uint64_t p = require_prime_flag(f);
  const std::string path = !f.word.empty() ? f.word : require_input(f);
  const FpWeylAuto psi = lift_tame(reduce_mod_p(read_word(path), p));
  return f.restrict_center ? to_json(restrict_to_center(psi)) : to_json(psi);
}

Json run_center(const Flags& f) {
  const std::uint64_t p = require_prime_flag(f);
  const std::size_t n = f.n.value_or(1);
  if (n == 0) throw UsageError{"--n must be positive"};
  const auto e = static_cast<unsigned>(p);
  Json gens = Json::array(), central = Json::array(), bracket = Json::array();
  const VarNames names = weyl_var_names(n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    gens.push_back(names[i] + "^" + std::to_string(p));
    central.push_back(is_central(modular_weyl_generator(n, p, i).pow(e)));
    Json row = Json::array();
    for (std::size_t k = 0; k < 2 * n; ++k) {
      const FpPoly b = induced_poisson_bracket(modular_weyl_generator(n, p, i).pow(e), modular_weyl_generator(n, p, k).pow(e));
      row.push_back(to_string(b));
    }
    bracket.push_back(row);
  }
  return {{"p", p}, {"n", n}, {"generators", gens}, {"central", central}, {"bracket", bracket}};
}

Json run_approximate(const Flags& f) {
  if (!f.height) throw UsageError{"--height is required"};
  if (!f.seed) throw UsageError{"--seed is required"};
  return to_json(approximate(read_map(require_input(f)), *f.height, *f.seed));
}

Json run_suite(const Flags& f, bool& ok) {
  if (!f.seed) throw UsageError{"--seed is required"};
  Json props = Json::array();
  ok = true;
  for (const auto& r : run_property_suite(*f.seed)) {
    ok = ok && r.ok();
    props.push_back({{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"note", r.note}});
  }
  return {{"seed", *f.seed}, {"properties", props}, {"ok", ok}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tame symplectomorphisms, Weyl-algebra lifts, star products and height approximation."};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_flag("--pretty", f.pretty, "Human-readable rendering");

  auto input = [&](CLI::App* c) { c->add_option("--input", f.input, "Input JSON file"); };
  auto* verify = app.add_subcommand("verify", "Check that a map is a symplectomorphism with unit Jacobian");
  input(verify);
  verify->add_flag("--symplectic", f.symplectic, "Report the bracket check (always on)");
  auto* compose = app.add_subcommand("compose", "Evaluate a word, or compose a list of maps left to right");
  input(compose);
  auto* invert = app.add_subcommand("invert", "Invert a tame word");
  input(invert);
  auto* lift = app.add_subcommand("lift", "Lift a tame word to a Weyl-algebra automorphism");
  input(lift);
  lift->add_option("--order", f.order, "Truncate mod hbar^{K+1}");
  auto* limit = app.add_subcommand("limit", "Classical limit of a Weyl automorphism");
  input(limit);
  auto* star_cmd = app.add_subcommand("star", "Star product of two hbar polynomials");
  input(star_cmd);
  star_cmd->add_option("--product", f.product, "normal or moyal")->check(CLI::IsMember({"normal", "moyal"}));
  auto* gauge = app.add_subcommand("gauge-normalize", "Remove Y-free defects of an n = 1 truncated automorphism");
  input(gauge);
  gauge->add_option("--order", f.order, "Truncation order K");
  auto* modp = app.add_subcommand("modp", "Reduce a lifted word mod p");
  input(modp);
  modp->add_option("--word", f.word, "Tame word JSON file");
  modp->add_option("--p", f.p, "Prime");
  modp->add_flag("--restrict-center", f.restrict_center, "Report the induced map on the center");
  auto* center = app.add_subcommand("center", "Central generators and their induced bracket in characteristic p");
  center->add_option("--p", f.p, "Prime");
  center->add_option("--n", f.n, "Degrees of freedom (default 1)");
  auto* approx = app.add_subcommand("approximate", "Tame word agreeing with a map through a target height");
  input(approx);
  approx->add_option("--height", f.height, "Target height K");
  approx->add_option("--seed", f.seed, "Seed (recorded in the result)");
  auto* suite = app.add_subcommand("suite", "Run every property suite");
  suite->add_option("--seed", f.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("UsageError", e.what());
    return 2;
  }

  try {
    Json out;
    int code = 0;
    if (*verify) out = run_verify(f);
    else if (*compose) out = run_compose(f);
    else if (*invert) out = run_invert(f);
    else if (*lift) out = run_lift(f);
    else if (*limit) out = run_limit(f);
    else if (*star_cmd) out = run_star(f);
    else if (*gauge) out = run_gauge(f);
    else if (*modp) out = run_modp(f);
    else if (*center) out = run_center(f);
    else if (*approx) out = run_approximate(f);
    else {
      bool ok = false;
      out = run_suite(f, ok);
      code = ok ? 0 : 1;
    }
    emit(out, f.pretty);
    return code;
  } catch (const UsageError& e) {
    emit_error("UsageError", e.detail);
    return 2;
  } catch (const Error& e) {
    emit_error(error_code_name(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error("InternalError", e.what());
    return 1;
  }
}
