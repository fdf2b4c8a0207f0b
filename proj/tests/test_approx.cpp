#include <random>

#include "doctest.h"
#include "tamelift/approx.hpp"
#include "tamelift/corpus.hpp"
#include "tamelift/poly_io.hpp"
#include "test_support.hpp"

using namespace tamelift;
using tamelift::testing::random_poly;

namespace {

QPoly P1(const char* s) { return parse_poly(s, 2); }
QEndo E1(const char* a, const char* b) { return QEndo({P1(a), P1(b)}); }

QVector vec(std::initializer_list<int> v) {
  QVector r(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (int c : v) r(i++) = Rational(c);
  return r;
}

/// {f, g} from the hand-written constant table, independent of PoissonStructure.
QPoly table_bracket(std::size_t n, const QPoly& f, const QPoly& g) {
  QPoly r(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    for (std::size_t j = 0; j < 2 * n; ++j) {
      const int b = (i == n + j ? 1 : 0) - (i + n == j ? 1 : 0);
      if (b != 0) r += partial_derivative(f, i) * partial_derivative(g, j) * Rational(b);
    }
  }
  return r;
}

/// id + X_H with X_H(g) = {H, g} from the table.
QEndo id_plus_field(std::size_t n, const QPoly& h) {
  std::vector<QPoly> images;
  for (std::size_t j = 0; j < 2 * n; ++j) {
    const QPoly v = QPoly::variable(2 * n, j);
    images.push_back(v + table_bracket(n, h, v));
  }
  return QEndo(std::move(images));
}

QTameWord prefix(const QTameWord& w, std::size_t len) {
  QTameWord r(w.n_vars());
  for (std::size_t i = 0; i < len; ++i) r.push_back(w.factors()[i]);
  return r;
}

void check_word(const QTameWord& w) {
  const PoissonStructure P(w.n_vars() / 2);
  for (const auto& e : w.factors()) CHECK(elementary_is_symplectic(P, e));
}

}  // namespace

TEST_CASE("linear part examples") {
  const PoissonStructure P(1);
  CHECK(linear_part(P, E1("x1 + p1^2", "p1 + x1^3")) == identity_matrix<Rational>(2));
  QMatrix d = QMatrix::Zero(2, 2);
  d(0, 0) = Rational(2);
  d(1, 1) = Rational(Integer(1), Integer(2));
  CHECK(linear_part(P, E1("2*x1", "p1/2")) == d);
  CHECK_THROWS_AS(linear_part(P, E1("2*x1", "p1")), Error);
  try {
    linear_part(P, E1("2*x1", "p1"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymplecticLinear);
  }
  CHECK_THROWS_AS(linear_part(P, E1("x1 + 1", "p1")), Error);
}

TEST_CASE("deviation examples") {
  const Deviation d = deviation(E1("x1 + p1^2", "p1"));
  CHECK(d.height == 2);
  CHECK(d.components == std::vector<QPoly>{P1("p1^2"), P1("0")});
  const Deviation d2 = deviation(E1("x1 + p1^2 + p1^3", "p1 + x1^3"));
  CHECK(d2.height == 2);
  CHECK(d2.components == std::vector<QPoly>{P1("p1^2"), P1("0")});
  CHECK_THROWS_AS(deviation(QEndo::identity(2)), Error);
  try {
    deviation(QEndo::identity(2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IsIdentity);
  }
}

TEST_CASE("Hamiltonian of a deviation") {
  const PoissonStructure P(1);
  // {H, x} = dH/dp = p^2 and {H, p} = -dH/dx = 0 give H = p^3/3
  const QPoly h = hamiltonian_of({2, {P1("p1^2"), P1("0")}}, P);
  CHECK(h == P1("p1^3/3"));
  CHECK(table_bracket(1, h, P1("x1")) == P1("p1^2"));
  CHECK(table_bracket(1, h, P1("p1")).is_zero());
  CHECK(hamiltonian_of({2, {P1("0"), P1("-3*x1^2")}}, P) == P1("x1^3"));
  CHECK_THROWS_AS(hamiltonian_of({1, {P1("x1"), P1("0")}}, P), Error);
  try {
    hamiltonian_of({2, {P1("x1*p1"), P1("0")}}, P);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonHamiltonian);
  }

  // random Hamiltonian fields come back to their Hamiltonian
  std::mt19937_64 rng(151);
  for (std::size_t n : {1u, 2u}) {
    const PoissonStructure Pn(n);
    for (int t = 0; t < 20; ++t) {
      const QPoly g = homogeneous_component(random_poly<Rational>(rng, 2 * n, 4, 6, {}, true), 4);
      if (g.is_zero()) continue;
      Deviation d{3, {}};
      for (std::size_t j = 0; j < 2 * n; ++j) d.components.push_back(table_bracket(n, g, QPoly::variable(2 * n, j)));
      CHECK(hamiltonian_of(d, Pn) == g);
    }
  }
}

TEST_CASE("Waring decompositions") {
  const QPoly x2p = P1("x1^2*p1");
  // reference identity from the binomial expansion
  CHECK(x2p == P1("((p1 + x1)^3 + (p1 - x1)^3 - 2*p1^3)/6"));
  const auto w = waring(x2p);
  CHECK(waring_expand(w, 2, 3) == x2p);
  for (const auto& t : w) CHECK(Integer(6) % t.c.denominator() == 0);
  const auto ws = waring_sampled(x2p, 7);
  CHECK(waring_expand(ws, 2, 3) == x2p);
  CHECK(waring_sampled(x2p, 7).size() == ws.size());

  for (const auto& cube : {waring(P1("x1^3")), waring_sampled(P1("x1^3"), 1)}) {
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].c == Rational(1));
    CHECK(cube[0].form == vec({1, 0}));
  }
  CHECK(waring(P1("0")).empty());
  CHECK(waring_sampled(P1("0"), 1).empty());
  CHECK_THROWS_AS(waring(P1("x1^2 + p1^3")), Error);
  CHECK_THROWS_AS(waring_sampled(P1("x1^2 + p1^3"), 1), Error);

  std::mt19937_64 rng(157);
  for (std::size_t n : {1u, 2u}) {
    for (unsigned d : {2u, 3u, 4u}) {
      for (int t = 0; t < 5; ++t) {
        const QPoly h = homogeneous_component(random_poly<Rational>(rng, 2 * n, d, 8, {}, true), d);
        CHECK(waring_expand(waring(h), 2 * n, d) == h);
        CHECK(waring_expand(waring_sampled(h, rng), 2 * n, d) == h);
        // forms stay on the support of H
        for (const auto& term : waring(h)) {
          for (Eigen::Index i = 0; i < term.form.size(); ++i) {
            bool used = false;
            for (const auto& [m, c] : h.terms()) used = used || m[static_cast<std::size_t>(i)] != 0;
            if (!used) CHECK(term.form(i).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("flow words") {
  const PoissonStructure P(1);
  const QTameWord a = flow_word(Rational(1), vec({1, 0}), 3, P);
  REQUIRE(a.size() == 1);
  CHECK(tame_evaluate(a) == E1("x1", "p1 - 3*x1^2"));
  CHECK(tame_evaluate(a) == id_plus_field(1, P1("x1^3")));

  const QTameWord b = flow_word(Rational(1), vec({0, 1}), 2, P);
  REQUIRE(b.size() == 1);
  CHECK(tame_evaluate(b) == E1("x1 + 2*p1", "p1"));

  const QTameWord c = flow_word(Rational(1), vec({1, 1}), 3, P);
  check_word(c);
  CHECK(tame_evaluate(c) == id_plus_field(1, P1("(x1 + p1)^3")));
  CHECK_THROWS_AS(flow_word(Rational(1), vec({0, 0}), 3, P), Error);

  std::mt19937_64 rng(163);
  std::uniform_int_distribution<int> entry(-3, 3);
  const PoissonStructure P2(2);
  for (int t = 0; t < 20; ++t) {
    QVector f = vec({entry(rng), entry(rng), entry(rng), entry(rng)});
    bool zero = true;
    for (Eigen::Index i = 0; i < 4; ++i) zero = zero && f(i).is_zero();
    if (zero) continue;
    const QMatrix s = symplectic_completion(P2, f);
    CHECK(is_symplectic_matrix(P2, s));
    CHECK(s.col(0) == f);
    const Rational cc(Integer(entry(rng) == 0 ? 1 : 2), Integer(3));
    const QTameWord w = flow_word(cc, f, 3, P2);
    check_word(w);
    CHECK(tame_evaluate(w) == id_plus_field(2, linear_form_poly(f).pow(3) * cc));
  }
}

TEST_CASE("approximating known maps") {
  {
    const QEndo sigma = E1("x1", "p1 - 3*x1^2");
    const auto r = approximate(sigma, 8, 1);
    CHECK(r.word.size() == 1);
    CHECK(r.achieved.is_infinite());
    CHECK(r.exact);
  }
  {
    // two monomial flows with a mixed term
    const QEndo sigma = endo_compose(id_plus_field(1, P1("x1^3")), id_plus_field(1, P1("p1^3")));
    CHECK(is_symplectomorphism(PoissonStructure(1), sigma));
    const auto r = approximate(sigma, 5, 3);
    CHECK(r.achieved > 5);
    check_word(r.word);
  }
  {
    CorpusSpec spec;
    spec.seed = 167;
    spec.max_degree_product = 4;
    for (const auto& w : generate_corpus(spec, 8)) {
      const QEndo sigma = tame_evaluate(w);
      const auto r = approximate(sigma, 6, 5);
      CHECK(r.achieved > 6);
      check_word(r.word);
    }
  }
  CHECK_THROWS_AS(approximate(E1("2*x1", "p1"), 4, 1), Error);
}

TEST_CASE("approximation certificates on flow compositions") {
  std::mt19937_64 rng(173);
  for (int t = 0; t < 8; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 2);
    const PoissonStructure P(n);
    const QEndo sigma = random_flow_composition(rng, n, 4, 2);
    const auto r = approximate(sigma, 6, static_cast<std::uint64_t>(t));
    CHECK(r.achieved > 6);
    check_word(r.word);
    // agreement through degree 6 is all a height above 6 needs
    CHECK(height_of(tame_evaluate(r.word, 6), sigma) > 6);
    if (r.word.size() <= 24) {
      const QEndo tau = tame_evaluate(r.word);
      CHECK(is_symplectomorphism(P, tau));
      CHECK(jacobian_is_unit_constant(tau));
    }
    // deviation heights strictly increase, and each prefix is certified at its height
    for (std::size_t i = 0; i < r.iterations.size(); ++i) {
      if (i > 0) CHECK(r.iterations[i].height > r.iterations[i - 1].height);
      const auto [h, exact] = approximation_height(prefix(r.word, r.iterations[i].prefix_length), sigma, 7);
      CHECK(h == r.iterations[i].height);
      CHECK(exact);
    }
    // same seed, same word
    if (t < 4) CHECK(approximate(sigma, 6, static_cast<std::uint64_t>(t)).word == r.word);
  }
}
