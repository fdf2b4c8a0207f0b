#include <random>

#include "doctest.h"
#include "tamelift/corpus.hpp"
#include "tamelift/poly_io.hpp"
#include "tamelift/tame.hpp"
#include "test_support.hpp"

using namespace tamelift;
using tamelift::testing::random_poly;

namespace {

QPoly P1(const char* s) { return parse_poly(s, 2); }
QPoly P2(const char* s) { return parse_poly(s, 4); }
QEndo E1(const char* a, const char* b) { return QEndo({P1(a), P1(b)}); }

/// Bracket straight from the constant table: sum_{i,j} b(i,j) f_i g_j, with
/// b written out by hand rather than taken from PoissonStructure.
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

QMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  QMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (int v : r) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("bracket examples") {
  const PoissonStructure P1s(1), P2s(2);
  CHECK(P1s.bracket(P1("x1"), P1("p1")) == P1("-1"));
  CHECK(P1s.bracket(P1("x1^2"), P1("p1")) == P1("-2*x1"));
  CHECK(P2s.bracket(P2("x1"), P2("p2")).is_zero());
  CHECK_THROWS_AS(P1s.bracket(P2("x1"), P2("p1")), Error);
}

TEST_CASE("bracket agrees with the constant table on random pairs") {
  std::mt19937_64 rng(31);
  for (std::size_t n : {1u, 2u}) {
    const PoissonStructure P(n);
    for (int t = 0; t < 30; ++t) {
      const auto f = random_poly<Rational>(rng, 2 * n, 4, 5, {}, true);
      const auto g = random_poly<Rational>(rng, 2 * n, 4, 5, {}, true);
      CHECK(P.bracket(f, g) == table_bracket(n, f, g));
      CHECK(P.bracket(f, g) == -P.bracket(g, f));
    }
  }
}

TEST_CASE("compose and apply examples") {
  const QEndo phi = E1("x1 + p1^2", "p1");
  CHECK(endo_compose(phi, QEndo::identity(2)) == phi);
  CHECK(endo_compose(phi, E1("x1", "p1 + x1^2")) == E1("x1 + (p1 + x1^2)^2", "p1 + x1^2"));
  CHECK(endo_apply(phi, P1("x1")) == P1("x1 + p1^2"));
  CHECK_THROWS_AS(endo_compose(phi, QEndo::identity(4)), Error);
}

TEST_CASE("height and distance examples") {
  const QEndo id = QEndo::identity(2);
  CHECK(height_of(E1("x1 + x1^3", "p1"), id) == 3);
  CHECK(distance_str(height_of(E1("x1 + x1^3", "p1"), id)) == "e^-3");
  CHECK(height_of(id, id).is_infinite());
  CHECK(distance_str(height_of(id, id)) == "0");
  CHECK(height_of(E1("x1 + 1", "p1"), id) == 0);
  CHECK(distance_str(height_of(E1("x1 + 1", "p1"), id)) == "1");
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937_64 rng(37);
  auto rand_endo = [&] {
    std::vector<QPoly> images;
    for (int i = 0; i < 2; ++i) images.push_back(random_poly<Rational>(rng, 2, 4, 3));
    return QEndo(images);
  };
  for (int t = 0; t < 50; ++t) {
    const QEndo a = rand_endo(), b = rand_endo(), c = rand_endo();
    CHECK(height_of(a, b) == height_of(b, a));
    CHECK(height_of(a, b).is_infinite() == (a == b));
    CHECK(height_of(a, b) >= std::min(height_of(a, c), height_of(c, b)));
    CHECK(height_of(a, a).is_infinite());
  }
}

TEST_CASE("automorphism certificates") {
  CHECK(is_automorphism_certificate(E1("x1", "p1 + x1^2"), E1("x1", "p1 - x1^2")));
  CHECK(!is_automorphism_certificate(E1("x1^2", "p1"), E1("x1", "p1")));
  const auto nag = nagata();
  CHECK(is_automorphism_certificate(nag.map, nag.inverse));
}

TEST_CASE("Nagata map") {
  const auto nag = nagata();
  const QPoly delta = nagata_delta();
  CHECK(endo_apply(nag.map, delta) == delta);
  CHECK(endo_compose(nag.map, nag.inverse) == QEndo::identity(3));
  CHECK(jacobian_det(nag.map) == QPoly::one(3));
  // the printed variant breaks the invariance of Delta
  CHECK(endo_apply(nagata_printed(), delta) != delta);
}

TEST_CASE("unit Jacobian examples") {
  CHECK(jacobian_is_unit_constant(QEndo::identity(2)));
  CHECK(!jacobian_is_unit_constant(E1("2*x1", "p1")));
  CHECK(jacobian_is_unit_constant(E1("x1 + p1^2", "p1")));
}

TEST_CASE("symplectomorphism examples") {
  const PoissonStructure P1s(1), P2s(2);
  CHECK(is_symplectomorphism(P1s, E1("x1 + p1^2", "p1")));
  CHECK(!is_symplectomorphism(P2s, QEndo({P2("x1 + p2"), P2("x2"), P2("p1"), P2("p2")})));
  CHECK(table_bracket(2, P2("x1 + p2"), P2("x2")) == P2("1"));
  CHECK(!is_symplectomorphism(P1s, E1("2*x1", "p1")));
}

TEST_CASE("elementary symplectic checks") {
  const PoissonStructure P1s(1), P2s(2);
  CHECK(elementary_is_symplectic(P1s, QElementary::linear(mat({{1, 1}, {0, 1}}))));
  CHECK(!elementary_is_symplectic(P1s, QElementary::linear(mat({{2, 0}, {0, 1}}))));
  CHECK(!elementary_is_symplectic(P2s, QElementary::transvection(0, P2("p2"))));
  CHECK(elementary_is_symplectic(P1s, QElementary::transvection(0, P1("p1^3"))));
  CHECK_THROWS_AS(symplectic_transvection(P2s, 0, P2("p2")), Error);
  CHECK_THROWS_AS(symplectic_linear(P1s, mat({{2, 0}, {0, 1}})), Error);
  CHECK_THROWS_AS(QElementary::linear(mat({{1, 1}, {1, 1}})), Error);
  CHECK_THROWS_AS(QElementary::transvection(0, P1("x1*p1")), Error);
}

TEST_CASE("tame evaluation and inversion") {
  CHECK(tame_evaluate(QTameWord(2)) == QEndo::identity(2));
  QTameWord w(2);
  w.push_back(QElementary::transvection(0, P1("p1^2")));
  const QTameWord inv = tame_invert(w);
  REQUIRE(inv.size() == 1);
  CHECK(inv.factors()[0].as_transvection().f == P1("-p1^2"));

  QTameWord w2(2);
  w2.push_back(QElementary::transvection(1, P1("x1^2")));
  w2.push_back(QElementary::transvection(0, P1("p1^2")));
  CHECK(endo_compose(tame_evaluate(w2), tame_evaluate(tame_invert(w2))) == QEndo::identity(2));
  // substitution by hand: first factor sends p to p + x^2, the second x to x + p^2
  CHECK(tame_evaluate(w2) == E1("x1 + p1^2", "p1 + (x1 + p1^2)^2"));
}

TEST_CASE("corpus words are symplectic with unit Jacobian") {
  CorpusSpec spec;
  spec.seed = 41;
  spec.rational_share = 0.2;
  const auto words = generate_corpus(spec, 40);
  CHECK(generate_corpus(spec, 40) == words);
  for (const auto& w : words) {
    const PoissonStructure P(w.n_vars() / 2);
    for (const auto& e : w.factors()) CHECK(elementary_is_symplectic(P, e));
    const QEndo phi = tame_evaluate(w);
    CHECK(is_symplectomorphism(P, phi));
    CHECK(jacobian_is_unit_constant(phi));
    // the inverse raises intermediate degrees multiplicatively; keep it cheap
    if (degree_product(w) <= 4) {
      CHECK(endo_compose(phi, tame_evaluate(tame_invert(w))) == QEndo::identity(w.n_vars()));
    }
    CHECK(degree(phi) <= static_cast<int>(degree_product(w)));
  }
}

TEST_CASE("compositions of symplectomorphisms stay symplectic") {
  CorpusSpec spec;
  spec.seed = 43;
  spec.ns = {2};
  spec.max_length = 3;
  const auto words = generate_corpus(spec, 20);
  const PoissonStructure P(2);
  for (std::size_t i = 0; i + 1 < words.size(); i += 2) {
    CHECK(is_symplectomorphism(P, endo_compose(tame_evaluate(words[i]), tame_evaluate(words[i + 1]))));
  }
}

TEST_CASE("near-identity heights are superadditive under composition") {
  std::mt19937_64 rng(47);
  const QEndo id = QEndo::identity(4);
  for (int t = 0; t < 10; ++t) {
    const QEndo a = random_flow_composition(rng, 2, 4, 2);
    const QEndo b = random_flow_composition(rng, 2, 4, 2);
    CHECK(height_of(endo_compose(a, b), id) >= std::min(height_of(a, id), height_of(b, id)));
  }
}
