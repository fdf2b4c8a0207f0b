#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tamelift/corpus.hpp"
#include "tamelift/gauge.hpp"
#include "tamelift/poly_io.hpp"
#include "test_support.hpp"

using namespace tamelift;
using tamelift::testing::random_weyl;

namespace {

constexpr int kOrder = 4;

struct Ctx {
  HbarRing<Rational> ring;
  QHbar h;
  explicit Ctx(int order) : ring(hbar_ring(order)), h(QHbar::power(ring, 1)) {}
  HbarWeyl x() const { return HbarWeyl::generator(1, ring, h, 0); }
  HbarWeyl y() const { return HbarWeyl::generator(1, ring, h, 1); }
  HbarWeyl hk(const HbarWeyl& u, int k) const { return u * QHbar::power(ring, k); }
  QHbar q(long num, long den = 1) const { return QHbar(ring, Rational(Integer(num), Integer(den))); }
};

/// Least hbar power with a nonzero coefficient anywhere in u; -1 for u = 0.
int lowest_order(const HbarWeyl& u) {
  int lo = -1;
  for (const auto& [m, c] : u.terms()) {
    for (int k = 0; k <= c.max_power(); ++k) {
      if (!c.coefficient(k).is_zero()) {
        if (lo < 0 || k < lo) lo = k;
        break;
      }
    }
  }
  return lo;
}

}  // namespace

TEST_CASE("gauge conjugation examples") {
  const Ctx c(kOrder);
  const TruncatedAuto psi({c.x(), c.y() + c.hk(c.x().pow(2), 2)});
  CHECK(gauge_conjugate(psi, {c.x().zero_like()}) == psi);

  // [q(X), Y] = -hbar q'(X) by rewriting, so Q = X^3/3 cancels hbar^2 X^2
  const HbarWeyl q = c.x().pow(3) * c.q(1, 3);
  CHECK(oracle::rewrite_commutator(q, c.y()) == c.hk(c.x().pow(2), 1) * c.q(-1));
  const auto out = gauge_conjugate(psi, {q});
  CHECK(out[0] == c.x());
  const HbarWeyl rest = out[1] - c.y();
  CHECK(lowest_order(rest) >= 3);
  CHECK(weyl_auto_check(out));
}

TEST_CASE("gauge change starts at hbar squared") {
  std::mt19937_64 rng(113);
  CorpusSpec spec;
  spec.seed = 127;
  spec.ns = {1};
  spec.max_degree_product = 6;
  const Ctx c(kOrder);
  for (const auto& w : generate_corpus(spec, 10)) {
    // lifted elementary factors have hbar-free images
    const auto psi = truncate_auto(lift_elementary(w.factors()[0]), kOrder);
    const GaugeElt g{truncate_elt(random_weyl<QHbar>(rng, 1, 3, 3, hbar_ring(), QHbar::power(hbar_ring(), 1)), kOrder)};
    const auto out = gauge_conjugate(psi, g);
    for (std::size_t l = 0; l < 2; ++l) {
      const int lo = lowest_order(out[l] - psi[l]);
      CHECK((lo < 0 || lo >= 2));
    }
  }
}

TEST_CASE("gauge conjugation preserves the truncated relations") {
  std::mt19937_64 rng(131);
  CorpusSpec spec;
  spec.seed = 137;
  spec.max_degree_product = 6;
  for (const auto& w : generate_corpus(spec, 16)) {
    const std::size_t n = w.n_vars() / 2;
    const auto psi = truncate_auto(lift_tame(w), kOrder);
    REQUIRE(weyl_auto_check(psi));
    auto qq = random_weyl<QHbar>(rng, n, 3, 4, hbar_ring(), QHbar::power(hbar_ring(), 1));
    qq += qq * QHbar::power(hbar_ring(), 1);
    const GaugeElt g{truncate_elt(qq, kOrder)};
    CHECK(weyl_auto_check(gauge_conjugate(psi, g)));
  }
}

TEST_CASE("gauge composition") {
  std::mt19937_64 rng(139);
  const Ctx c(kOrder);
  const auto rel = QHbar::power(hbar_ring(), 1);
  for (int t = 0; t < 10; ++t) {
    const TruncatedAuto psi({c.x(), c.y() + c.hk(truncate_elt(random_weyl<QHbar>(rng, 1, 3, 3, hbar_ring(), rel), kOrder), 2)});
    const GaugeElt g1{truncate_elt(random_weyl<QHbar>(rng, 1, 3, 3, hbar_ring(), rel), kOrder)};
    const GaugeElt g2{truncate_elt(random_weyl<QHbar>(rng, 1, 3, 3, hbar_ring(), rel), kOrder)};
    CHECK(gauge_conjugate(gauge_conjugate(psi, g1), g2) == gauge_conjugate(psi, gauge_compose(g1, g2)));
  }
}

TEST_CASE("defect order examples") {
  const Ctx c(kOrder);
  CHECK(!defect_order(TruncatedAuto({c.x(), c.y()})).has_value());
  CHECK(defect_order(TruncatedAuto({c.x(), c.y() + c.hk(c.x().pow(3) + c.x() * c.y(), 2)})) == 2);
  CHECK(!defect_order(TruncatedAuto({c.x(), c.y() + c.hk(c.x().pow(2) * c.y(), 3)})).has_value());
  CHECK_THROWS_AS(defect_order(TruncatedAuto({c.x() + c.y(), c.y()})), Error);
  try {
    defect_order(TruncatedAuto({c.x() + c.y(), c.y()}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionX);
  }
}

TEST_CASE("normalize examples") {
  const Ctx c(kOrder);
  {
    const TruncatedAuto psi({c.x(), c.y() + c.hk(c.x().pow(2), 2)});
    const auto r = normalize(psi);
    REQUIRE(!r.steps.empty());
    CHECK(r.steps[0].defect_order == 2);
    CHECK(r.steps[0].gauge.q == c.x().pow(3) * c.q(1, 3));
    CHECK(!defect_order(r.result).has_value());
    // the first conjugation alone leaves Y modulo hbar^3
    CHECK(lowest_order(gauge_conjugate(psi, r.steps[0].gauge)[1] - c.y()) >= 3);
  }
  {
    const TruncatedAuto psi({c.x(), c.y()});
    const auto r = normalize(psi);
    CHECK(r.steps.empty());
    CHECK(r.result == psi);
  }
  {
    const TruncatedAuto psi({c.x(), c.y() + c.hk(c.x(), 2) + c.hk(c.x().pow(2), 3)});
    const auto r = normalize(psi);
    // the order-3 conjugation leaves a fresh Y-free term at hbar^4, so K = 4 takes three steps
    REQUIRE(r.steps.size() == 3);
    CHECK(r.steps[0].defect_order == 2);
    CHECK(r.steps[1].defect_order == 3);
    CHECK(r.steps[2].defect_order == 4);
    // second step input recomputed by hand: Y - hbar^2 X (1 - hbar X^2/2) + hbar^3 X^2 + hbar^2 X
    const auto first = gauge_conjugate(psi, {c.x().pow(2) * c.q(1, 2)});
    const HbarWeyl expected3 = c.x().pow(2) + c.x().pow(3) * c.q(1, 2);
    HbarWeyl got3 = c.x().zero_like();
    for (const auto& [m, s] : first[1].terms()) {
      if (!s.coefficient(3).is_zero()) got3.add_term(m, c.q(1) * QHbar(c.ring, s.coefficient(3)));
    }
    CHECK(got3 == expected3);
    CHECK(!defect_order(r.result).has_value());
    CHECK(weyl_auto_check(r.result));
  }
  {
    const TruncatedAuto psi({c.x(), c.y() + c.hk(c.x(), 1)});
    CHECK_THROWS_AS(normalize(psi), Error);
  }
}

TEST_CASE("normalize on planted defects") {
  std::mt19937_64 rng(149);
  for (int t = 0; t < 20; ++t) {
    const auto psi = planted_defect_auto(rng, 6, 2, 4, 2);
    REQUIRE(weyl_auto_check(psi));
    const auto r = normalize(psi);
    CHECK(!defect_order(r.result).has_value());
    CHECK(weyl_auto_check(r.result));
    CHECK(r.steps.size() <= 6);
    for (std::size_t i = 1; i < r.steps.size(); ++i) CHECK(r.steps[i].defect_order > r.steps[i - 1].defect_order);
    // conjugating by the composed gauge reproduces the result
    if (!r.steps.empty()) {
      GaugeElt total = r.steps[0].gauge;
      for (std::size_t i = 1; i < r.steps.size(); ++i) total = gauge_compose(total, r.steps[i].gauge);
      CHECK(gauge_conjugate(psi, total) == r.result);
    }
  }
}
