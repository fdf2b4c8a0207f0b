#include "tamelift/gauge.hpp"

namespace tamelift {

HbarWeyl truncate_elt(const HbarWeyl& u, int order) {
  const auto ring = hbar_ring(order);
  HbarWeyl r(u.n(), ring, QHbar::power(ring, 1));
  for (const auto& [m, c] : u.terms()) {
    QHbar s(ring);
    for (int k = 0; k <= c.max_power(); ++k) s.add(k, c.coefficient(k));
    r.add_term(m, s);
  }
  return r;
}

TruncatedAuto truncate_auto(const HbarWeylAuto& psi, int order) {
  if (order < 0) throw Error(ErrorCode::InvalidInput, "truncation order must be non-negative");
  std::vector<HbarWeyl> images;
  for (const auto& u : psi.images()) images.push_back(truncate_elt(u, order));
  return TruncatedAuto(std::move(images));
}

TruncatedAuto gauge_conjugate(const TruncatedAuto& psi, const GaugeElt& g) {
  psi[0].check_compatible(g.q);
  const auto& ring = psi.ring();
  if (ring.order < 0) throw Error(ErrorCode::InvalidInput, "gauge conjugation needs a truncated ring");
  const QHbar h = QHbar::power(ring, 1);
  const HbarWeyl one = g.q.one_like();
  const HbarWeyl hq = g.q * h;
  const HbarWeyl u = one + hq;
  // (1 + hQ)^{-1} = sum_m (-hQ)^m, exact once hbar^{K+1} = 0
  HbarWeyl u_inv = one;
  HbarWeyl term = one;
  for (int m = 1; m <= ring.order; ++m) {
    term = weyl_mul(term, -hq);
    if (term.is_zero()) break;
    u_inv += term;
  }
  std::vector<HbarWeyl> images;
  for (const auto& img : psi.images()) images.push_back(weyl_mul(weyl_mul(u, img), u_inv));
  return TruncatedAuto(std::move(images));
}

GaugeElt gauge_compose(const GaugeElt& first, const GaugeElt& second) {
  const QHbar h = QHbar::power(first.q.ring(), 1);
  return {first.q + second.q + weyl_mul(second.q, first.q) * h};
}

namespace {

void require_x_fixed(const TruncatedAuto& psi) {
  if (psi.n() != 1) throw Error(ErrorCode::InvalidInput, "defect normalization is implemented for n = 1");
  if (!(psi[0] == HbarWeyl::generator(1, psi.ring(), psi.relation(), 0))) {
    throw Error(ErrorCode::PreconditionX, "the image of x must be X");
  }
}

/// Y-free part of the hbar^k coefficient of u, as a polynomial in X.
QPoly y_free_part(const HbarWeyl& u, int k) {
  QPoly c(1);
  for (const auto& [m, s] : u.terms()) {
    if (m[1] != 0) continue;
    const Rational v = s.coefficient(k);
    if (!v.is_zero()) c.add_term(Monomial{m[0]}, v);
  }
  return c;
}

}  // namespace

std::optional<int> defect_order(const TruncatedAuto& psi) {
  require_x_fixed(psi);
  const int order = psi.ring().order;
  for (int k = 1; order < 0 || k <= order; ++k) {
    bool any_left = false;
    for (const auto& [m, s] : psi[1].terms()) {
      if (s.max_power() >= k) any_left = true;
      if (m[1] == 0 && !s.coefficient(k).is_zero()) return k;
    }
    if (!any_left) break;
  }
  return std::nullopt;
}

NormalizeResult normalize(const TruncatedAuto& psi) {
  NormalizeResult out{{}, psi};
  const auto& ring = psi.ring();
  int last = 0;
  while (auto k = defect_order(out.result)) {
    if (*k == 1) throw Error(ErrorCode::UnremovableDefect, "Y-free defect at hbar order 1");
    if (*k <= last) throw Error(ErrorCode::InvalidInput, "defect order failed to increase");
    last = *k;
    const QPoly c = y_free_part(out.result[1], *k);
    HbarWeyl q(1, ring, QHbar::power(ring, 1));
    for (const auto& [m, v] : c.terms()) {
      // primitive of v X^e is v/(e+1) X^{e+1}, scaled by hbar^{k-2}
      QHbar s(ring);
      s.add(*k - 2, v / Rational(static_cast<long>(m[0] + 1)));
      q.add_term(Monomial{m[0] + 1, 0}, s);
    }
    GaugeElt g{std::move(q)};
    out.result = gauge_conjugate(out.result, g);
    out.steps.push_back({*k, std::move(g)});
  }
  return out;
}

}  // namespace tamelift
