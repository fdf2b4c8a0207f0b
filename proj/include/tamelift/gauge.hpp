#pragma once

#include <optional>

#include "tamelift/star_lift.hpp"

namespace tamelift {

/// Weyl automorphism over Q[hbar]/(hbar^{K+1}); K is the ring's order.
using TruncatedAuto = HbarWeylAuto;

/// The gauge element u = 1 + hbar Q.
struct GaugeElt {
  HbarWeyl q;
  friend bool operator==(const GaugeElt&, const GaugeElt&) = default;
};

/// Reads an untruncated automorphism mod hbar^{K+1}.
TruncatedAuto truncate_auto(const HbarWeylAuto& psi, int order);
HbarWeyl truncate_elt(const HbarWeyl& u, int order);

/// u Psi_l u^{-1} for every image, with u^{-1} the finite geometric series in
/// -hbar Q. Throws RingMismatch if Q and Psi live over different truncations.
TruncatedAuto gauge_conjugate(const TruncatedAuto& psi, const GaugeElt& g);

/// Q such that conjugating by first then second equals conjugating by
/// (1 + hbar Q2)(1 + hbar Q1) = 1 + hbar (Q1 + Q2 + hbar Q2 Q1).
GaugeElt gauge_compose(const GaugeElt& first, const GaugeElt& second);

/// n = 1 only. Least k in 1..K such that the hbar^k coefficient of Psi(y) has
/// a monomial free of Y; nullopt when there is none. Throws PreconditionX
/// unless Psi(x) = X.
std::optional<int> defect_order(const TruncatedAuto& psi);

struct NormalizeStep {
  int defect_order;
  GaugeElt gauge;
};

struct NormalizeResult {
  std::vector<NormalizeStep> steps;
  TruncatedAuto result;
};

/// Removes Y-free defects by conjugating with Q = hbar^{k-2} q(X), q the
/// X-primitive (constant term 0) of the Y-free part of the hbar^k coefficient.
/// A defect at order 1 would need a negative hbar power and throws
/// UnremovableDefect.
NormalizeResult normalize(const TruncatedAuto& psi);

}  // namespace tamelift
