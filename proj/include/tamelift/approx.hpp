#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "tamelift/tame.hpp"

namespace tamelift {

/// Lowest nonzero homogeneous part of sigma - id.
struct Deviation {
  int height = 0;
  std::vector<QPoly> components;
};

/// Sum of c * form^d; form holds coefficients on x_1..x_n, p_1..p_n.
struct WaringTerm {
  Rational c;
  QVector form;
};
using WaringDecomp = std::vector<WaringTerm>;

/// Coefficient matrix of the degree-one part: A(i, j) is the coefficient of
/// x_i in sigma(x_j), matching the LinearFactor convention. Throws
/// InvalidInput on a nonzero constant part and NotSymplecticLinear unless
/// A^T J A = J.
QMatrix linear_part(const PoissonStructure& P, const QEndo& sigma);

/// Throws IsIdentity for sigma = id and InvalidInput unless the linear part
/// is the identity and the constant part vanishes.
Deviation deviation(const QEndo& sigma);

/// Homogeneous H of degree k+1 with {H, x_j} = d_j for every generator.
/// Throws NonHamiltonian when no such H exists.
QPoly hamiltonian_of(const Deviation& d, const PoissonStructure& P);

/// Linear form as a polynomial.
QPoly linear_form_poly(const QVector& form);

/// Expresses homogeneous H as sum c_m l_m^d without solving: each monomial
/// x^a is a finite difference of (b . x)^d over integer forms 0 < b <= a, so
/// forms stay on the monomial's support and coefficients have denominator
/// dividing d!. Pure powers of a single variable are taken directly.
WaringDecomp waring(const QPoly& h);
/// Same identity reached by sampling integer forms in [-2, 2] and solving
/// the exact linear system, with more forms each retry. Coefficients are
/// typically large. Throws SamplerExhausted after the retry cap.
WaringDecomp waring_sampled(const QPoly& h, std::mt19937_64& rng);
WaringDecomp waring_sampled(const QPoly& h, std::uint64_t seed);
QPoly waring_expand(const WaringDecomp& w, std::size_t n_vars, unsigned degree);

/// Symplectic matrix (LinearFactor convention) whose first column is `form`,
/// i.e. the linear map sending x_1 to the form. Throws ZeroForm.
QMatrix symplectic_completion(const PoissonStructure& P, const QVector& form);

/// Tame symplectic word evaluating exactly to the time-one flow
/// g -> g + {c l^d, g} of c l^d. Throws ZeroForm.
QTameWord flow_word(const Rational& c, const QVector& form, unsigned d, const PoissonStructure& P);

struct ApproxIteration {
  int height;                 ///< deviation height entering the iteration
  std::size_t prefix_length;  ///< word length before the iteration's factors
};

struct ApproxResult {
  QTameWord word;
  Height achieved;
  /// false when `achieved` is only the lower bound certified by truncation.
  bool exact = true;
  int target = 0;
  /// Recorded for reproducibility; the loop itself is deterministic.
  std::uint64_t seed = 0;
  std::vector<ApproxIteration> iterations;
};

/// Ht(tau^{-1} o sigma - id) computed from scratch: truncated at `cutoff`,
/// and exactly when the degree budget allows. Returns (height, exact).
std::pair<Height, bool> approximation_height(const QTameWord& tau, const QEndo& sigma, unsigned cutoff,
                                             unsigned exact_degree_budget = 40);

/// Tame word tau with Ht(tau^{-1} o sigma - id) > K.
ApproxResult approximate(const QEndo& sigma, int K, std::uint64_t seed);

}  // namespace tamelift
