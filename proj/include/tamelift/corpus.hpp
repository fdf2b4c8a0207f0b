#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tamelift/gauge.hpp"
#include "tamelift/tame.hpp"

namespace tamelift {

/// Parameters of a reproducible random corpus. Regenerating with the same
/// parameters yields identical words.
struct CorpusSpec {
  std::uint64_t seed = 1;
  std::vector<std::size_t> ns{1, 2};
  std::size_t min_length = 1;
  std::size_t max_length = 6;
  unsigned min_degree = 2;
  unsigned max_degree = 3;
  int coeff_bound = 2;
  /// Share of transvection coefficients with denominator 2; 0 keeps words integral.
  double rational_share = 0.0;
  /// Upper bound on the product of the factor degrees, which bounds Deg sigma.
  unsigned max_degree_product = 12;
  std::vector<std::uint64_t> primes{2, 3};
};

/// Symplectic integer matrix: symmetric shears, unimodular block changes and
/// Darboux swaps. Always passes is_symplectic_matrix.
QMatrix random_symplectic_matrix(std::mt19937_64& rng, std::size_t n, int bound);

/// One random symplectic word (every factor passes
/// elementary_is_symplectic).
QTameWord random_symplectic_word(std::mt19937_64& rng, std::size_t n, const CorpusSpec& spec);

/// `count` words, n cycling through spec.ns.
std::vector<QTameWord> generate_corpus(const CorpusSpec& spec, std::size_t count);

/// Product of factor degrees (linear factors count 1): an upper bound for
/// the degree of the evaluated map.
unsigned degree_product(const QTameWord& w);

/// Composition of 2 or 3 exact time-one flows of monomial Hamiltonians of
/// degree 3..max_degree; each monomial uses one variable from every conjugate
/// pair, so its flow is polynomial. Linear part is the identity.
QEndo random_flow_composition(std::mt19937_64& rng, std::size_t n, unsigned max_degree, int bound);

/// n = 1 automorphism (X, Y + sum_k hbar^k c_k(X)) over Q[hbar]/(hbar^{K+1})
/// with nonzero planted c_k for a random nonempty subset of orders in
/// [min_order, max_order].
TruncatedAuto planted_defect_auto(std::mt19937_64& rng, int order, int min_order, int max_order, int bound);

}  // namespace tamelift
