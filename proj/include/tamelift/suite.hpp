#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tamelift/corpus.hpp"

namespace tamelift {

/// Outcome of one property over a batch of seeded cases.
struct PropertyResult {
  explicit PropertyResult(std::string n) : name(std::move(n)) {}
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string note;
  bool ok() const noexcept { return failed == 0 && passed > 0; }
  void record(bool good) { good ? ++passed : ++failed; }
};

/// Tame symplectic words with n in {1, 2}, at most 6 factors of degree <= 3.
CorpusSpec bracket_corpus_spec(std::uint64_t seed);

PropertyResult check_symplectic_words(const std::vector<QTameWord>& words);
/// classical_limit(lift) = evaluation, and lifted images satisfy the Weyl relations.
PropertyResult check_lift_round_trip(const std::vector<QTameWord>& words);
/// Every hbar^1 coefficient of a lift has degree below Deg sigma when Deg sigma >= 2.
PropertyResult check_lift_degree_bound(const std::vector<QTameWord>& words);

PropertyResult check_star_associativity(std::uint64_t seed, std::size_t triples);
/// coefficient(hbar^1, f*g - g*f) = {f, g} for the Moyal product.
PropertyResult check_moyal_bracket(std::uint64_t seed, std::size_t pairs);
PropertyResult check_ordering_intertwining(std::uint64_t seed, std::size_t pairs);
PropertyResult check_weyl_associativity(std::uint64_t seed, std::size_t triples);

/// x_i^p, y_i^p central; induced bracket {y_i^p, x_j^p} = (p-1)! delta_ij.
PropertyResult check_center(const std::vector<std::uint64_t>& primes, const std::vector<std::size_t>& ns);
/// Center map of the reduced lift equals the Frobenius twist of the reduced
/// map. Holds when every factor degree is below p - 1; for smaller p the p-th
/// power of x + f(y) picks up the (p-1)-th derivative of f.
PropertyResult check_center_homomorphism(const std::vector<QTameWord>& words, const std::vector<std::uint64_t>& primes);
/// Center maps compose like the words they come from.
PropertyResult check_center_functoriality(const std::vector<QTameWord>& words, const std::vector<std::uint64_t>& primes);

/// Approximates `count` flow compositions (n alternating 1, 2) to height K and
/// re-derives the certificate from a truncated evaluation of the word. Also
/// checks d(tau_k, sigma) <= e^{-k} for the iteration prefixes.
PropertyResult check_approximation(std::uint64_t seed, std::size_t count, int K);
/// Normalizes planted n = 1 defects at orders 2..4 under truncation K.
PropertyResult check_gauge_normalization(std::uint64_t seed, std::size_t count, int K);
PropertyResult check_nagata();

/// Every property above at its default size, in a fixed order.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed);

}  // namespace tamelift
