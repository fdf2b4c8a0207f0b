#include "tamelift/corpus.hpp"

namespace tamelift {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

int nonzero_int(std::mt19937_64& rng, int bound) {
  int v = 0;
  while (v == 0) v = uniform_int(rng, -bound, bound);
  return v;
}

/// Polynomial in variable `var` alone with terms of degree 1..deg and a
/// nonzero leading term.
QPoly random_univariate(std::mt19937_64& rng, std::size_t n_vars, std::size_t var, unsigned deg,
                        const CorpusSpec& spec) {
  std::bernoulli_distribution rational(spec.rational_share);
  QPoly f(n_vars);
  for (unsigned e = 1; e <= deg; ++e) {
    int c = e == deg ? nonzero_int(rng, spec.coeff_bound) : uniform_int(rng, -spec.coeff_bound, spec.coeff_bound);
    if (e < deg && uniform_int(rng, 0, 1) == 0) c = 0;
    const Rational q = rational(rng) ? Rational(Integer(c), Integer(2)) : Rational(c);
    f.add_term(Monomial::variable(n_vars, var, e), q);
  }
  return f;
}

}  // namespace

QMatrix random_symplectic_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
  const auto N = static_cast<Eigen::Index>(2 * n);
  const auto nn = static_cast<Eigen::Index>(n);
  QMatrix m = identity_matrix<Rational>(N);
  switch (uniform_int(rng, 0, 3)) {
    case 0:
    case 1: {
      // [[I, S], [0, I]] or its transpose with S symmetric
      QMatrix s = QMatrix::Zero(nn, nn);
      for (Eigen::Index i = 0; i < nn; ++i)
        for (Eigen::Index j = i; j < nn; ++j) s(i, j) = s(j, i) = Rational(uniform_int(rng, -bound, bound));
      if (s == QMatrix::Zero(nn, nn)) s(0, 0) = Rational(1);
      if (uniform_int(rng, 0, 1) == 0) m.block(0, nn, nn, nn) = s;
      else m.block(nn, 0, nn, nn) = s;
      break;
    }
    case 2: {
      // diag(G, G^{-T}) with G an integer elementary matrix or a sign flip
      QMatrix g = identity_matrix<Rational>(nn);
      if (n > 1) {
        const auto i = static_cast<Eigen::Index>(uniform_int(rng, 0, static_cast<int>(n) - 1));
        auto j = static_cast<Eigen::Index>(uniform_int(rng, 0, static_cast<int>(n) - 2));
        if (j >= i) ++j;
        g(i, j) = Rational(nonzero_int(rng, bound));
      } else {
        g(0, 0) = Rational(-1);
      }
      m.block(0, 0, nn, nn) = g;
      m.block(nn, nn, nn, nn) = inverse_exact<Rational>(QMatrix(g.transpose()))->eval();
      break;
    }
    default: {
      // x_i -> p_i, p_i -> -x_i on a random pair
      const auto i = static_cast<Eigen::Index>(uniform_int(rng, 0, static_cast<int>(n) - 1));
      m(i, i) = m(i + nn, i + nn) = Rational(0);
      m(i + nn, i) = Rational(1);
      m(i, i + nn) = Rational(-1);
      break;
    }
  }
  return m;
}

unsigned degree_product(const QTameWord& w) {
  unsigned d = 1;
  for (const auto& e : w.factors()) {
    if (e.is_linear()) continue;
    const Degree dg = degree(e.as_transvection().f);
    if (dg.is_finite() && dg.value() > 1) d *= static_cast<unsigned>(dg.value());
  }
  return d;
}

QTameWord random_symplectic_word(std::mt19937_64& rng, std::size_t n, const CorpusSpec& spec) {
  const PoissonStructure P(n);
  const std::size_t N = 2 * n;
  const auto len = static_cast<std::size_t>(
      uniform_int(rng, static_cast<int>(spec.min_length), static_cast<int>(spec.max_length)));
  QTameWord w(N);
  unsigned budget = 1;
  while (w.size() < len) {
    if (uniform_int(rng, 0, 2) == 0) {
      w.push_back(symplectic_linear(P, random_symplectic_matrix(rng, n, spec.coeff_bound)));
      continue;
    }
    unsigned deg = static_cast<unsigned>(
        uniform_int(rng, static_cast<int>(spec.min_degree), static_cast<int>(spec.max_degree)));
    while (deg > 1 && budget * deg > spec.max_degree_product) --deg;
    if (deg < 2) deg = 1;
    budget *= deg;
    const auto target = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(N) - 1));
    w.push_back(symplectic_transvection(P, target, random_univariate(rng, N, P.conjugate(target), deg, spec)));
  }
  return w;
}

std::vector<QTameWord> generate_corpus(const CorpusSpec& spec, std::size_t count) {
  std::mt19937_64 rng(spec.seed);
  std::vector<QTameWord> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_symplectic_word(rng, spec.ns[i % spec.ns.size()], spec));
  }
  return out;
}

QEndo random_flow_composition(std::mt19937_64& rng, std::size_t n, unsigned max_degree, int bound) {
  const PoissonStructure P(n);
  const std::size_t N = 2 * n;
  QEndo sigma = QEndo::identity(N);
  const int flows = uniform_int(rng, 2, 3);
  for (int f = 0; f < flows; ++f) {
    // pick x_i or p_i from every pair: these Poisson-commute, so the flow is
    // id + X_H exactly
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(uniform_int(rng, 0, 1) == 0 ? i : n + i);
    const auto deg = static_cast<unsigned>(uniform_int(rng, 3, static_cast<int>(max_degree)));
    Monomial m(N);
    for (unsigned e = 0; e < deg; ++e) m[vars[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1))]] += 1;
    const QPoly h = QPoly::term(m, Rational(nonzero_int(rng, bound)));
    const auto field = P.hamiltonian_field(h);
    std::vector<QPoly> images;
    for (std::size_t j = 0; j < N; ++j) images.push_back(QPoly::variable(N, j) + field[j]);
    sigma = endo_compose(sigma, QEndo(std::move(images)));
  }
  return sigma;
}

TruncatedAuto planted_defect_auto(std::mt19937_64& rng, int order, int min_order, int max_order, int bound) {
  const auto ring = hbar_ring(order);
  const QHbar h = QHbar::power(ring, 1);
  std::vector<int> orders;
  while (orders.empty()) {
    for (int k = min_order; k <= max_order; ++k)
      if (uniform_int(rng, 0, 1) == 1) orders.push_back(k);
  }
  HbarWeyl y = HbarWeyl::generator(1, ring, h, 1);
  for (int k : orders) {
    const int deg = uniform_int(rng, 1, 3);
    for (int e = 0; e <= deg; ++e) {
      int c = e == deg ? nonzero_int(rng, bound) : uniform_int(rng, -bound, bound);
      QHbar s(ring);
      s.add(k, Rational(c));
      y.add_term(Monomial{static_cast<Monomial::exponent_type>(e), 0}, s);
    }
  }
  return TruncatedAuto({HbarWeyl::generator(1, ring, h, 0), std::move(y)});
}

}  // namespace tamelift
