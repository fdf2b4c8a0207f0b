#include "tamelift/approx.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tamelift {

namespace {

Rational omega(const PoissonStructure& P, const QVector& u, const QVector& v) {
  return (u.transpose() * P.table() * v)(0, 0);
}

bool is_zero_vector(const QVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

QVector unit_vector(std::size_t dim, std::size_t i) {
  QVector v = QVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(i)) = Rational(1);
  return v;
}

/// All monomials of total degree d in n variables.
void monomials_of_degree(std::size_t n, unsigned d, std::vector<Monomial>& out) {
  Monomial m(n);
  auto rec = [&](auto& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (n == 0) return;
  rec(rec, 0, d);
}

/// v = g * e with e an integral vector of content 1 and g > 0.
std::pair<Rational, QVector> primitive_part(const QVector& v) {
  Integer num = 0, den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v(i).numerator().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v(i).denominator().get_mpz_t());
  }
  const Rational g(num, den);
  return {g, v * g.inverse()};
}

std::size_t single_support(const QVector& form) {
  std::size_t idx = static_cast<std::size_t>(form.size());
  for (Eigen::Index i = 0; i < form.size(); ++i) {
    if (form(i).is_zero()) continue;
    if (idx != static_cast<std::size_t>(form.size())) return static_cast<std::size_t>(form.size());
    idx = static_cast<std::size_t>(i);
  }
  return idx;
}

/// sigma composed with the inverse of each factor in turn, i.e. w^{-1} o sigma
/// built one elementary substitution at a time.
QEndo strip_word(const QTameWord& w, QEndo rho, std::optional<unsigned> max_degree) {
  for (const auto& e : w.factors()) rho = endo_compose(e.inverse().evaluate(), rho, max_degree);
  if (max_degree) {
    std::vector<QPoly> images;
    for (const auto& g : rho.images()) images.push_back(truncate_degree(g, *max_degree));
    rho = QEndo(std::move(images));
  }
  return rho;
}

/// w ++ tail with a linear factor meeting a linear factor fused into one.
void append_fused(QTameWord& w, const QTameWord& tail) {
  for (const auto& e : tail.factors()) {
    if (e.is_linear() && !w.factors().empty() && w.factors().back().is_linear()) {
      // [A, B] evaluates to the matrix B A
      const QMatrix fused = e.as_linear().a * w.factors().back().as_linear().a;
      w.pop_back();
      if (fused != identity_matrix<Rational>(fused.rows())) w.push_back(QElementary::linear(fused));
      continue;
    }
    w.push_back(e);
  }
}

unsigned elementary_degree(const QElementary& e) {
  if (e.is_linear()) return 1;
  const Degree d = degree(e.as_transvection().f);
  return d.is_finite() ? std::max(1, d.value()) : 1;
}

}  // namespace

QMatrix linear_part(const PoissonStructure& P, const QEndo& sigma) {
  const std::size_t N = sigma.n_vars();
  if (N != P.dim()) throw Error(ErrorCode::ArityMismatch, "map arity differs from the Poisson structure");
  QMatrix a(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (std::size_t j = 0; j < N; ++j) {
    if (!sigma[j].constant_term().is_zero()) {
      throw Error(ErrorCode::InvalidInput, "maps with a translation part are not approximated");
    }
    for (std::size_t i = 0; i < N; ++i) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          sigma[j].coefficient(Monomial::variable(N, i));
    }
  }
  if (!is_symplectic_matrix(P, a)) throw Error(ErrorCode::NotSymplecticLinear, "linear part is not in Sp(2n)");
  return a;
}

Deviation deviation(const QEndo& sigma) {
  const std::size_t N = sigma.n_vars();
  const QEndo id = QEndo::identity(N);
  const auto diff = endo_difference(sigma, id);
  Height h = Height::infinity();
  for (const auto& g : diff) h = std::min(h, height(g));
  if (h.is_infinite()) throw Error(ErrorCode::IsIdentity, "map is the identity");
  if (h.value() < 2) {
    throw Error(ErrorCode::InvalidInput, "deviation requires trivial constant and linear parts");
  }
  Deviation d{h.value(), {}};
  for (const auto& g : diff) d.components.push_back(homogeneous_component(g, static_cast<unsigned>(h.value())));
  return d;
}

QPoly hamiltonian_of(const Deviation& d, const PoissonStructure& P) {
  const std::size_t N = P.dim(), n = P.n();
  if (d.components.size() != N) throw Error(ErrorCode::ArityMismatch, "deviation arity mismatch");
  // {H, x_j} = dH/dp_j and {H, p_j} = -dH/dx_j; Euler: (k+1) H = sum_i v_i dH/dv_i
  QPoly h(N);
  for (std::size_t j = 0; j < n; ++j) {
    h += QPoly::variable(N, n + j) * d.components[j];
    h -= QPoly::variable(N, j) * d.components[n + j];
  }
  h *= Rational(Integer(1), Integer(d.height + 1));
  if (P.hamiltonian_field(h) != d.components) {
    throw Error(ErrorCode::NonHamiltonian, "deviation is not a Hamiltonian vector field");
  }
  return h;
}

QPoly linear_form_poly(const QVector& form) {
  const auto N = static_cast<std::size_t>(form.size());
  QPoly l(N);
  for (std::size_t i = 0; i < N; ++i) l.add_term(Monomial::variable(N, i), form(static_cast<Eigen::Index>(i)));
  return l;
}

QPoly waring_expand(const WaringDecomp& w, std::size_t n_vars, unsigned degree) {
  QPoly s(n_vars);
  for (const auto& t : w) s += linear_form_poly(t.form).pow(degree) * t.c;
  return s;
}

WaringDecomp waring(const QPoly& h) {
  WaringDecomp out;
  if (h.is_zero()) return out;
  const std::size_t N = h.n_vars();
  const Degree dg = degree(h);
  const auto d = static_cast<unsigned>(dg.value());
  if (height(h).value() != dg.value()) throw Error(ErrorCode::InvalidInput, "Waring decomposition needs a homogeneous form");
  // d! x^a = sum_{0 <= b <= a} (-1)^{|a - b|} C(a, b) (b . x)^d, the a-th finite
  // difference of t -> (t . x)^d at 0
  std::map<std::vector<unsigned>, Rational> acc;
  const Rational inv_fact = Rational(factorial(d)).inverse();
  for (const auto& [m, c] : h.terms()) {
    std::size_t var = N;
    for (std::size_t i = 0; i < N; ++i)
      if (m[i] == d) var = i;
    if (var < N) {
      std::vector<unsigned> b(N, 0);
      b[var] = 1;
      acc[b] += c;
      continue;
    }
    std::vector<unsigned> b(N, 0);
    auto rec = [&](auto& self, std::size_t i, const Rational& w) -> void {
      if (i == N) {
        if (std::any_of(b.begin(), b.end(), [](unsigned v) { return v != 0; })) acc[b] += w;
        return;
      }
      for (unsigned k = 0; k <= m[i]; ++k) {
        b[i] = k;
        const Rational bin(binomial(m[i], k));
        self(self, i + 1, (m[i] - k) % 2 == 0 ? w * bin : -(w * bin));
      }
      b[i] = 0;
    };
    rec(rec, 0, c * inv_fact);
  }
  for (const auto& [b, c] : acc) {
    if (c.is_zero()) continue;
    QVector f(static_cast<Eigen::Index>(N));
    for (std::size_t i = 0; i < N; ++i) f(static_cast<Eigen::Index>(i)) = Rational(static_cast<long>(b[i]));
    out.push_back({c, std::move(f)});
  }
  if (waring_expand(out, N, d) != h) throw Error(ErrorCode::InvalidInput, "Waring re-expansion mismatch");
  return out;
}

WaringDecomp waring_sampled(const QPoly& h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return waring_sampled(h, rng);
}

WaringDecomp waring_sampled(const QPoly& h, std::mt19937_64& rng) {
  WaringDecomp out;
  if (h.is_zero()) return out;
  const std::size_t N = h.n_vars();
  const Degree dg = degree(h);
  const auto d = static_cast<unsigned>(dg.value());
  if (height(h).value() != dg.value()) throw Error(ErrorCode::InvalidInput, "Waring decomposition needs a homogeneous form");

  // pure powers of one variable need no sampling
  QPoly rest(N);
  for (const auto& [m, c] : h.terms()) {
    std::size_t var = N;
    for (std::size_t i = 0; i < N; ++i)
      if (m[i] == d) var = i;
    if (var < N) out.push_back({c, unit_vector(N, var)});
    else rest.add_term(m, c);
  }
  if (rest.is_zero()) return out;

  std::vector<Monomial> basis;
  monomials_of_degree(N, d, basis);
  const auto rows = static_cast<Eigen::Index>(basis.size());
  QVector rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) rhs(r) = rest.coefficient(basis[static_cast<std::size_t>(r)]);

  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<QVector> forms;
  std::set<std::vector<int>> seen;
  auto sample = [&](std::size_t count) {
    for (std::size_t added = 0; added < count;) {
      std::vector<int> v(N);
      bool nonzero = false;
      for (auto& e : v) {
        e = entry(rng);
        nonzero = nonzero || e != 0;
      }
      if (!nonzero || !seen.insert(v).second) continue;
      QVector f(static_cast<Eigen::Index>(N));
      for (std::size_t i = 0; i < N; ++i) f(static_cast<Eigen::Index>(i)) = Rational(v[i]);
      forms.push_back(std::move(f));
      ++added;
    }
  };
  constexpr int kMaxRounds = 8;
  sample(basis.size());
  for (int round = 0; round < kMaxRounds; ++round) {
    QMatrix a(rows, static_cast<Eigen::Index>(forms.size()));
    for (std::size_t c = 0; c < forms.size(); ++c) {
      const QPoly pw = linear_form_poly(forms[c]).pow(d);
      for (Eigen::Index r = 0; r < rows; ++r) {
        a(r, static_cast<Eigen::Index>(c)) = pw.coefficient(basis[static_cast<std::size_t>(r)]);
      }
    }
    if (auto sol = solve_exact<Rational>(a, rhs)) {
      for (std::size_t c = 0; c < forms.size(); ++c) {
        const Rational& v = (*sol)(static_cast<Eigen::Index>(c));
        if (!v.is_zero()) out.push_back({v, forms[c]});
      }
      if (waring_expand(out, N, d) != h) throw Error(ErrorCode::InvalidInput, "Waring re-expansion mismatch");
      return out;
    }
    sample(basis.size() / 2 + 1);
  }
  throw Error(ErrorCode::SamplerExhausted, "no Waring decomposition found after the retry cap");
}

QMatrix symplectic_completion(const PoissonStructure& P, const QVector& form) {
  const std::size_t N = P.dim(), n = P.n();
  if (static_cast<std::size_t>(form.size()) != N) throw Error(ErrorCode::ArityMismatch, "form arity mismatch");
  if (is_zero_vector(form)) throw Error(ErrorCode::ZeroForm, "linear form is zero");
  // form = g * e with e primitive integral; Sp(2n, Z) is transitive on such
  // vectors, so the basis below stays integral apart from the 1/g on f_1
  const auto [g, e1] = primitive_part(form);
  std::vector<QVector> es, fs;
  auto project = [&](QVector v) {
    for (std::size_t k = 0; k < es.size(); ++k) {
      const Rational alpha = omega(P, fs[k], v);
      const Rational beta = -omega(P, es[k], v);
      v -= es[k] * alpha + fs[k] * beta;
    }
    return v;
  };
  // pairs with omega(e, f) = -1, matching {x_i, p_i} = -1
  auto add_pair = [&](const QVector& e) {
    std::vector<QVector> gens;
    for (std::size_t i = 0; i < N; ++i) gens.push_back(project(unit_vector(N, i)));
    QVector f = QVector::Zero(static_cast<Eigen::Index>(N));
    Integer d = 0;
    for (const auto& v : gens) {
      const Integer a = omega(P, e, v).numerator();
      Integer d2, s, t;
      mpz_gcdext(d2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), a.get_mpz_t());
      f = f * Rational(s) + v * Rational(t);
      d = d2;
    }
    if (d != 1) throw Error(ErrorCode::InvalidInput, "symplectic completion failed");
    es.push_back(e);
    fs.push_back(-f);
  };
  add_pair(e1);
  for (std::size_t i = 0; i < N && es.size() < n; ++i) {
    const QVector v = project(unit_vector(N, i));
    if (!is_zero_vector(v)) add_pair(primitive_part(v).second);
  }
  QMatrix a(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (std::size_t k = 0; k < n; ++k) {
    a.col(static_cast<Eigen::Index>(k)) = es[k];
    a.col(static_cast<Eigen::Index>(n + k)) = fs[k];
  }
  a.col(0) *= g;
  a.col(static_cast<Eigen::Index>(n)) *= g.inverse();
  if (!is_symplectic_matrix(P, a)) throw Error(ErrorCode::InvalidInput, "symplectic completion failed");
  return a;
}

QTameWord flow_word(const Rational& c, const QVector& form, unsigned d, const PoissonStructure& P) {
  const std::size_t N = P.dim(), n = P.n();
  if (static_cast<std::size_t>(form.size()) != N) throw Error(ErrorCode::ArityMismatch, "form arity mismatch");
  if (is_zero_vector(form)) throw Error(ErrorCode::ZeroForm, "linear form is zero");
  QTameWord w(N);
  if (c.is_zero() || d == 0) return w;
  const Rational scale = c * Rational(static_cast<long>(d));
  const std::size_t i = single_support(form);
  if (i < N) {
    // l = a v_i: the flow shears the conjugate of v_i by a power of v_i
    const Rational& a = form(static_cast<Eigen::Index>(i));
    Rational ad(1);
    for (unsigned t = 0; t < d; ++t) ad *= a;
    const QPoly pw = QPoly::variable(N, i).pow(d - 1);
    if (i < n) w.push_back(symplectic_transvection(P, n + i, pw * (-scale * ad)));
    else w.push_back(symplectic_transvection(P, i - n, pw * (scale * ad)));
    return w;
  }
  // conjugate the x_1 flow by an integral symplectic map sending x_1 to l/g
  const auto [g, prim] = primitive_part(form);
  Rational gd(1);
  for (unsigned t = 0; t < d; ++t) gd *= g;
  const QMatrix a = symplectic_completion(P, prim);
  const auto a_inv = inverse_exact<Rational>(a);
  w.push_back(symplectic_linear(P, *a_inv));
  w.push_back(symplectic_transvection(P, n, QPoly::variable(N, 0).pow(d - 1) * (-scale * gd)));
  w.push_back(symplectic_linear(P, a));
  return w;
}

std::pair<Height, bool> approximation_height(const QTameWord& tau, const QEndo& sigma, unsigned cutoff,
                                             unsigned exact_degree_budget) {
  const QEndo id = QEndo::identity(sigma.n_vars());
  const QEndo rho = strip_word(tau, sigma, cutoff);
  const Height h = height_of(rho, id);
  if (!h.is_infinite()) return {h, true};
  // no deviation through the cutoff; settle exactly when degrees stay small
  const Degree ds = degree(sigma);
  unsigned budget = ds.is_finite() ? std::max(1, ds.value()) : 1;
  for (const auto& e : tau.factors()) {
    budget *= elementary_degree(e);
    if (budget > exact_degree_budget) return {Height(static_cast<int>(cutoff) + 1), false};
  }
  return {height_of(strip_word(tau, sigma, std::nullopt), id), true};
}

ApproxResult approximate(const QEndo& sigma, int K, std::uint64_t seed) {
  if (sigma.n_vars() % 2 != 0) throw Error(ErrorCode::ArityMismatch, "approximation needs 2n variables");
  if (K < 1) throw Error(ErrorCode::InvalidInput, "target height must be positive");
  const PoissonStructure P(sigma.n_vars() / 2);
  const std::size_t N = P.dim();
  const auto cut = static_cast<unsigned>(K + 1);
  const QEndo id = QEndo::identity(N);

  ApproxResult res{QTameWord(N), Height::infinity(), true, K, seed, {}};
  const QMatrix a = linear_part(P, sigma);
  QEndo rho = strip_word(QTameWord(N), sigma, cut);
  if (a != identity_matrix<Rational>(static_cast<Eigen::Index>(N))) {
    QTameWord lin(N);
    lin.push_back(symplectic_linear(P, a));
    rho = strip_word(lin, rho, cut);
    res.word.append(lin);
  }

  for (Height h = height_of(rho, id); h <= K; h = height_of(rho, id)) {
    const Deviation d = deviation(rho);
    const QPoly H = hamiltonian_of(d, P);
    res.iterations.push_back({d.height, res.word.size()});
    QTameWord step(N);
    for (const auto& t : waring(H)) append_fused(step, flow_word(t.c, t.form, static_cast<unsigned>(d.height + 1), P));
    rho = strip_word(step, rho, cut);
    res.word.append(step);
    if (height_of(rho, id) <= h) throw Error(ErrorCode::InvalidInput, "approximation failed to progress");
  }

  const auto [achieved, exact] = approximation_height(res.word, sigma, cut);
  res.achieved = achieved;
  res.exact = exact;
  return res;
}

}  // namespace tamelift
