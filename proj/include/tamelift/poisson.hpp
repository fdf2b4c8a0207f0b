#pragma once

#include "tamelift/endo.hpp"
#include "tamelift/matrix.hpp"

namespace tamelift {

/// Standard constant Poisson structure on 2n generators x_1..x_n, p_1..p_n
/// (x_{n+i} = p_i), with {x_i, x_j} = delta_{i,n+j} - delta_{i+n,j}.
/// Under this table {x_i, p_i} = -1 and {p_i, x_i} = +1.
class PoissonStructure {
 public:
  explicit PoissonStructure(std::size_t n) : n_(n), table_(poisson_matrix(n)) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return 2 * n_; }
  const QMatrix& table() const noexcept { return table_; }
  /// b(i, j), zero-based.
  int b(std::size_t i, std::size_t j) const {
    return (i == j + n_ ? 1 : 0) - (i + n_ == j ? 1 : 0);
  }
  /// Index of the Darboux partner of generator i.
  std::size_t conjugate(std::size_t i) const { return i < n_ ? i + n_ : i - n_; }

  /// sum_{i,j} b(i,j) (df/dx_i)(dg/dx_j).
  template <class C>
  Poly<C> bracket(const Poly<C>& f, const Poly<C>& g) const {
    check(f);
    f.check_compatible(g);
    Poly<C> r(f.n_vars(), f.ring());
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t pi = i + n_;
      // b(p_i, x_i) = +1, b(x_i, p_i) = -1
      r += partial_derivative(f, pi) * partial_derivative(g, i);
      r -= partial_derivative(f, i) * partial_derivative(g, pi);
    }
    return r;
  }

  /// Hamiltonian vector field X_H(g) = {H, g} applied to every generator.
  template <class C>
  std::vector<Poly<C>> hamiltonian_field(const Poly<C>& h) const {
    check(h);
    std::vector<Poly<C>> out;
    for (std::size_t j = 0; j < dim(); ++j) {
      out.push_back(bracket(h, Poly<C>::variable(dim(), j, h.ring())));
    }
    return out;
  }

 private:
  template <class C>
  void check(const Poly<C>& f) const {
    if (f.n_vars() != dim()) {
      throw Error(ErrorCode::ArityMismatch, "Poisson bracket needs 2n variables");
    }
  }

  std::size_t n_;
  QMatrix table_;
};

/// {phi(x_i), phi(x_j)} = b(i,j) for all generator pairs i < j.
template <class C>
bool is_symplectomorphism(const PoissonStructure& P, const Endo<C>& phi) {
  if (phi.n_vars() != P.dim()) return false;
  const auto one = Poly<C>::one(P.dim(), phi.ring());
  for (std::size_t i = 0; i < P.dim(); ++i) {
    for (std::size_t j = i + 1; j < P.dim(); ++j) {
      const auto expected = one * ring_integer<C>(phi.ring(), P.b(i, j));
      if (!(P.bracket(phi[i], phi[j]) == expected)) return false;
    }
  }
  return true;
}

/// A^T J A == J for the bracket matrix J.
bool is_symplectic_matrix(const PoissonStructure& P, const QMatrix& a);

}  // namespace tamelift
