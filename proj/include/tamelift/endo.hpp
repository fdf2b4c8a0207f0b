#pragma once

#include <optional>
#include <vector>

#include "tamelift/poly.hpp"

namespace tamelift {

/// Polynomial endomorphism of C[x_1..x_N], identified with its tuple of
/// generator images (phi(x_1), ..., phi(x_N)).
template <class C>
class Endo {
 public:
  using poly_type = Poly<C>;
  using ring_type = typename poly_type::ring_type;

  Endo() = default;
  explicit Endo(std::vector<poly_type> images) : images_(std::move(images)) {
    const std::size_t n = images_.size();
    for (const auto& g : images_) {
      if (g.n_vars() != n) {
        throw Error(ErrorCode::ArityMismatch, "endomorphism needs N images in N variables");
      }
      if (!(g.ring() == images_.front().ring())) {
        throw Error(ErrorCode::RingMismatch, "endomorphism images over different rings");
      }
    }
  }

  static Endo identity(std::size_t n_vars, const ring_type& ring = {}) {
    std::vector<poly_type> images;
    for (std::size_t i = 0; i < n_vars; ++i) images.push_back(poly_type::variable(n_vars, i, ring));
    return Endo(std::move(images));
  }

  std::size_t n_vars() const noexcept { return images_.size(); }
  ring_type ring() const { return images_.empty() ? ring_type{} : images_.front().ring(); }
  const std::vector<poly_type>& images() const noexcept { return images_; }
  const poly_type& operator[](std::size_t i) const { return images_.at(i); }

  friend bool operator==(const Endo&, const Endo&) = default;

  void check_compatible(const Endo& o) const {
    if (n_vars() != o.n_vars()) throw Error(ErrorCode::ArityMismatch, "endomorphism arity mismatch");
    if (!(ring() == o.ring())) throw Error(ErrorCode::RingMismatch, "endomorphism ring mismatch");
  }

 private:
  std::vector<poly_type> images_;
};

/// f(phi(x_1), ..., phi(x_N)).
template <class C>
Poly<C> endo_apply(const Endo<C>& phi, const Poly<C>& f,
                   std::optional<unsigned> max_degree = std::nullopt) {
  return substitute(f, phi.images(), max_degree);
}

/// (phi o psi)(x_i) = phi(x_i) with psi's images substituted.
template <class C>
Endo<C> endo_compose(const Endo<C>& phi, const Endo<C>& psi,
                     std::optional<unsigned> max_degree = std::nullopt) {
  phi.check_compatible(psi);
  std::vector<Poly<C>> out;
  out.reserve(phi.n_vars());
  for (const auto& g : phi.images()) out.push_back(substitute(g, psi.images(), max_degree));
  return Endo<C>(std::move(out));
}

/// Coordinatewise phi - psi, as a tuple (not itself a map composition).
template <class C>
std::vector<Poly<C>> endo_difference(const Endo<C>& phi, const Endo<C>& psi) {
  phi.check_compatible(psi);
  std::vector<Poly<C>> d;
  for (std::size_t i = 0; i < phi.n_vars(); ++i) d.push_back(phi[i] - psi[i]);
  return d;
}

template <class C>
Height height(const Endo<C>& phi) {
  Height h = Height::infinity();
  for (const auto& g : phi.images()) h = std::min(h, height(g));
  return h;
}

template <class C>
Degree degree(const Endo<C>& phi) {
  Degree d = Degree::minus_infinity();
  for (const auto& g : phi.images()) d = std::max(d, degree(g));
  return d;
}

/// Ht(phi - psi). The power-series distance is exp(-Ht); callers compare
/// heights, never floats.
template <class C>
Height height_of(const Endo<C>& phi, const Endo<C>& psi) {
  Height h = Height::infinity();
  for (const auto& g : endo_difference(phi, psi)) h = std::min(h, height(g));
  return h;
}

/// Display form of the distance: "0" for equal maps, "1" at height zero,
/// "e^-k" otherwise.
inline std::string distance_str(const Height& h) {
  if (h.is_infinite()) return "0";
  if (h.value() == 0) return "1";
  return "e^-" + std::to_string(h.value());
}

/// Certificate-based membership in Aut: phi o inv = inv o phi = id exactly.
template <class C>
bool is_automorphism_certificate(const Endo<C>& phi, const Endo<C>& inv) {
  if (phi.n_vars() != inv.n_vars() || !(phi.ring() == inv.ring())) return false;
  const auto id = Endo<C>::identity(phi.n_vars(), phi.ring());
  return endo_compose(phi, inv) == id && endo_compose(inv, phi) == id;
}

template <class C>
Poly<C> jacobian_det(const Endo<C>& phi) {
  return jacobian_det(phi.images());
}

template <class C>
bool jacobian_is_unit_constant(const Endo<C>& phi) {
  return jacobian_det(phi) == Poly<C>::one(phi.n_vars(), phi.ring());
}

}  // namespace tamelift
