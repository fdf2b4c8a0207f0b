#include "tamelift/tame.hpp"

namespace tamelift {

bool is_symplectic_matrix(const PoissonStructure& P, const QMatrix& a) {
  if (a.rows() != static_cast<Eigen::Index>(P.dim()) || a.cols() != a.rows()) return false;
  const QMatrix lhs = a.transpose() * P.table() * a;
  return lhs == P.table();
}

bool elementary_is_symplectic(const PoissonStructure& P, const QElementary& e) {
  if (e.n_vars() != P.dim()) return false;
  if (e.is_linear()) return is_symplectic_matrix(P, e.as_linear().a);
  return is_symplectomorphism(P, e.evaluate());
}

ElementaryAuto<Rational> symplectic_transvection(const PoissonStructure& P, std::size_t target,
                                                 QPoly f) {
  if (f.n_vars() != P.dim()) throw Error(ErrorCode::ArityMismatch, "transvection arity mismatch");
  if (target >= P.dim()) throw Error(ErrorCode::IndexOutOfRange, "transvection target out of range");
  const std::size_t partner = P.conjugate(target);
  for (std::size_t i = 0; i < P.dim(); ++i) {
    if (i != partner && !is_free_of(f, i)) {
      throw Error(ErrorCode::NotSymplectic,
                  "symplectic transvection may only depend on the conjugate of its target");
    }
  }
  return QElementary::transvection(target, std::move(f));
}

ElementaryAuto<Rational> symplectic_linear(const PoissonStructure& P, QMatrix a) {
  if (!is_symplectic_matrix(P, a)) throw Error(ErrorCode::NotSymplectic, "matrix is not in Sp(2n)");
  return QElementary::linear(std::move(a));
}

QPoly nagata_delta() {
  const auto x = QPoly::variable(3, 0), y = QPoly::variable(3, 1), z = QPoly::variable(3, 2);
  return x * x - y * z;
}

NagataPair nagata() {
  const auto x = QPoly::variable(3, 0), y = QPoly::variable(3, 1), z = QPoly::variable(3, 2);
  const QPoly d = nagata_delta();
  const Rational two(2);
  QEndo map({x + d * z, y + two * d * x + d * d * z, z});
  QEndo inv({x - d * z, y - two * d * x + d * d * z, z});
  return {std::move(map), std::move(inv)};
}

QEndo nagata_printed() {
  const auto x = QPoly::variable(3, 0), y = QPoly::variable(3, 1), z = QPoly::variable(3, 2);
  const QPoly d = nagata_delta();
  return QEndo({x + d * x, y + Rational(2) * d * x + d * d * z, z});
}

}  // namespace tamelift
