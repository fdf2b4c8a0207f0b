#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "tamelift/error.hpp"

namespace tamelift {

/// Exponent vector over a fixed number of variables. Up to kInline
/// exponents live inside the object; larger arities spill to the heap.
class Monomial {
 public:
  using exponent_type = std::uint32_t;
  static constexpr std::size_t kInline = 8;

  Monomial() = default;
  explicit Monomial(std::size_t n_vars) : n_(n_vars) {
    if (n_ > kInline) heap_.assign(n_, 0);
  }
  explicit Monomial(const std::vector<exponent_type>& exps) : Monomial(exps.size()) {
    std::copy(exps.begin(), exps.end(), data());
  }
  Monomial(std::initializer_list<exponent_type> exps) : Monomial(exps.size()) {
    std::copy(exps.begin(), exps.end(), data());
  }

  /// x_i^e in n_vars variables.
  static Monomial variable(std::size_t n_vars, std::size_t i, exponent_type e = 1) {
    if (i >= n_vars) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
    Monomial m(n_vars);
    m[i] = e;
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  exponent_type operator[](std::size_t i) const { return data()[i]; }
  exponent_type& operator[](std::size_t i) { return data()[i]; }
  std::span<const exponent_type> exponents() const noexcept { return {data(), n_}; }

  unsigned total_degree() const noexcept {
    const auto e = exponents();
    return std::accumulate(e.begin(), e.end(), 0U);
  }
  bool is_one() const noexcept {
    for (auto v : exponents()) {
      if (v != 0) return false;
    }
    return true;
  }

  Monomial& operator*=(const Monomial& o) {
    if (o.size() != size()) throw Error(ErrorCode::ArityMismatch, "monomial arity mismatch");
    for (std::size_t i = 0; i < n_; ++i) (*this)[i] += o[i];
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    const auto x = a.exponents(), y = b.exponents();
    return std::equal(x.begin(), x.end(), y.begin(), y.end());
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    const auto x = a.exponents(), y = b.exponents();
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  exponent_type* data() noexcept { return n_ > kInline ? heap_.data() : inline_.data(); }
  const exponent_type* data() const noexcept { return n_ > kInline ? heap_.data() : inline_.data(); }

  std::size_t n_ = 0;
  std::array<exponent_type, kInline> inline_{};
  std::vector<exponent_type> heap_;
};

/// Canonical term order: descending lexicographic on exponent vectors.
struct LexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

}  // namespace tamelift
