#pragma once

#include <compare>
#include <string>

#include "tamelift/error.hpp"

namespace tamelift {

/// Height of a polynomial or map: a non-negative integer or +infinity (the
/// height of zero).
class Height {
 public:
  constexpr Height() = default;  // infinity
  constexpr explicit Height(int k) : v_(k), finite_(true) {}
  static constexpr Height infinity() { return Height(); }

  constexpr bool is_infinite() const noexcept { return !finite_; }
  int value() const {
    if (!finite_) throw Error(ErrorCode::InvalidInput, "height is infinite");
    return v_;
  }
  std::string str() const { return finite_ ? std::to_string(v_) : "inf"; }

  friend constexpr bool operator==(const Height& a, const Height& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(const Height& a, const Height& b) {
    if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
    return a.v_ <=> b.v_;
  }
  friend constexpr bool operator==(const Height& a, int b) { return a == Height(b); }
  friend constexpr std::strong_ordering operator<=>(const Height& a, int b) {
    return a <=> Height(b);
  }

 private:
  int v_ = 0;
  bool finite_ = false;
};

/// Total degree: a non-negative integer or -infinity (the degree of zero).
class Degree {
 public:
  constexpr Degree() = default;  // -infinity
  constexpr explicit Degree(int k) : v_(k), finite_(true) {}
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_finite() const noexcept { return finite_; }
  int value() const {
    if (!finite_) throw Error(ErrorCode::InvalidInput, "degree is -infinity");
    return v_;
  }
  std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

  friend constexpr bool operator==(const Degree& a, const Degree& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.v_ <=> b.v_;
  }
  friend constexpr bool operator==(const Degree& a, int b) { return a == Degree(b); }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, int b) {
    return a <=> Degree(b);
  }

 private:
  int v_ = 0;
  bool finite_ = false;
};

}  // namespace tamelift
