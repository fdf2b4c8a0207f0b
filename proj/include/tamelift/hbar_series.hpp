#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tamelift/coefficient.hpp"

namespace tamelift {

template <class C>
struct HbarRing {
  static constexpr int kUntruncated = -1;
  typename coeff_traits<C>::ring_type base{};
  /// Truncation order K (terms above hbar^K are dropped), or kUntruncated for
  /// the polynomial ring C[hbar].
  int order = kUntruncated;
  friend bool operator==(const HbarRing&, const HbarRing&) = default;
};

/// Polynomial in hbar, optionally truncated mod hbar^{K+1}.
///
/// Products that overflow the truncation order are dropped, never reported.
template <class C>
class HbarSeries {
 public:
  using traits = coeff_traits<C>;
  using ring_type = HbarRing<C>;
  static constexpr int kUntruncated = ring_type::kUntruncated;

  HbarSeries() = default;
  explicit HbarSeries(const ring_type& ring) : ring_(ring) {}
  HbarSeries(const ring_type& ring, const C& constant) : ring_(ring) { add(0, constant); }

  /// The element hbar^k (zero when k exceeds the truncation order).
  static HbarSeries power(const ring_type& ring, int k) {
    HbarSeries s(ring);
    s.add(k, traits::one(ring.base));
    return s;
  }

  const ring_type& ring() const noexcept { return ring_; }
  int order() const noexcept { return ring_.order; }
  bool truncated() const noexcept { return ring_.order != kUntruncated; }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Largest hbar exponent with a nonzero coefficient, or -1 for zero.
  int max_power() const noexcept { return static_cast<int>(c_.size()) - 1; }
  /// Smallest hbar exponent with a nonzero coefficient, or -1 for zero.
  int valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (!traits::is_zero(c_[k])) return static_cast<int>(k);
    }
    return -1;
  }

  C coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return traits::zero(ring_.base);
    return c_[static_cast<std::size_t>(k)];
  }

  void add(int k, const C& v) {
    if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "negative hbar exponent");
    if (truncated() && k > ring_.order) return;
    if (traits::is_zero(v)) return;
    if (static_cast<int>(c_.size()) <= k) {
      c_.resize(static_cast<std::size_t>(k) + 1, traits::zero(ring_.base));
    }
    c_[static_cast<std::size_t>(k)] += v;
    trim();
  }

  /// Multiply by hbar^k.
  HbarSeries shifted(int k) const {
    HbarSeries r(ring_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.add(static_cast<int>(i) + k, c_[i]);
    return r;
  }

  /// Substitute a ring constant for hbar.
  C evaluate(const C& h) const {
    C acc = traits::zero(ring_.base);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * h + *it;
    return acc;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (traits::is_zero(c_[k])) continue;
      std::string t = traits::to_string(c_[k]);
      if (!s.empty()) {
        if (t.front() == '-') {
          s += " - ";
          t.erase(0, 1);
        } else {
          s += " + ";
        }
      }
      if (k == 0) {
        s += t;
      } else {
        if (t != "1") s += t + "*";
        s += k == 1 ? "h" : "h^" + std::to_string(k);
      }
    }
    return s;
  }

  HbarSeries& operator+=(const HbarSeries& o) {
    check_ring(o);
    for (std::size_t k = 0; k < o.c_.size(); ++k) add(static_cast<int>(k), o.c_[k]);
    return *this;
  }
  HbarSeries& operator-=(const HbarSeries& o) { return *this += -o; }
  HbarSeries& operator*=(const HbarSeries& o) { return *this = *this * o; }

  friend HbarSeries operator+(HbarSeries a, const HbarSeries& b) { return a += b; }
  friend HbarSeries operator-(HbarSeries a, const HbarSeries& b) { return a -= b; }
  friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
    a.check_ring(b);
    HbarSeries r(a.ring_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (a.truncated() && static_cast<int>(i + j) > a.ring_.order) break;
        r.add(static_cast<int>(i + j), a.c_[i] * b.c_[j]);
      }
    }
    return r;
  }
  HbarSeries operator-() const {
    HbarSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend bool operator==(const HbarSeries& a, const HbarSeries& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
  }

 private:
  void check_ring(const HbarSeries& o) const {
    if (!(ring_ == o.ring_)) {
      throw Error(ErrorCode::RingMismatch, "hbar series over different truncation orders");
    }
  }
  void trim() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }

  ring_type ring_{};
  std::vector<C> c_;
};

template <class C>
struct coeff_traits<HbarSeries<C>> {
  using ring_type = HbarRing<C>;
  using base_traits = coeff_traits<C>;
  static HbarSeries<C> zero(const ring_type& r) { return HbarSeries<C>(r); }
  static HbarSeries<C> one(const ring_type& r) {
    return HbarSeries<C>(r, base_traits::one(r.base));
  }
  static HbarSeries<C> from_integer(const ring_type& r, const Integer& v) {
    return HbarSeries<C>(r, base_traits::from_integer(r.base, v));
  }
  static HbarSeries<C> from_rational(const ring_type& r, const Rational& v) {
    return HbarSeries<C>(r, base_traits::from_rational(r.base, v));
  }
  static bool is_zero(const HbarSeries<C>& c) { return c.is_zero(); }
  static std::string to_string(const HbarSeries<C>& c) {
    const std::string s = c.str();
    return s.find_first_of("+h", 1) == std::string::npos ? s : "(" + s + ")";
  }
  static std::uint64_t characteristic(const ring_type& r) {
    return base_traits::characteristic(r.base);
  }
  static void check(const ring_type& r, const HbarSeries<C>& c) {
    if (!(c.ring() == r)) throw Error(ErrorCode::RingMismatch, "hbar series ring mismatch");
  }
  static HbarSeries<C> coerce(const ring_type& r, const HbarSeries<C>& c) {
    check(r, c);
    return c;
  }
};

using QHbar = HbarSeries<Rational>;

inline HbarRing<Rational> hbar_ring(int order = HbarRing<Rational>::kUntruncated) {
  return HbarRing<Rational>{RationalField{}, order};
}

}  // namespace tamelift
