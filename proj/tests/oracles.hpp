#pragma once

/// Independent reference computations for the test and acceptance binaries.
/// None of these call the library routine they are used to check.

#include <map>
#include <vector>

#include "tamelift/weyl.hpp"

namespace tamelift::oracle {

/// Product in normal order by literal rewriting: letters are generator indices
/// (x_i = i, y_i = n + i); any adjacent out-of-order pair is swapped, and a
/// swap of y_i x_i also emits the shorter word times the relation parameter.
template <class C>
WeylElt<C> rewrite_product(const WeylElt<C>& a, const WeylElt<C>& b) {
  using Word = std::vector<std::size_t>;
  const std::size_t n = a.n();
  auto letters = [&](const Monomial& m, Word& w) {
    for (std::size_t i = 0; i < 2 * n; ++i)
      for (unsigned e = 0; e < m[i]; ++e) w.push_back(i);
  };
  std::map<Word, C> pending;
  auto push = [&](const Word& w, const C& c) {
    if (coeff_traits<C>::is_zero(c)) return;
    auto [it, inserted] = pending.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (coeff_traits<C>::is_zero(it->second)) pending.erase(it);
    }
  };
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Word w;
      letters(ma, w);
      letters(mb, w);
      push(w, ca * cb);
    }
  }
  WeylElt<C> out = a.zero_like();
  while (!pending.empty()) {
    auto it = pending.begin();
    Word w = it->first;
    const C c = it->second;
    pending.erase(it);
    std::size_t k = 0;
    while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
    if (k + 1 >= w.size()) {
      Monomial m(2 * n);
      for (std::size_t l : w) m[l] += 1;
      out.add_term(m, c);
      continue;
    }
    const std::size_t u = w[k], v = w[k + 1];
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    push(swapped, c);
    if (u >= n && v == u - n) {
      Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
      push(shorter, c * a.relation());
    }
  }
  return out;
}

template <class C>
WeylElt<C> rewrite_commutator(const WeylElt<C>& a, const WeylElt<C>& b) {
  return rewrite_product(a, b) - rewrite_product(b, a);
}

}  // namespace tamelift::oracle
