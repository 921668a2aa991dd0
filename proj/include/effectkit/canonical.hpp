#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "effectkit/effect_algebra.hpp"

namespace effectkit {

// Relabels t along newlabel (old id -> new id).
inline EffectAlgebraTable apply_relabeling(const EffectAlgebraTable& t,
                                           const std::vector<ElementId>& newlabel) {
  EffectAlgebraTable r = EffectAlgebraTable::empty(t.n, newlabel[t.zero],
                                                   newlabel[t.unit], t.name);
  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId y = 0; y < t.n; ++y) {
      ElementId z = t.at(x, y);
      if (z != kUndefined) r.set_raw(newlabel[x], newlabel[y], newlabel[z]);
    }
  return r;
}

// Flat comparison key; undefined cells sort after all element values.
inline std::vector<int> table_signature(const EffectAlgebraTable& t) {
  std::vector<int> sig;
  sig.reserve(t.osum.size());
  for (auto z : t.osum) sig.push_back(z == kUndefined ? t.n : z);
  return sig;
}

namespace detail {

// Label-invariant per-element keys: definedness degree, self-supplement
// flag, then one refinement round over orthogonality neighbours. Only
// used to restrict the relabeling search; correctness never depends on
// how finely the classes split.
inline std::vector<std::vector<int>> invariant_keys(const EffectAlgebraTable& t) {
  std::vector<std::vector<int>> key(t.n);
  for (ElementId x = 0; x < t.n; ++x) {
    int deg = 0, diag = t.at(x, x) == kUndefined ? 0 : 1;
    for (ElementId y = 0; y < t.n; ++y)
      if (t.defined(x, y)) ++deg;
    key[x] = {deg, diag, t.at(x, x) == t.unit ? 1 : 0};
  }
  std::vector<std::vector<int>> refined(t.n);
  for (ElementId x = 0; x < t.n; ++x) {
    std::vector<std::vector<int>> nbr;
    for (ElementId y = 0; y < t.n; ++y)
      if (t.defined(x, y)) nbr.push_back(key[y]);
    std::sort(nbr.begin(), nbr.end());
    refined[x] = key[x];
    for (const auto& k : nbr)
      refined[x].insert(refined[x].end(), k.begin(), k.end());
  }
  return refined;
}

}  // namespace detail

// Canonical representative of the isomorphism class of t: zero lands on
// 0, unit on n-1, and among all such relabelings (restricted to
// invariant-respecting ones) the lexicographically minimal table wins.
inline EffectAlgebraTable canonical_form(const EffectAlgebraTable& t) {
  auto keys = detail::invariant_keys(t);
  // Group the mid elements by key; classes take position blocks in key
  // order, so the admissible relabelings are exactly the products of
  // within-class permutations.
  std::map<std::vector<int>, std::vector<ElementId>> classes;
  for (ElementId x = 0; x < t.n; ++x) {
    if (x == t.zero || x == t.unit) continue;
    classes[keys[x]].push_back(x);
  }
  std::vector<ElementId> newlabel(t.n, kUndefined);
  newlabel[t.zero] = 0;
  newlabel[t.unit] = t.n - 1;

  std::vector<std::vector<ElementId>> groups;
  for (auto& [k, members] : classes) groups.push_back(members);

  EffectAlgebraTable best;
  std::vector<int> best_sig;
  bool have_best = false;

  // Depth-first product of per-class permutations.
  auto rec = [&](auto&& self, std::size_t gi, ElementId next_pos) -> void {
    if (gi == groups.size()) {
      EffectAlgebraTable cand = apply_relabeling(t, newlabel);
      auto sig = table_signature(cand);
      if (!have_best || sig < best_sig) {
        best = std::move(cand);
        best_sig = std::move(sig);
        have_best = true;
      }
      return;
    }
    auto& g = groups[gi];
    std::sort(g.begin(), g.end());
    do {
      for (std::size_t i = 0; i < g.size(); ++i)
        newlabel[g[i]] = next_pos + static_cast<ElementId>(i);
      self(self, gi + 1, next_pos + static_cast<ElementId>(g.size()));
    } while (std::next_permutation(g.begin(), g.end()));
  };
  rec(rec, 0, 1);
  best.name = t.name;
  return best;
}

inline bool is_canonical(const EffectAlgebraTable& t) {
  if (t.zero != 0 || t.unit != t.n - 1) return false;
  return table_signature(t) == table_signature(canonical_form(t));
}

inline bool isomorphic(const EffectAlgebraTable& a, const EffectAlgebraTable& b) {
  if (a.n != b.n) return false;
  return table_signature(canonical_form(a)) == table_signature(canonical_form(b));
}

}  // namespace effectkit
