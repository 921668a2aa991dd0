#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "effectkit/central.hpp"
#include "effectkit/order.hpp"

namespace effectkit {

// Heyting conditional and negation on a lattice-ordered effect algebra,
// when they exist. heyting_center is the set of Heyting-closed elements
// {p' : p in E} = {c : c'' = c}.
struct HeytingStructure {
  int n = 0;
  std::vector<ElementId> cond;  // n*n, total
  std::vector<ElementId> neg;   // n
  std::vector<ElementId> heyting_center;  // sorted

  ElementId cond_of(ElementId q, ElementId r) const {
    return cond[static_cast<std::size_t>(q) * n + r];
  }
};

// Computes, for each pair (q,r), the join of {p : p /\ q <= r} and keeps
// the result only if that candidate actually satisfies the adjunction
// p /\ q <= r  <=>  p <= (q > r) for every p. In a non-distributive
// lattice the candidate join can fail the left-to-right direction, which
// is exactly when the algebra is not Heyting.
//
// One further gate: the Heyting negation must land in the center C(E).
// The bare lattice adjunction can hold on a distributive lattice whose
// effect-algebra structure is wrong for it (two self-supplementary atoms
// over the four-element Boolean lattice, say); such a conditional
// violates Theorem 6.3 and is not what the prime-map characterization of
// HMV-algebras describes, so it is rejected here.
inline std::optional<HeytingStructure> derive_heyting(
    const EffectAlgebraTable& t, const OrderStructure& o) {
  if (!o.is_lattice())
    throw std::invalid_argument("derive_heyting: input is not lattice ordered");

  HeytingStructure h;
  h.n = t.n;
  h.cond.assign(static_cast<std::size_t>(t.n) * t.n, kUndefined);
  for (ElementId q = 0; q < t.n; ++q)
    for (ElementId r = 0; r < t.n; ++r) {
      ElementId cand = t.zero;
      for (ElementId p = 0; p < t.n; ++p)
        if (o.is_leq(o.meet_of(p, q), r)) cand = o.join_of(cand, p);
      if (!o.is_leq(o.meet_of(cand, q), r)) return std::nullopt;
      h.cond[static_cast<std::size_t>(q) * t.n + r] = cand;
    }

  // The candidate is the largest p with p /\ q <= r by construction, so
  // the adjunction now holds in full; record negation and the center.
  h.neg.assign(t.n, kUndefined);
  for (ElementId p = 0; p < t.n; ++p) h.neg[p] = h.cond_of(p, t.zero);

  std::vector<char> central(t.n, 0);
  for (auto z : central_elements(t, o)) central[z] = 1;
  for (ElementId p = 0; p < t.n; ++p)
    if (!central[h.neg[p]]) return std::nullopt;

  std::vector<char> in_center(t.n, 0);
  for (ElementId p = 0; p < t.n; ++p) in_center[h.neg[p]] = 1;
  for (ElementId c = 0; c < t.n; ++c) {
    bool fixed = h.neg[h.neg[c]] == c;
    if (fixed != (in_center[c] != 0))
      throw std::logic_error("heyting center characterizations disagree");
    if (fixed) h.heyting_center.push_back(c);
  }
  return h;
}

inline std::optional<HeytingStructure> derive_heyting(const EffectAlgebraTable& t) {
  return derive_heyting(t, derive_order(t));
}

}  // namespace effectkit
