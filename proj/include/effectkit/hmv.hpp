#pragma once

#include <optional>
#include <vector>

#include "effectkit/classify.hpp"
#include "effectkit/heyting.hpp"

namespace effectkit {

struct Theorem63Report {
  std::vector<LawCheck> clauses;
  bool all_pass() const {
    for (const auto& c : clauses)
      if (!c.pass) return false;
    return true;
  }
};

// Executable form of Theorem 6.3 on an algebra with a derived Heyting
// structure. Every clause should pass; a failure is witnessed and means a
// bug, not a property of the input.
inline Theorem63Report check_theorem_6_3(const EffectAlgebraTable& t,
                                         const HeytingStructure& h) {
  OrderStructure o = derive_order(t);
  ClassificationReport cls = classify(t);
  std::vector<char> central(t.n, 0);
  for (auto z : cls.center) central[z] = 1;

  Theorem63Report rep;
  auto clause = [&](std::string name) -> LawCheck& {
    rep.clauses.push_back({std::move(name), true, {}});
    return rep.clauses.back();
  };

  {
    auto& c = clause("(i) e' central");
    for (ElementId e = 0; e < t.n; ++e)
      if (!central[h.neg[e]]) {
        c.pass = false;
        c.witness = {e};
        break;
      }
  }
  {
    auto& c = clause("(ii) e' <= e-supp, equality iff central");
    for (ElementId e = 0; e < t.n; ++e) {
      bool le = o.is_leq(h.neg[e], o.supp[e]);
      bool eq = h.neg[e] == o.supp[e];
      if (!le || (eq != (central[e] != 0))) {
        c.pass = false;
        c.witness = {e};
        break;
      }
    }
  }
  {
    auto& c = clause("(iii) heyting center = C(E)");
    c.pass = h.heyting_center == cls.center;
  }
  {
    auto& c = clause("(iv) e/\\f=0 implies e _|_ f");
    for (ElementId e = 0; e < t.n && c.pass; ++e)
      for (ElementId f = 0; f < t.n; ++f)
        if (o.meet_of(e, f) == t.zero && !t.defined(e, f)) {
          c.pass = false;
          c.witness = {e, f};
          break;
        }
  }
  {
    auto& c = clause("(v) MV-effect algebra");
    c.pass = cls.is_mv_effect;
  }
  {
    auto& c = clause("(vi) Stone-Heyting p' v p'' = u");
    for (ElementId p = 0; p < t.n; ++p) {
      ElementId np = h.neg[p];
      if (o.join_of(np, h.neg[np]) != t.unit) {
        c.pass = false;
        c.witness = {p};
        break;
      }
    }
  }
  return rep;
}

// The prime-map characterization of HMV-algebras: a lattice-ordered
// effect algebra is Heyting iff it carries a map ': E -> C(E) with
// e /\ f = 0 iff e <= f'. The only candidate for f' is the join of the
// central elements disjoint from f; build it, then verify.
inline std::optional<std::vector<ElementId>> hmv_via_prime_map(
    const EffectAlgebraTable& t) {
  require_validated(t, "hmv_via_prime_map");
  OrderStructure o = derive_order(t);
  if (!o.is_lattice())
    throw std::invalid_argument("hmv_via_prime_map: input is not lattice ordered");
  std::vector<ElementId> cent = central_elements(t, o);
  std::vector<ElementId> prime(t.n, kUndefined);
  for (ElementId f = 0; f < t.n; ++f) {
    ElementId cand = t.zero;
    for (auto c : cent)
      if (o.meet_of(c, f) == t.zero) cand = o.join_of(cand, c);
    prime[f] = cand;
  }
  // cand may have escaped the center through the joins; and the
  // biconditional needs checking either way.
  std::vector<char> central(t.n, 0);
  for (auto z : cent) central[z] = 1;
  for (ElementId f = 0; f < t.n; ++f)
    if (!central[prime[f]]) return std::nullopt;
  for (ElementId e = 0; e < t.n; ++e)
    for (ElementId f = 0; f < t.n; ++f)
      if ((o.meet_of(e, f) == t.zero) != o.is_leq(e, prime[f]))
        return std::nullopt;
  return prime;
}

}  // namespace effectkit
