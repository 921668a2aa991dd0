#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "effectkit/central.hpp"
#include "effectkit/heyting.hpp"
#include "effectkit/order.hpp"

namespace effectkit {

struct ClassificationReport {
  bool is_orthoalgebra = false;
  bool is_omp = false;
  bool is_lattice = false;
  bool is_distributive = false;
  bool is_oml = false;
  bool has_riesz = false;
  bool is_boolean_ea = false;
  bool is_mv_effect = false;
  bool is_hmv = false;
  std::vector<ElementId> principal_elements;
  std::vector<ElementId> center;
};

inline bool has_riesz_decomposition(const EffectAlgebraTable& t,
                                    const OrderStructure& o) {
  for (ElementId y = 0; y < t.n; ++y)
    for (ElementId z = 0; z < t.n; ++z) {
      if (!t.defined(y, z)) continue;
      ElementId yz = t.at(y, z);
      for (ElementId x = 0; x < t.n; ++x) {
        if (!o.is_leq(x, yz)) continue;
        bool split = false;
        for (ElementId x1 = 0; x1 < t.n && !split; ++x1) {
          if (!o.is_leq(x1, y)) continue;
          for (ElementId x2 = 0; x2 < t.n; ++x2) {
            if (!o.is_leq(x2, z)) continue;
            if (t.defined(x1, x2) && t.at(x1, x2) == x) {
              split = true;
              break;
            }
          }
        }
        if (!split) return false;
      }
    }
  return true;
}

inline ClassificationReport classify(const EffectAlgebraTable& t) {
  require_validated(t, "classify");
  OrderStructure o = derive_order(t);
  ClassificationReport r;

  r.is_orthoalgebra = true;
  for (ElementId x = 0; x < t.n; ++x)
    if (o.meet_of(x, o.supp[x]) != t.zero) r.is_orthoalgebra = false;

  for (ElementId p = 0; p < t.n; ++p)
    if (is_principal(t, o, p)) r.principal_elements.push_back(p);
  r.is_omp = static_cast<int>(r.principal_elements.size()) == t.n;

  r.is_lattice = o.is_lattice();
  if (r.is_lattice) {
    r.is_distributive = true;
    for (ElementId x = 0; x < t.n && r.is_distributive; ++x)
      for (ElementId y = 0; y < t.n && r.is_distributive; ++y)
        for (ElementId z = 0; z < t.n; ++z)
          if (o.meet_of(x, o.join_of(y, z)) !=
              o.join_of(o.meet_of(x, y), o.meet_of(x, z))) {
            r.is_distributive = false;
            break;
          }
  }
  r.is_oml = r.is_lattice && r.is_omp;
  r.has_riesz = has_riesz_decomposition(t, o);
  r.is_boolean_ea = r.is_omp && r.has_riesz;
  r.is_mv_effect = r.is_lattice && r.has_riesz;
  r.is_hmv = r.is_lattice && derive_heyting(t, o).has_value();
  r.center = central_elements(t, o);
  return r;
}

inline bool jointly_orthogonal(const EffectAlgebraTable& t, ElementId x,
                               ElementId y, ElementId z) {
  return t.defined(x, y) && t.defined(t.at(x, y), z);
}

// Mackey compatibility by exhaustive search for the shared part.
inline bool compatible(const EffectAlgebraTable& t, ElementId x, ElementId y) {
  for (ElementId z = 0; z < t.n; ++z)
    for (ElementId x1 = 0; x1 < t.n; ++x1) {
      if (!t.defined(x1, z) || t.at(x1, z) != x) continue;
      for (ElementId y1 = 0; y1 < t.n; ++y1)
        if (jointly_orthogonal(t, x1, y1, z) && t.defined(y1, z) &&
            t.at(y1, z) == y)
          return true;
    }
  return false;
}

inline bool is_subeffect_algebra(const EffectAlgebraTable& t,
                                 const std::vector<ElementId>& s) {
  std::vector<char> in(t.n, 0);
  for (auto x : s) in[x] = 1;
  if (!in[t.zero] || !in[t.unit]) return false;
  OrderStructure o = derive_order(t);
  for (auto x : s) {
    if (!in[o.supp[x]]) return false;
    for (auto y : s)
      if (t.defined(x, y) && !in[t.at(x, y)]) return false;
  }
  return true;
}

// Relabels the subset s (which must be a subeffect algebra) as an effect
// algebra in its own right.
inline EffectAlgebraTable restrict_to(const EffectAlgebraTable& t,
                                      std::vector<ElementId> s,
                                      std::string name = {}) {
  std::sort(s.begin(), s.end());
  std::vector<ElementId> pos(t.n, kUndefined);
  for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<ElementId>(i);
  EffectAlgebraTable r = EffectAlgebraTable::empty(
      static_cast<int>(s.size()), pos[t.zero], pos[t.unit], std::move(name));
  for (auto x : s)
    for (auto y : s) {
      ElementId z = t.at(x, y);
      if (z == kUndefined) continue;
      if (pos[z] == kUndefined)
        throw std::invalid_argument("restrict_to: subset not closed under +");
      r.set_raw(pos[x], pos[y], pos[z]);
    }
  return r;
}

// The center operation proper: computes C(E) and verifies it is a Boolean
// subeffect algebra before returning it.
inline std::vector<ElementId> center(const EffectAlgebraTable& t) {
  require_validated(t, "center");
  OrderStructure o = derive_order(t);
  std::vector<ElementId> c = central_elements(t, o);
  if (!is_subeffect_algebra(t, c))
    throw std::logic_error("center: C(E) is not a subeffect algebra");
  ClassificationReport sub = classify(restrict_to(t, c));
  if (!sub.is_boolean_ea)
    throw std::logic_error("center: C(E) is not a Boolean effect algebra");
  return c;
}

struct LawCheck {
  std::string law;
  bool pass = true;
  std::vector<ElementId> witness;
};

struct LawReport {
  std::vector<LawCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// The standard derived laws, each decided by brute instantiation.
inline LawReport verify_basic_laws(const EffectAlgebraTable& t) {
  require_validated(t, "verify_basic_laws");
  OrderStructure o = derive_order(t);
  LawReport rep;
  auto check = [&](std::string law) -> LawCheck& {
    rep.checks.push_back({std::move(law), true, {}});
    return rep.checks.back();
  };

  {
    auto& c = check("cancellation");
    for (ElementId x = 0; x < t.n && c.pass; ++x)
      for (ElementId y = 0; y < t.n && c.pass; ++y)
        for (ElementId z = 0; z < t.n; ++z)
          if (t.defined(x, z) && t.defined(y, z) &&
              o.is_leq(t.at(x, z), t.at(y, z)) && !o.is_leq(x, y)) {
            c.pass = false;
            c.witness = {x, y, z};
            break;
          }
  }
  {
    auto& c = check("orthogonality-vs-order");  // x _|_ y  <=>  x <= y'
    for (ElementId x = 0; x < t.n && c.pass; ++x)
      for (ElementId y = 0; y < t.n; ++y)
        if (t.defined(x, y) != o.is_leq(x, o.supp[y])) {
          c.pass = false;
          c.witness = {x, y};
          break;
        }
  }
  {
    auto& c = check("double-supplement");
    for (ElementId x = 0; x < t.n; ++x)
      if (o.supp[o.supp[x]] != x) {
        c.pass = false;
        c.witness = {x};
        break;
      }
  }
  {
    auto& c = check("zero-neutral");  // x + 0 = x
    for (ElementId x = 0; x < t.n; ++x)
      if (!t.defined(x, t.zero) || t.at(x, t.zero) != x) {
        c.pass = false;
        c.witness = {x};
        break;
      }
  }
  {
    auto& c = check("supplement-antitone");
    for (ElementId x = 0; x < t.n && c.pass; ++x)
      for (ElementId y = 0; y < t.n; ++y)
        if (o.is_leq(x, y) && !o.is_leq(o.supp[y], o.supp[x])) {
          c.pass = false;
          c.witness = {x, y};
          break;
        }
  }
  {
    auto& c = check("bounds");  // 0 <= x <= u, 0' = u, u' = 0
    c.pass = o.supp[t.zero] == t.unit && o.supp[t.unit] == t.zero;
    for (ElementId x = 0; x < t.n && c.pass; ++x)
      c.pass = o.is_leq(t.zero, x) && o.is_leq(x, t.unit);
  }
  {
    auto& c = check("de-morgan-meet");  // (x /\ y)' = x' \/ y' when meet exists
    for (ElementId x = 0; x < t.n && c.pass; ++x)
      for (ElementId y = 0; y < t.n; ++y) {
        ElementId m = o.meet_of(x, y);
        if (m == kUndefined) continue;
        if (o.join_of(o.supp[x], o.supp[y]) != o.supp[m]) {
          c.pass = false;
          c.witness = {x, y};
          break;
        }
      }
  }
  {
    auto& c = check("de-morgan-join");
    for (ElementId x = 0; x < t.n && c.pass; ++x)
      for (ElementId y = 0; y < t.n; ++y) {
        ElementId j = o.join_of(x, y);
        if (j == kUndefined) continue;
        if (o.meet_of(o.supp[x], o.supp[y]) != o.supp[j]) {
          c.pass = false;
          c.witness = {x, y};
          break;
        }
      }
  }
  return rep;
}

// The traditional orthomodular-poset axioms evaluated over the derived
// order: (i) x <= y' implies x \/ y exists, (ii) x \/ x' = u, and (iii)
// the orthomodular identity x <= y => y = x \/ (x \/ y')'. Must agree
// with classify().is_omp on every validated table.
inline bool is_omp_traditional(const EffectAlgebraTable& t) {
  require_validated(t, "is_omp_traditional");
  OrderStructure o = derive_order(t);
  for (ElementId x = 0; x < t.n; ++x) {
    if (o.join_of(x, o.supp[x]) != t.unit) return false;
    for (ElementId y = 0; y < t.n; ++y) {
      if (o.is_leq(x, o.supp[y]) && o.join_of(x, y) == kUndefined) return false;
      if (o.is_leq(x, y)) {
        ElementId j1 = o.join_of(x, o.supp[y]);
        if (j1 == kUndefined) return false;
        ElementId j2 = o.join_of(x, o.supp[j1]);
        if (j2 != y) return false;
      }
    }
  }
  return true;
}

}  // namespace effectkit
