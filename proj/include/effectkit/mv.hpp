#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "effectkit/classify.hpp"

namespace effectkit {

// A total MV-sum and supplementation on a finite carrier (Chang axioms).
struct MVTable {
  int n = 0;
  ElementId zero = 0;
  ElementId unit = 0;
  std::vector<ElementId> mvsum;  // n*n, total
  std::vector<ElementId> supp;   // n, total
  std::string name;

  ElementId sum(ElementId p, ElementId q) const {
    return mvsum[static_cast<std::size_t>(p) * n + q];
  }
  ElementId sup(ElementId p) const { return supp[p]; }

  static MVTable empty(int n, ElementId zero, ElementId unit,
                       std::string name = {}) {
    MVTable m;
    m.n = n;
    m.zero = zero;
    m.unit = unit;
    m.mvsum.assign(static_cast<std::size_t>(n) * n, kUndefined);
    m.supp.assign(n, kUndefined);
    m.name = std::move(name);
    return m;
  }

  bool operator==(const MVTable& o) const {
    return n == o.n && zero == o.zero && unit == o.unit && mvsum == o.mvsum &&
           supp == o.supp;
  }
};

struct MVViolation {
  std::string axiom;  // "format" or "i".."viii"
  std::vector<ElementId> witness;
};

struct MVValidationResult {
  std::vector<MVViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline MVValidationResult validate_mv(const MVTable& m) {
  MVValidationResult res;
  auto fail = [&](const char* ax, std::vector<ElementId> w) {
    res.violations.push_back({ax, std::move(w)});
  };
  if (m.n <= 0 || m.mvsum.size() != static_cast<std::size_t>(m.n) * m.n ||
      m.supp.size() != static_cast<std::size_t>(m.n) || m.zero < 0 ||
      m.zero >= m.n || m.unit < 0 || m.unit >= m.n || m.zero == m.unit) {
    fail("format", {});
    return res;
  }
  for (auto v : m.mvsum)
    if (v < 0 || v >= m.n) {
      fail("format", {});
      return res;
    }
  for (auto v : m.supp)
    if (v < 0 || v >= m.n) {
      fail("format", {});
      return res;
    }

  for (ElementId p = 0; p < m.n; ++p) {
    if (m.sum(p, m.zero) != p) fail("iii", {p});
    if (m.sum(p, m.unit) != m.unit) fail("iv", {p});
    if (m.sup(m.sup(p)) != p) fail("v", {p});
    if (m.sum(p, m.sup(p)) != m.unit) fail("vii", {p});
    for (ElementId q = 0; q < m.n; ++q) {
      if (m.sum(p, q) != m.sum(q, p)) fail("ii", {p, q});
      if (m.sum(m.sup(m.sum(p, m.sup(q))), p) !=
          m.sum(m.sup(m.sum(q, m.sup(p))), q))
        fail("viii", {p, q});
      for (ElementId r = 0; r < m.n; ++r)
        if (m.sum(p, m.sum(q, r)) != m.sum(m.sum(p, q), r)) fail("i", {p, q, r});
    }
  }
  if (m.sup(m.zero) != m.unit) fail("vi", {});
  return res;
}

struct NotMVEffectAlgebra : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Theorem 5.3, forward direction: p (+) q := p mv+ q iff p <= q', with the
// MV order read off as p <= q iff p' mv+ q = u. Verifies the produced
// table and the join law (p mv+ q')' mv+ p = p v q before returning.
inline EffectAlgebraTable mv_to_ea(const MVTable& m) {
  if (!validate_mv(m).ok())
    throw std::invalid_argument("mv_to_ea: input fails the MV axioms");
  auto leq = [&](ElementId p, ElementId q) {
    return m.sum(m.sup(p), q) == m.unit;
  };
  EffectAlgebraTable t = EffectAlgebraTable::empty(m.n, m.zero, m.unit, m.name);
  for (ElementId p = 0; p < m.n; ++p)
    for (ElementId q = 0; q < m.n; ++q)
      if (leq(p, m.sup(q))) t.set_raw(p, q, m.sum(p, q));
  if (!validate_axioms(t).ok())
    throw std::logic_error("mv_to_ea: induced table fails effect-algebra axioms");
  OrderStructure o = derive_order(t);
  for (ElementId p = 0; p < m.n; ++p) {
    if (o.supp[p] != m.sup(p))
      throw std::logic_error("mv_to_ea: supplements disagree");
    for (ElementId q = 0; q < m.n; ++q)
      if (o.join_of(p, q) != m.sum(m.sup(m.sum(p, m.sup(q))), p))
        throw std::logic_error("mv_to_ea: join law fails");
  }
  return t;
}

// Theorem 5.3, reverse direction: p mv+ q := p (+) (p' /\ q).
inline MVTable ea_to_mv(const EffectAlgebraTable& t) {
  require_validated(t, "ea_to_mv");
  OrderStructure o = derive_order(t);
  if (!o.is_lattice() || !has_riesz_decomposition(t, o))
    throw NotMVEffectAlgebra("ea_to_mv: table is not an MV-effect algebra");
  MVTable m = MVTable::empty(t.n, t.zero, t.unit, t.name);
  m.supp = o.supp;
  for (ElementId p = 0; p < t.n; ++p)
    for (ElementId q = 0; q < t.n; ++q) {
      ElementId w = o.meet_of(o.supp[p], q);
      ElementId s = t.at(p, w);
      if (s == kUndefined)
        throw std::logic_error("ea_to_mv: p and p' /\\ q not orthogonal");
      m.mvsum[static_cast<std::size_t>(p) * t.n + q] = s;
    }
  if (!validate_mv(m).ok())
    throw std::logic_error("ea_to_mv: induced table fails the MV axioms");
  return m;
}

// Theorem 5.5 criterion: on a lattice-ordered effect algebra, MV-ness is
// equivalent to disjoint elements being orthogonal.
inline bool mv_criterion(const EffectAlgebraTable& t) {
  require_validated(t, "mv_criterion");
  OrderStructure o = derive_order(t);
  if (!o.is_lattice())
    throw std::invalid_argument("mv_criterion: input is not lattice ordered");
  for (ElementId p = 0; p < t.n; ++p)
    for (ElementId q = 0; q < t.n; ++q)
      if (o.meet_of(p, q) == t.zero && !t.defined(p, q)) return false;
  return true;
}

// Theorem 5.6: the Definition 3.8 center, the sharp elements
// {c : c /\ c' = 0}, and the idempotents {c : c mv+ c = c} computed
// independently; they must coincide.
inline std::vector<ElementId> mv_center(const MVTable& m) {
  EffectAlgebraTable t = mv_to_ea(m);
  OrderStructure o = derive_order(t);
  std::vector<ElementId> via_def = center(t);
  std::vector<ElementId> sharp, idem;
  for (ElementId c = 0; c < m.n; ++c) {
    if (o.meet_of(c, o.supp[c]) == t.zero) sharp.push_back(c);
    if (m.sum(c, c) == c) idem.push_back(c);
  }
  if (via_def != sharp || via_def != idem)
    throw std::logic_error("mv_center: the three center descriptions disagree");
  return via_def;
}

}  // namespace effectkit
