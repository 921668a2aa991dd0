#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "effectkit/order.hpp"
#include "effectkit/polytope.hpp"

namespace effectkit {

// A rational-valued measure on an effect algebra, indexed by element.
struct RationalMeasure {
  QVec values;

  bool operator==(const RationalMeasure& o) const { return values == o.values; }
};

// H-representation of the probability measures Pi(E): one variable per
// element, one equality per defined orthosum cell plus normalization, and
// nonnegativity throughout. Vertices are the extreme measures.
struct ProbabilityPolytope {
  int n = 0;
  QMat eq_lhs;
  QVec eq_rhs;
  bool feasible = false;
  std::vector<RationalMeasure> vertices;
};

inline bool is_additive(const EffectAlgebraTable& t, const QVec& phi) {
  if (phi.size() != static_cast<std::size_t>(t.n)) return false;
  if (phi[t.zero] != 0) return false;
  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId y = x; y < t.n; ++y) {
      ElementId z = t.at(x, y);
      if (z != kUndefined && phi[x] + phi[y] != phi[z]) return false;
    }
  return true;
}

inline ProbabilityPolytope probability_polytope(const EffectAlgebraTable& t) {
  require_validated(t, "probability_polytope");
  ProbabilityPolytope p;
  p.n = t.n;
  auto push_eq = [&](QVec lhs, Rat rhs) {
    p.eq_lhs.push_back(std::move(lhs));
    p.eq_rhs.push_back(std::move(rhs));
  };
  {
    QVec z(t.n, 0);
    z[t.zero] = 1;
    push_eq(std::move(z), 0);
  }
  {
    QVec u(t.n, 0);
    u[t.unit] = 1;
    push_eq(std::move(u), 1);
  }
  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId y = x; y < t.n; ++y) {
      ElementId z = t.at(x, y);
      if (z == kUndefined) continue;
      QVec row(t.n, 0);
      row[x] += 1;
      row[y] += 1;
      row[z] -= 1;
      if (is_zero(row)) continue;  // x + zero = x and friends
      push_eq(std::move(row), 0);
    }

  QMat ineq(t.n, QVec(t.n, 0));
  QVec ineq_rhs(t.n, 0);
  for (ElementId x = 0; x < t.n; ++x) ineq[x][x] = 1;

  auto ve = enumerate_vertices(p.eq_lhs, p.eq_rhs, ineq, ineq_rhs);
  if (!ve.bounded)
    throw std::logic_error("probability_polytope: region unexpectedly unbounded");
  p.feasible = ve.feasible;
  for (auto& v : ve.vertices) p.vertices.push_back({std::move(v)});
  return p;
}

// Rank certificate that v is a vertex: the constraints tight at v (all
// equalities plus the active nonnegativities) must pin the full space.
inline bool is_vertex_of(const ProbabilityPolytope& p, const QVec& v) {
  QMat tight = p.eq_lhs;
  for (std::size_t i = 0; i < p.eq_lhs.size(); ++i)
    if (dot(p.eq_lhs[i], v) != p.eq_rhs[i]) return false;
  for (int x = 0; x < p.n; ++x) {
    if (v[x] < 0) return false;
    if (v[x] == 0) {
      QVec row(p.n, 0);
      row[x] = 1;
      tight.push_back(std::move(row));
    }
  }
  return rref(tight).size() == static_cast<std::size_t>(p.n);
}

// The extreme points, each re-verified by the rank certificate.
inline std::vector<RationalMeasure> extreme_points(const ProbabilityPolytope& p) {
  for (const auto& m : p.vertices)
    if (!is_vertex_of(p, m.values))
      throw std::logic_error("extreme_points: enumerated point fails the vertex certificate");
  return p.vertices;
}

struct OrderDeterminingResult {
  bool determining = false;
  std::optional<std::pair<ElementId, ElementId>> witness;  // violating pair
};

// Definition 3.11: Delta is order-determining iff pointwise dominance
// under every measure in Delta forces the algebra order.
inline OrderDeterminingResult is_order_determining(
    const EffectAlgebraTable& t, const std::vector<RationalMeasure>& delta) {
  require_validated(t, "is_order_determining");
  for (const auto& m : delta)
    if (!is_additive(t, m.values))
      throw std::invalid_argument("is_order_determining: measure not additive");
  OrderStructure o = derive_order(t);
  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId y = 0; y < t.n; ++y) {
      bool dominated = true;
      for (const auto& m : delta)
        if (m.values[x] > m.values[y]) {
          dominated = false;
          break;
        }
      if (dominated && !o.is_leq(x, y)) return {false, std::make_pair(x, y)};
    }
  return {true, std::nullopt};
}

// Integer-valued measure check (K = Z).
inline bool kvalued_measure_check(const EffectAlgebraTable& t, const ZVec& phi) {
  require_validated(t, "kvalued_measure_check");
  if (phi.size() != static_cast<std::size_t>(t.n)) return false;
  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId y = x; y < t.n; ++y) {
      ElementId z = t.at(x, y);
      if (z != kUndefined && phi[x] + phi[y] != phi[z]) return false;
    }
  return true;
}

}  // namespace effectkit
