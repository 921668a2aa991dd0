#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "effectkit/linalg.hpp"
#include "effectkit/rational.hpp"

namespace effectkit {

// Exact vertex enumeration for { x : Eq x = eq_rhs, In x >= in_rhs }.
//
// The equality system is eliminated first (Gaussian, exact), leaving an
// inequality system over the free parameters. That system is homogenized
// to a cone in one extra dimension and run through an incremental double
// description: constraint rows are inserted in lexicographic order, lines
// are consumed before any ray arithmetic happens, and after every
// insertion the candidate rays are cut back to the extreme ones by the
// tight-row rank test. Rays with a positive homogenizing coordinate are
// the vertices; a surviving ray at coordinate zero means the region is
// unbounded.
struct VertexEnumeration {
  bool feasible = false;
  bool bounded = true;
  std::vector<QVec> vertices;  // lexicographically sorted
};

namespace dd {

struct Cone {
  std::vector<ZVec> lines;
  std::vector<ZVec> rays;
  std::vector<ZVec> processed;  // constraint rows already inserted

  std::size_t ambient() const {
    if (!lines.empty()) return lines[0].size();
    if (!rays.empty()) return rays[0].size();
    if (!processed.empty()) return processed[0].size();
    return 0;
  }
};

inline bool ray_extreme(const Cone& c, const ZVec& r, std::size_t rank_total) {
  QMat tight;
  for (const auto& row : c.processed)
    if (dot(to_rational(row), r) == 0) tight.push_back(to_rational(row));
  return rref(tight).size() + 1 == rank_total;
}

// Intersects the cone with { x : a . x >= 0 }.
inline void add_halfspace(Cone& c, const ZVec& a) {
  c.processed.push_back(a);
  std::size_t dim = a.size();

  std::size_t li = c.lines.size();
  for (std::size_t i = 0; i < c.lines.size(); ++i)
    if (dot(a, c.lines[i]) != 0) {
      li = i;
      break;
    }

  if (li != c.lines.size()) {
    // A line crosses the hyperplane: it becomes the ray pointing into the
    // halfspace, and everything else is projected onto the hyperplane
    // along it.
    ZVec r0 = c.lines[li];
    Int ar0 = dot(a, r0);
    if (ar0 < 0) {
      r0 = neg(r0);
      ar0 = -ar0;
    }
    std::vector<ZVec> new_lines;
    for (std::size_t i = 0; i < c.lines.size(); ++i) {
      if (i == li) continue;
      Int al = dot(a, c.lines[i]);
      // l*ar0 - al*r0 is integral and orthogonal to a
      new_lines.push_back(primitive_line(to_rational(
          sub(scale(ar0, c.lines[i]), scale(al, r0)))));
    }
    std::vector<ZVec> new_rays;
    for (const auto& r : c.rays) {
      Int ar = dot(a, r);
      new_rays.push_back(
          primitive(to_rational(sub(scale(ar0, r), scale(ar, r0)))));
    }
    new_rays.push_back(primitive(to_rational(r0)));
    c.lines = std::move(new_lines);
    c.rays = std::move(new_rays);
  } else {
    // All lines lie in the hyperplane; combine positive and negative rays.
    std::vector<ZVec> pos, zero, negs;
    for (const auto& r : c.rays) {
      Int ar = dot(a, r);
      if (ar > 0)
        pos.push_back(r);
      else if (ar == 0)
        zero.push_back(r);
      else
        negs.push_back(r);
    }
    std::vector<ZVec> cand = pos;
    cand.insert(cand.end(), zero.begin(), zero.end());
    for (const auto& p : pos)
      for (const auto& q : negs) {
        Int ap = dot(a, p), aq = dot(a, q);
        cand.push_back(primitive(to_rational(sub(scale(ap, q), scale(aq, p)))));
      }
    std::sort(cand.begin(), cand.end(),
              [](const ZVec& x, const ZVec& y) { return lex_less(x, y); });
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    c.rays = std::move(cand);
  }

  std::size_t rank_total = dim - c.lines.size();
  std::vector<ZVec> kept;
  for (const auto& r : c.rays) {
    if (is_zero(r)) continue;
    if (ray_extreme(c, r, rank_total)) kept.push_back(r);
  }
  c.rays = std::move(kept);
}

// V-description of { x : rows . x >= 0 }: lines spanning the lineality
// space plus the extreme rays modulo it.
inline Cone extreme_description(std::vector<ZVec> rows, std::size_t dim) {
  Cone cone;
  for (std::size_t j = 0; j < dim; ++j) {
    ZVec e(dim, 0);
    e[j] = 1;
    cone.lines.push_back(std::move(e));
  }
  std::sort(rows.begin(), rows.end(),
            [](const ZVec& x, const ZVec& y) { return lex_less(x, y); });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (const auto& r : rows)
    if (!is_zero(r)) add_halfspace(cone, r);
  return cone;
}

}  // namespace dd

inline VertexEnumeration enumerate_vertices(const QMat& eq_lhs,
                                            const QVec& eq_rhs,
                                            const QMat& ineq_lhs,
                                            const QVec& ineq_rhs) {
  VertexEnumeration out;
  std::size_t nvars = 0;
  if (!eq_lhs.empty())
    nvars = eq_lhs[0].size();
  else if (!ineq_lhs.empty())
    nvars = ineq_lhs[0].size();

  QVec x0(nvars, 0);
  QMat basis;  // columns as rows here: basis[j] is the j-th free direction
  if (!eq_lhs.empty()) {
    auto sol = solve_rational(eq_lhs, eq_rhs);
    if (!sol) return out;  // inconsistent equalities: empty
    x0 = *sol;
    basis = nullspace_rational(eq_lhs);
  } else {
    for (std::size_t j = 0; j < nvars; ++j) {
      QVec e(nvars, 0);
      e[j] = 1;
      basis.push_back(std::move(e));
    }
  }
  std::size_t d = basis.size();

  // Homogenized inequality rows (c_1..c_d, c_s): c . t + c_s s >= 0.
  std::vector<ZVec> rows;
  for (std::size_t i = 0; i < ineq_lhs.size(); ++i) {
    QVec row(d + 1, 0);
    for (std::size_t j = 0; j < d; ++j) row[j] = dot(ineq_lhs[i], basis[j]);
    row[d] = dot(ineq_lhs[i], x0) - ineq_rhs[i];
    if (is_zero(row)) continue;  // 0 >= 0
    rows.push_back(primitive(row));
  }
  {
    QVec srow(d + 1, 0);
    srow[d] = 1;
    rows.push_back(primitive(srow));
  }
  dd::Cone cone = dd::extreme_description(std::move(rows), d + 1);

  // Leftover lineality in a nonempty region means unboundedness, as does
  // any surviving recession ray.
  if (!cone.lines.empty() && !cone.rays.empty()) out.bounded = false;
  for (const auto& r : cone.rays) {
    if (r[d] == 0) {
      out.bounded = false;
      continue;
    }
    QVec x(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      Rat acc = x0[v];
      for (std::size_t j = 0; j < d; ++j)
        acc += Rat(r[j], r[d]) * basis[j][v];
      x[v] = acc;
    }
    out.vertices.push_back(std::move(x));
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const QVec& a, const QVec& b) { return lex_less(a, b); });
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                     out.vertices.end());
  out.feasible = !out.vertices.empty();
  return out;
}

}  // namespace effectkit
