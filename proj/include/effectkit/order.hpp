#pragma once

#include <vector>

#include "effectkit/effect_algebra.hpp"

namespace effectkit {

// Order-theoretic derivatives of a validated table: x <= y iff some z has
// x + z = y, the supplement map, and the partial meet/join tables (filled
// exactly where a glb/lub exists; absence is recorded, not an error).
struct OrderStructure {
  int n = 0;
  std::vector<char> leq;          // n*n
  std::vector<ElementId> supp;    // n
  std::vector<ElementId> meet;    // n*n, kUndefined where no glb
  std::vector<ElementId> join;    // n*n, kUndefined where no lub

  bool is_leq(ElementId x, ElementId y) const {
    return leq[static_cast<std::size_t>(x) * n + y] != 0;
  }
  ElementId meet_of(ElementId x, ElementId y) const {
    return meet[static_cast<std::size_t>(x) * n + y];
  }
  ElementId join_of(ElementId x, ElementId y) const {
    return join[static_cast<std::size_t>(x) * n + y];
  }
  bool is_lattice() const {
    for (auto m : meet)
      if (m == kUndefined) return false;
    for (auto j : join)
      if (j == kUndefined) return false;
    return true;
  }
};

inline OrderStructure derive_order(const EffectAlgebraTable& t) {
  require_validated(t, "derive_order");
  OrderStructure o;
  o.n = t.n;
  o.leq.assign(static_cast<std::size_t>(t.n) * t.n, 0);
  o.supp.assign(t.n, kUndefined);
  o.meet.assign(static_cast<std::size_t>(t.n) * t.n, kUndefined);
  o.join.assign(static_cast<std::size_t>(t.n) * t.n, kUndefined);

  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId z = 0; z < t.n; ++z) {
      ElementId y = t.at(x, z);
      if (y != kUndefined) o.leq[static_cast<std::size_t>(x) * t.n + y] = 1;
      if (y == t.unit) o.supp[x] = z;
    }

  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId y = 0; y < t.n; ++y) {
      // glb: a lower bound dominating every lower bound.
      for (ElementId m = 0; m < t.n; ++m) {
        if (!o.is_leq(m, x) || !o.is_leq(m, y)) continue;
        bool greatest = true;
        for (ElementId z = 0; z < t.n && greatest; ++z)
          if (o.is_leq(z, x) && o.is_leq(z, y) && !o.is_leq(z, m))
            greatest = false;
        if (greatest) {
          o.meet[static_cast<std::size_t>(x) * t.n + y] = m;
          break;
        }
      }
      for (ElementId j = 0; j < t.n; ++j) {
        if (!o.is_leq(x, j) || !o.is_leq(y, j)) continue;
        bool least = true;
        for (ElementId z = 0; z < t.n && least; ++z)
          if (o.is_leq(x, z) && o.is_leq(y, z) && !o.is_leq(j, z))
            least = false;
        if (least) {
          o.join[static_cast<std::size_t>(x) * t.n + y] = j;
          break;
        }
      }
    }
  return o;
}

}  // namespace effectkit
