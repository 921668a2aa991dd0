#pragma once

#include <vector>

#include "effectkit/order.hpp"

namespace effectkit {

inline bool is_principal(const EffectAlgebraTable& t, const OrderStructure& o,
                         ElementId p) {
  for (ElementId x = 0; x < t.n; ++x) {
    if (!o.is_leq(x, p)) continue;
    for (ElementId y = 0; y < t.n; ++y) {
      if (!o.is_leq(y, p) || !t.defined(x, y)) continue;
      if (!o.is_leq(t.at(x, y), p)) return false;
    }
  }
  return true;
}

// Central elements per Definition 3.8: z and its supplement are both
// principal, and every x splits below z and z-supp.
inline std::vector<ElementId> central_elements(const EffectAlgebraTable& t,
                                               const OrderStructure& o) {
  std::vector<ElementId> c;
  for (ElementId z = 0; z < t.n; ++z) {
    ElementId zp = o.supp[z];
    if (!is_principal(t, o, z) || !is_principal(t, o, zp)) continue;
    bool splits_all = true;
    for (ElementId x = 0; x < t.n && splits_all; ++x) {
      bool split = false;
      for (ElementId x1 = 0; x1 < t.n && !split; ++x1) {
        if (!o.is_leq(x1, z)) continue;
        for (ElementId x2 = 0; x2 < t.n; ++x2)
          if (o.is_leq(x2, zp) && t.defined(x1, x2) && t.at(x1, x2) == x) {
            split = true;
            break;
          }
      }
      splits_all = split;
    }
    if (splits_all) c.push_back(z);
  }
  return c;
}

}  // namespace effectkit
