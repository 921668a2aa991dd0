#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace effectkit {

using ElementId = int;

// Sentinel for cells where the orthosum is not defined. Definedness of a
// cell is exactly the orthogonality relation x ⊥ y.
inline constexpr ElementId kUndefined = -1;

// A finite effect algebra as a carrier {0,...,n-1} with named zero/unit
// and a partial binary operation stored as a full n x n table. The table
// is not required to be symmetric or law-abiding on construction; that is
// what validate_axioms decides.
struct EffectAlgebraTable {
  int n = 0;
  ElementId zero = 0;
  ElementId unit = 0;
  std::vector<ElementId> osum;  // n*n, row-major, kUndefined where x ⊥ y fails
  std::string name;

  static EffectAlgebraTable empty(int n, ElementId zero, ElementId unit,
                                  std::string name = {}) {
    EffectAlgebraTable t;
    t.n = n;
    t.zero = zero;
    t.unit = unit;
    t.osum.assign(static_cast<std::size_t>(n) * n, kUndefined);
    t.name = std::move(name);
    return t;
  }

  ElementId at(ElementId x, ElementId y) const {
    return osum[static_cast<std::size_t>(x) * n + y];
  }
  bool defined(ElementId x, ElementId y) const { return at(x, y) != kUndefined; }

  // Sets x + y and y + x at once; throws on a conflicting earlier value.
  void set(ElementId x, ElementId y, ElementId z) {
    ElementId& fwd = osum[static_cast<std::size_t>(x) * n + y];
    ElementId& bwd = osum[static_cast<std::size_t>(y) * n + x];
    if ((fwd != kUndefined && fwd != z) || (bwd != kUndefined && bwd != z))
      throw std::logic_error("conflicting orthosum cell");
    fwd = z;
    bwd = z;
  }

  void set_raw(ElementId x, ElementId y, ElementId z) {
    osum[static_cast<std::size_t>(x) * n + y] = z;
  }

  bool operator==(const EffectAlgebraTable& o) const {
    return n == o.n && zero == o.zero && unit == o.unit && osum == o.osum;
  }
};

enum class Axiom {
  kFormat,         // out-of-range entry or malformed shape
  kDegenerate,     // n < 2 or zero == unit
  kCommutativity,  // 3.1 (i)
  kAssociativity,  // 3.1 (ii), guarded form
  kSupplement,     // 3.1 (iii)
  kZeroUnit,       // 3.1 (iv)
};

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kFormat: return "format";
    case Axiom::kDegenerate: return "degenerate";
    case Axiom::kCommutativity: return "commutativity";
    case Axiom::kAssociativity: return "associativity";
    case Axiom::kSupplement: return "supplement";
    case Axiom::kZeroUnit: return "zero-unit";
  }
  return "?";
}

struct AxiomViolation {
  Axiom axiom;
  std::vector<ElementId> witness;
  std::string detail;
};

struct ValidationResult {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  bool has(Axiom a) const {
    for (const auto& v : violations)
      if (v.axiom == a) return true;
    return false;
  }
};

// Decides Definition 3.1 (i)-(iv) by exhaustive instantiation, plus the
// structural well-formedness that makes those checks meaningful. A table
// counts as validated only when this returns ok.
inline ValidationResult validate_axioms(const EffectAlgebraTable& t) {
  ValidationResult res;
  auto fail = [&](Axiom a, std::vector<ElementId> w, std::string d) {
    res.violations.push_back({a, std::move(w), std::move(d)});
  };

  if (t.n <= 0 || t.osum.size() != static_cast<std::size_t>(t.n) * t.n ||
      t.zero < 0 || t.zero >= t.n || t.unit < 0 || t.unit >= t.n) {
    fail(Axiom::kFormat, {}, "table shape or zero/unit index out of range");
    return res;
  }
  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId y = 0; y < t.n; ++y) {
      ElementId z = t.at(x, y);
      if (z != kUndefined && (z < 0 || z >= t.n)) {
        fail(Axiom::kFormat, {x, y}, "orthosum entry out of range");
        return res;
      }
    }

  if (t.n == 1 || t.zero == t.unit) {
    fail(Axiom::kDegenerate, {}, "zero and unit must be distinct");
    return res;
  }

  // (i) commutativity
  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId y = x; y < t.n; ++y) {
      ElementId f = t.at(x, y), b = t.at(y, x);
      if (f != b)
        fail(Axiom::kCommutativity, {x, y},
             "x+y and y+x disagree (or one is undefined)");
    }

  // (ii) associativity, guarded: if x+y and (x+y)+z are defined then y+z
  // and x+(y+z) must be defined and the two results equal.
  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId y = 0; y < t.n; ++y) {
      ElementId xy = t.at(x, y);
      if (xy == kUndefined) continue;
      for (ElementId z = 0; z < t.n; ++z) {
        ElementId xy_z = t.at(xy, z);
        if (xy_z == kUndefined) continue;
        ElementId yz = t.at(y, z);
        if (yz == kUndefined || t.at(x, yz) != xy_z)
          fail(Axiom::kAssociativity, {x, y, z},
               "(x+y)+z defined but x+(y+z) missing or different");
      }
    }

  // (iii) unique supplement
  for (ElementId x = 0; x < t.n; ++x) {
    int count = 0;
    for (ElementId y = 0; y < t.n; ++y)
      if (t.at(x, y) == t.unit) ++count;
    if (count != 1)
      fail(Axiom::kSupplement, {x},
           count == 0 ? "no y with x+y = unit" : "supplement not unique");
  }

  // (iv) zero-unit law
  for (ElementId x = 0; x < t.n; ++x)
    if (t.defined(x, t.unit) && x != t.zero)
      fail(Axiom::kZeroUnit, {x}, "x+unit defined for x != zero");

  return res;
}

inline void require_validated(const EffectAlgebraTable& t, const char* op) {
  if (!validate_axioms(t).ok())
    throw std::invalid_argument(std::string(op) +
                                ": input table fails the effect-algebra axioms");
}

}  // namespace effectkit
