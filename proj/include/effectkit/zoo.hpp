#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "effectkit/effect_algebra.hpp"

namespace effectkit {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultSizeCap = 512;

inline void check_cap(long long n, int cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": resulting size " +
                      std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// Boolean effect algebra 2^{1..k}: elements are bitmasks, sum is disjoint
// union.
inline EffectAlgebraTable zoo_boolean(int k, int cap = kDefaultSizeCap) {
  if (k < 1) throw std::invalid_argument("zoo_boolean: need k >= 1");
  long long n = 1LL << k;
  check_cap(n, cap, "zoo_boolean");
  auto t = EffectAlgebraTable::empty(static_cast<int>(n), 0,
                                     static_cast<int>(n) - 1,
                                     "boolean(" + std::to_string(k) + ")");
  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId y = 0; y < t.n; ++y)
      if ((x & y) == 0) t.set_raw(x, y, x | y);
  return t;
}

// Lukasiewicz chain with m+1 elements 0, 1/m, ..., 1.
inline EffectAlgebraTable zoo_chain(int m, int cap = kDefaultSizeCap) {
  if (m < 1) throw std::invalid_argument("zoo_chain: need m >= 1");
  check_cap(m + 1, cap, "zoo_chain");
  auto t = EffectAlgebraTable::empty(m + 1, 0, m,
                                     "chain(" + std::to_string(m) + ")");
  for (ElementId x = 0; x <= m; ++x)
    for (ElementId y = 0; x + y <= m; ++y) t.set_raw(x, y, x + y);
  return t;
}

// Horizontal sum of k four-element Boolean blocks: 2k atoms in k
// supplement pairs, no cross-block sums.
inline EffectAlgebraTable zoo_mo(int k, int cap = kDefaultSizeCap) {
  if (k < 1) throw std::invalid_argument("zoo_mo: need k >= 1");
  int n = 2 + 2 * k;
  check_cap(n, cap, "zoo_mo");
  auto t =
      EffectAlgebraTable::empty(n, 0, n - 1, "mo(" + std::to_string(k) + ")");
  for (ElementId x = 0; x < n; ++x) {
    t.set_raw(x, 0, x);
    t.set_raw(0, x, x);
  }
  for (int i = 0; i < k; ++i) {
    ElementId a = 1 + 2 * i, b = 2 + 2 * i;
    t.set_raw(a, b, t.unit);
    t.set_raw(b, a, t.unit);
  }
  return t;
}

inline EffectAlgebraTable zoo_product(const EffectAlgebraTable& a,
                                      const EffectAlgebraTable& b,
                                      int cap = kDefaultSizeCap) {
  long long n = static_cast<long long>(a.n) * b.n;
  check_cap(n, cap, "zoo_product");
  auto pair = [&](ElementId x, ElementId y) {
    return x * b.n + y;
  };
  auto t = EffectAlgebraTable::empty(static_cast<int>(n), pair(a.zero, b.zero),
                                     pair(a.unit, b.unit),
                                     "product(" + a.name + "," + b.name + ")");
  for (ElementId x1 = 0; x1 < a.n; ++x1)
    for (ElementId x2 = 0; x2 < b.n; ++x2)
      for (ElementId y1 = 0; y1 < a.n; ++y1)
        for (ElementId y2 = 0; y2 < b.n; ++y2)
          if (a.defined(x1, y1) && b.defined(x2, y2))
            t.set_raw(pair(x1, x2), pair(y1, y2),
                      pair(a.at(x1, y1), b.at(x2, y2)));
  return t;
}

// A small finite ring with unity, given by full operation tables. Enough
// to build idempotent effect algebras from Z_m and 2x2 matrix rings.
struct FiniteRing {
  int n = 0;
  int zero = 0;
  int one = 1;
  std::vector<int> add;  // n*n
  std::vector<int> mul;  // n*n
  std::string name;

  int plus(int a, int b) const { return add[static_cast<std::size_t>(a) * n + b]; }
  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }

  static FiniteRing cyclic(int m) {
    if (m < 2) throw std::invalid_argument("FiniteRing::cyclic: need m >= 2");
    FiniteRing r;
    r.n = m;
    r.zero = 0;
    r.one = 1;
    r.name = "Z" + std::to_string(m);
    r.add.resize(static_cast<std::size_t>(m) * m);
    r.mul.resize(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        r.add[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
        r.mul[static_cast<std::size_t>(a) * m + b] = (a * b) % m;
      }
    return r;
  }

  // 2x2 matrices over Z_m, encoded as base-m digit strings (a,b,c,d) for
  // [[a,b],[c,d]]. Noncommutative once m >= 2.
  static FiniteRing matrix2(int m) {
    if (m < 2) throw std::invalid_argument("FiniteRing::matrix2: need m >= 2");
    FiniteRing r;
    int n = m * m * m * m;
    r.n = n;
    r.name = "M2(Z" + std::to_string(m) + ")";
    auto unpack = [m](int e, int out[4]) {
      for (int i = 3; i >= 0; --i) {
        out[i] = e % m;
        e /= m;
      }
    };
    auto pack = [m](const int v[4]) {
      return ((v[0] * m + v[1]) * m + v[2]) * m + v[3];
    };
    const int id[4] = {1, 0, 0, 1};
    r.zero = 0;
    r.one = pack(id);
    r.add.resize(static_cast<std::size_t>(n) * n);
    r.mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      int x[4], y[4], s[4], p[4];
      unpack(a, x);
      for (int b = 0; b < n; ++b) {
        unpack(b, y);
        for (int i = 0; i < 4; ++i) s[i] = (x[i] + y[i]) % m;
        p[0] = (x[0] * y[0] + x[1] * y[2]) % m;
        p[1] = (x[0] * y[1] + x[1] * y[3]) % m;
        p[2] = (x[2] * y[0] + x[3] * y[2]) % m;
        p[3] = (x[2] * y[1] + x[3] * y[3]) % m;
        r.add[static_cast<std::size_t>(a) * n + b] = pack(s);
        r.mul[static_cast<std::size_t>(a) * n + b] = pack(p);
      }
    }
    return r;
  }
};

// Idempotents of a finite ring with e + f defined iff ef = fe = 0.
inline EffectAlgebraTable zoo_ring_idempotents(const FiniteRing& r,
                                               int cap = kDefaultSizeCap) {
  std::vector<int> idem;
  for (int e = 0; e < r.n; ++e)
    if (r.times(e, e) == e) idem.push_back(e);
  check_cap(static_cast<long long>(idem.size()), cap, "zoo_ring_idempotents");
  std::vector<int> pos(r.n, -1);
  for (std::size_t i = 0; i < idem.size(); ++i) pos[idem[i]] = static_cast<int>(i);
  auto t = EffectAlgebraTable::empty(static_cast<int>(idem.size()), pos[r.zero],
                                     pos[r.one], "idempotents(" + r.name + ")");
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = 0; j < idem.size(); ++j) {
      int e = idem[i], f = idem[j];
      if (r.times(e, f) == r.zero && r.times(f, e) == r.zero)
        t.set_raw(static_cast<ElementId>(i), static_cast<ElementId>(j),
                  pos[r.plus(e, f)]);
    }
  return t;
}

}  // namespace effectkit
