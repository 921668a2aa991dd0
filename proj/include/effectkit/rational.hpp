#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace effectkit {

// All kernel arithmetic is exact: arbitrary-precision integers and
// rationals. No floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline ZMat z_identity(std::size_t n) {
  ZMat m(n, ZVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline ZVec z_zero(std::size_t n) { return ZVec(n, 0); }

inline bool is_zero(const ZVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline ZVec add(const ZVec& a, const ZVec& b) {
  ZVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ZVec sub(const ZVec& a, const ZVec& b) {
  ZVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ZVec neg(const ZVec& a) {
  ZVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline ZVec scale(const Int& c, const ZVec& a) {
  ZVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int dot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const QVec& a, const ZVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline ZVec mat_vec(const ZMat& m, const ZVec& v) {
  ZVec r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

inline ZMat mat_mul(const ZMat& a, const ZMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  ZMat r(n, ZVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

inline QVec to_rational(const ZVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// Strict lexicographic order on vectors; the tiebreak used everywhere a
// deterministic ordering is required.
inline bool lex_less(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline bool lex_less(const ZVec& a, const ZVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

// Clears denominators and divides by the content. Direction is preserved:
// rays and inequality normals depend on the sign.
inline ZVec primitive(const QVec& v) {
  Int lcm = 1;
  for (const auto& x : v) {
    Int d = denominator(x);
    lcm = boost::multiprecision::lcm(lcm, d);
  }
  ZVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = numerator(v[i]) * (lcm / denominator(v[i]));
  Int g = 0;
  for (const auto& x : r) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : r) x /= g;
  return r;
}

// Sign-normalized variant for direction-free vectors (lines).
inline ZVec primitive_line(const QVec& v) {
  ZVec r = primitive(v);
  for (const auto& x : r) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : r) y = -y;
    break;
  }
  return r;
}

inline std::string to_string(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline std::string to_string(const ZVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

inline std::string to_string(const QVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace effectkit
