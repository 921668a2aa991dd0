#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "effectkit/measures.hpp"
#include "effectkit/zoo.hpp"

using namespace effectkit;

TEST_CASE("chain(2) has the single measure 1/2") {
  auto c2 = zoo_chain(2);
  auto p = probability_polytope(c2);
  REQUIRE(p.feasible);
  auto ext = extreme_points(p);
  REQUIRE(ext.size() == 1);
  CHECK(ext[0].values == QVec{0, Rat(1, 2), 1});
}

TEST_CASE("boolean(2) measures form a segment over the atoms") {
  auto b2 = zoo_boolean(2);
  auto ext = extreme_points(probability_polytope(b2));
  REQUIRE(ext.size() == 2);
  std::set<QVec> got;
  for (const auto& m : ext) got.insert(m.values);
  // elements 0, {1}, {2}, {1,2}
  CHECK(got.count(QVec{0, 1, 0, 1}) == 1);
  CHECK(got.count(QVec{0, 0, 1, 1}) == 1);
}

TEST_CASE("MO2 measures form a square") {
  auto mo2 = zoo_mo(2);
  auto ext = extreme_points(probability_polytope(mo2));
  REQUIRE(ext.size() == 4);
  std::set<QVec> got;
  for (const auto& m : ext) got.insert(m.values);
  // elements 0, a, a', b, b', u
  CHECK(got.count(QVec{0, 0, 1, 0, 1, 1}) == 1);
  CHECK(got.count(QVec{0, 0, 1, 1, 0, 1}) == 1);
  CHECK(got.count(QVec{0, 1, 0, 0, 1, 1}) == 1);
  CHECK(got.count(QVec{0, 1, 0, 1, 0, 1}) == 1);
}

TEST_CASE("boolean(3): three zero-one extreme measures, order determining") {
  auto b3 = zoo_boolean(3);
  auto ext = extreme_points(probability_polytope(b3));
  REQUIRE(ext.size() == 3);
  for (const auto& m : ext)
    for (const auto& v : m.values) CHECK((v == 0 || v == 1));
  auto od = is_order_determining(b3, ext);
  CHECK(od.determining);
}

TEST_CASE("chain(2) single measure is order determining") {
  auto c2 = zoo_chain(2);
  auto ext = extreme_points(probability_polytope(c2));
  auto od = is_order_determining(c2, ext);
  CHECK(od.determining);
}

TEST_CASE("empty measure family is not order determining") {
  auto c3 = zoo_chain(3);
  auto od = is_order_determining(c3, {});
  CHECK_FALSE(od.determining);
  REQUIRE(od.witness.has_value());
}

TEST_CASE("non-additive input is rejected") {
  auto c2 = zoo_chain(2);
  RationalMeasure bogus{{0, Rat(1, 3), 1}};  // 1/3 + 1/3 != 1
  CHECK_THROWS_AS(is_order_determining(c2, {bogus}), std::invalid_argument);
}

TEST_CASE("integer-valued measures") {
  auto c2 = zoo_chain(2);
  CHECK(kvalued_measure_check(c2, {0, 0, 0}));
  CHECK(kvalued_measure_check(c2, {0, 1, 2}));
  CHECK_FALSE(kvalued_measure_check(c2, {0, 1, 3}));
}

TEST_CASE("product polytope matches the componentwise mixture on C2 x C2") {
  auto prod = zoo_product(zoo_chain(2), zoo_chain(2));
  auto ext = extreme_points(probability_polytope(prod));
  REQUIRE(ext.size() == 2);
  // pi(i,j) = i/2 and pi(i,j) = j/2: the two factor measures.
  std::set<QVec> got;
  for (const auto& m : ext) got.insert(m.values);
  QVec first(9), second(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      first[static_cast<std::size_t>(i) * 3 + j] = Rat(i, 2);
      second[static_cast<std::size_t>(i) * 3 + j] = Rat(j, 2);
    }
  CHECK(got.count(first) == 1);
  CHECK(got.count(second) == 1);
}

TEST_CASE("vertices satisfy the H-representation and convex hull closes") {
  for (const auto& t : {zoo_boolean(3), zoo_mo(2), zoo_chain(4)}) {
    auto p = probability_polytope(t);
    auto ext = extreme_points(p);
    for (const auto& m : ext) CHECK(is_vertex_of(p, m.values));
    // Rational convex combinations stay in the polytope.
    if (ext.size() >= 2) {
      QVec mix(t.n, 0);
      for (std::size_t i = 0; i < ext.size(); ++i)
        for (int x = 0; x < t.n; ++x)
          mix[x] += ext[i].values[x] / Rat(ext.size());
      for (std::size_t r = 0; r < p.eq_lhs.size(); ++r)
        CHECK(dot(p.eq_lhs[r], mix) == p.eq_rhs[r]);
      for (int x = 0; x < t.n; ++x) CHECK(mix[x] >= 0);
      CHECK(is_additive(t, mix));
    }
  }
}

TEST_CASE("H-representation re-derived from the vertices closes the hull") {
  for (const auto& t : {zoo_chain(3), zoo_boolean(3), zoo_mo(2),
                        zoo_product(zoo_chain(2), zoo_chain(2))}) {
    auto ext = extreme_points(probability_polytope(t));
    // Facets of conv(V) from the homogenized points as cone generators.
    std::vector<ZVec> rows;
    for (const auto& m : ext) {
      QVec h = m.values;
      h.push_back(1);
      rows.push_back(primitive(h));
    }
    auto facets = dd::extreme_description(std::move(rows),
                                          static_cast<std::size_t>(t.n) + 1);
    QMat eq, ineq;
    QVec eq_rhs, in_rhs;
    for (const auto& l : facets.lines) {
      QVec w(to_rational(ZVec(l.begin(), l.end() - 1)));
      eq.push_back(w);
      eq_rhs.push_back(Rat(-l.back()));
    }
    for (const auto& r : facets.rays) {
      QVec w(to_rational(ZVec(r.begin(), r.end() - 1)));
      ineq.push_back(w);
      in_rhs.push_back(Rat(-r.back()));
    }
    auto back = enumerate_vertices(eq, eq_rhs, ineq, in_rhs);
    REQUIRE(back.feasible);
    REQUIRE(back.bounded);
    std::vector<QVec> original;
    for (const auto& m : ext) original.push_back(m.values);
    std::sort(original.begin(), original.end(),
              [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    INFO(t.name);
    CHECK(back.vertices == original);
  }
}

TEST_CASE("interval effect algebras admit at least one measure") {
  for (const auto& t : {zoo_chain(4), zoo_boolean(3), zoo_mo(2), zoo_mo(3),
                        zoo_product(zoo_chain(2), zoo_chain(3))}) {
    INFO(t.name);
    auto p = probability_polytope(t);
    CHECK(p.feasible);
    CHECK_FALSE(p.vertices.empty());
  }
}

TEST_CASE("boolean extreme measures are homomorphisms counted by atoms") {
  for (int k = 1; k <= 4; ++k) {
    auto b = zoo_boolean(k);
    auto ext = extreme_points(probability_polytope(b));
    CHECK(ext.size() == static_cast<std::size_t>(k));
    for (const auto& m : ext)
      for (const auto& v : m.values) CHECK((v == 0 || v == 1));
  }
}
