#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "effectkit/canonical.hpp"
#include "effectkit/unigroup.hpp"
#include "effectkit/zoo.hpp"
#include "oracles.hpp"

using namespace effectkit;

namespace {

GroupPresentation z2_pointwise(int u1, int u2, std::string label = "Z^2") {
  GroupPresentation p;
  p.rank = 2;
  p.unit = {Int(u1), Int(u2)};
  p.cone_gens = {{Int(1), Int(0)}, {Int(0), Int(1)}};
  p.label = std::move(label);
  return p;
}

std::vector<EffectAlgebraTable> iea_corpus() {
  return {zoo_chain(2), zoo_chain(3), zoo_chain(4), zoo_boolean(2),
          zoo_boolean(3), zoo_mo(2), zoo_product(zoo_chain(2), zoo_chain(2))};
}

}  // namespace

TEST_CASE("universal group of boolean(2) is Z^2 with unit (1,1)") {
  auto ug = universal_group(zoo_boolean(2));
  const auto& p = ug.presentation;
  CHECK(p.rank == 2);
  CHECK(p.torsion.empty());
  // atoms map to a basis and the unit is their sum
  const ZVec& a = p.images[1];
  const ZVec& b = p.images[2];
  CHECK(add(a, b) == p.images[3]);
  CHECK(p.images[3] == p.unit);
  ZMat m{a, b};
  CHECK(abs(determinant(m)) == 1);
  CHECK(is_zero(p.images[0]));
}

TEST_CASE("universal groups of chains are (Z, n)") {
  for (int n = 1; n <= 6; ++n) {
    auto ug = universal_group(zoo_chain(n));
    const auto& p = ug.presentation;
    INFO("chain " << n);
    CHECK(p.rank == 1);
    CHECK(p.torsion.empty());
    CHECK(abs(p.unit[0]) == n);
    // h (the first step) generates: |phi(h)| = 1
    if (n >= 2) CHECK(abs(p.images[1][0]) == 1);
  }
}

TEST_CASE("universal group of MO2 has rank 3, no torsion") {
  auto ug = universal_group(zoo_mo(2));
  const auto& p = ug.presentation;
  CHECK(p.rank == 3);
  CHECK(p.torsion.empty());
  CHECK(add(p.images[1], p.images[2]) == p.unit);
  CHECK(add(p.images[3], p.images[4]) == p.unit);
}

TEST_CASE("smith normal form audit") {
  // U A V = D on the relation matrix of a small fixture, and the
  // invariant factors agree with the minor-gcd oracle and are stable
  // under generator permutation.
  auto t = zoo_chain(3);
  std::vector<ZVec> rel;
  {
    ZVec z(t.n, 0);
    z[t.zero] = 1;
    rel.push_back(z);
  }
  for (ElementId x = 0; x < t.n; ++x)
    for (ElementId y = x; y < t.n; ++y) {
      ElementId w = t.at(x, y);
      if (w == kUndefined) continue;
      ZVec row(t.n, 0);
      row[x] += 1;
      row[y] += 1;
      row[w] -= 1;
      if (!is_zero(row)) rel.push_back(row);
    }
  ZMat m(rel.begin(), rel.end());
  auto s = smith_normal_form(m, true);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(*s.v)) == 1);
  CHECK(mat_mul(mat_mul(s.u, m), *s.v) == s.d);

  // Determinantal-divisor oracle: d_1 * ... * d_k = gcd of k x k minors.
  auto minor_gcd = [&](const ZMat& a, std::size_t k) {
    std::size_t rows = a.size(), cols = a[0].size();
    std::vector<std::size_t> ri(k), ci(k);
    Int g = 0;
    auto rec = [&](auto&& self, std::size_t d, std::size_t start, bool pick_rows)
        -> void {
      if (pick_rows) {
        if (d == k) {
          self(self, 0, 0, false);
          return;
        }
        for (std::size_t i = start; i < rows; ++i) {
          ri[d] = i;
          self(self, d + 1, i + 1, true);
        }
      } else {
        if (d == k) {
          ZMat sub(k, ZVec(k));
          for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y) sub[x][y] = a[ri[x]][ci[y]];
          g = boost::multiprecision::gcd(g, determinant(sub));
          return;
        }
        for (std::size_t j = start; j < cols; ++j) {
          ci[d] = j;
          self(self, d + 1, j + 1, false);
        }
      }
    };
    rec(rec, 0, 0, true);
    return g;
  };
  Int prod = 1;
  for (std::size_t k = 1; k <= s.rank; ++k) {
    Int dk = minor_gcd(m, k);
    CHECK(dk == prod * s.diagonal[k - 1]);
    prod = dk;
  }

  // Permuting generators leaves the invariant factors alone.
  ZMat perm = m;
  for (auto& row : perm) std::swap(row[1], row[2]);
  auto s2 = smith_normal_form(perm, false);
  CHECK(s2.diagonal == s.diagonal);
}

TEST_CASE("interval_of standard presentations") {
  auto b2 = interval_of(z2_pointwise(1, 1));
  CHECK(b2.table.n == 4);
  CHECK(isomorphic(b2.table, zoo_boolean(2)));

  auto c3 = interval_of(z_presentation(3));
  CHECK(c3.table.n == 4);
  CHECK(isomorphic(c3.table, zoo_chain(3)));

  auto two = interval_of(z_presentation(1));
  CHECK(two.table.n == 2);
}

TEST_CASE("interval realization across the IEA corpus") {
  for (const auto& t : iea_corpus()) {
    INFO(t.name);
    auto rep = is_interval_realization(t);
    CHECK(rep.is_iea);
  }
}

TEST_CASE("interval of universal group reproduces classification flags") {
  for (const auto& t : iea_corpus()) {
    auto ug = universal_group(t);
    auto iv = interval_of(ug.presentation);
    auto a = classify(t);
    auto b = classify(iv.table);
    INFO(t.name);
    CHECK(a.is_omp == b.is_omp);
    CHECK(a.is_lattice == b.is_lattice);
    CHECK(a.has_riesz == b.has_riesz);
    CHECK(a.is_boolean_ea == b.is_boolean_ea);
    CHECK(a.is_mv_effect == b.is_mv_effect);
    CHECK(a.is_hmv == b.is_hmv);
    CHECK(a.center.size() == b.center.size());
  }
}

TEST_CASE("group predicates on the pointwise plane") {
  auto gp = group_predicates(z2_pointwise(1, 1), 2);
  CHECK(gp.is_order_unit);
  CHECK(gp.is_generative);
  CHECK(gp.has_interpolation.holds());
  CHECK(gp.is_lattice_ordered.holds());
  CHECK_FALSE(gp.is_totally_ordered.holds());
  CHECK(gp.is_archimedean);
}

TEST_CASE("the even-sum cone fails interpolation inside the k=2 box") {
  GroupPresentation p;
  p.rank = 2;
  p.unit = {2, 2};
  p.cone_gens = {{2, 0}, {1, 1}, {0, 2}};
  p.label = "even-sum";
  auto gp = group_predicates(p, 2);
  CHECK_FALSE(gp.has_interpolation.holds());
  CHECK(gp.has_interpolation.witness.size() == 4);
  CHECK_FALSE(gp.is_lattice_ordered.holds());
}

TEST_CASE("totally ordered chain group") {
  auto gp = group_predicates(z_presentation(2), 3);
  CHECK(gp.is_totally_ordered.holds());
  CHECK(gp.is_lattice_ordered.holds());
  CHECK(gp.is_archimedean);
}

TEST_CASE("archimedean saturation finds integer gaps") {
  // cone generated by (1,0) and (1,2): (1,1) is in the rational cone but
  // not in the semigroup.
  GroupPresentation p;
  p.rank = 2;
  p.unit = {2, 2};
  p.cone_gens = {{1, 0}, {1, 2}};
  p.label = "gap";
  SemigroupMembership sm(p);
  CHECK_FALSE(sm.contains({1, 1}));
  CHECK(in_rational_cone(sm.dual(), {1, 1}));
  ZVec w;
  CHECK_FALSE(archimedean_exact(p, sm, &w));
  CHECK(w == ZVec{1, 1});
}

TEST_CASE("MO2 universal group is not lattice ordered in the box") {
  auto ug = universal_group(zoo_mo(2));
  auto gp = group_predicates(ug.presentation, 2);
  CHECK_FALSE(gp.is_lattice_ordered.holds());
  CHECK_FALSE(gp.has_interpolation.holds());
}

TEST_CASE("states of standard groups") {
  auto b3 = universal_group(zoo_boolean(3));
  auto st = states_of(b3.presentation);
  CHECK(st.size() == 3);

  auto c2 = universal_group(zoo_chain(2));
  auto stc = states_of(c2.presentation);
  REQUIRE(stc.size() == 1);
  // the unique state halves the unit: w(u) = 1 with u at +-2
  CHECK(dot(stc[0], c2.presentation.unit) == 1);
  CHECK(dot(stc[0], c2.presentation.images[1]) == Rat(1, 2));

  auto z2 = z2_pointwise(1, 1);
  auto stz = states_of(z2);
  REQUIRE(stz.size() == 2);
  std::set<QVec> got(stz.begin(), stz.end());
  CHECK(got.count(QVec{1, 0}) == 1);
  CHECK(got.count(QVec{0, 1}) == 1);
}

TEST_CASE("state/measure bijection for universal groups") {
  for (const auto& t : iea_corpus()) {
    auto ug = universal_group(t);
    INFO(t.name);
    CHECK_NOTHROW(assert_state_measure_bijection(ug.presentation, t));
  }
}

TEST_CASE("archimedean presentations give order-determining state restrictions") {
  for (const auto& t : iea_corpus()) {
    auto ug = universal_group(t);
    SemigroupMembership sm(ug.presentation);
    if (!archimedean_exact(ug.presentation, sm)) continue;
    std::vector<RationalMeasure> delta;
    for (const auto& w : states_of(ug.presentation)) {
      QVec m(t.n);
      for (ElementId x = 0; x < t.n; ++x) m[x] = dot(w, ug.presentation.images[x]);
      delta.push_back({std::move(m)});
    }
    INFO(t.name);
    CHECK(is_order_determining(t, delta).determining);
  }
}

TEST_CASE("measure universality: integer measures extend uniquely") {
  for (const auto& t : iea_corpus()) {
    auto ug = universal_group(t);
    const auto& p = ug.presentation;
    // Solve FData * h = phi for h in Z^rank: rows are element images.
    ZMat a(t.n, ZVec(p.rank));
    for (ElementId x = 0; x < t.n; ++x) a[x] = p.images[x];
    // A few deterministic integer measures built from sums of extreme
    // measures scaled to integrality.
    auto ext = extreme_points(probability_polytope(t));
    for (std::size_t pick = 0; pick < ext.size(); ++pick) {
      Int denom = 1;
      for (const auto& v : ext[pick].values)
        denom = boost::multiprecision::lcm(denom, denominator(v));
      ZVec phi(t.n);
      for (ElementId x = 0; x < t.n; ++x)
        phi[x] = numerator(ext[pick].values[x]) *
                 (denom / denominator(ext[pick].values[x]));
      REQUIRE(kvalued_measure_check(t, phi));
      auto h = solve_integer(a, phi);
      REQUIRE(h.has_value());
      // Uniqueness: the images span rationally, so the kernel is trivial.
      QMat aq;
      for (const auto& row : a) aq.push_back(to_rational(row));
      CHECK(rational_rank(aq) == static_cast<std::size_t>(p.rank));
    }
  }
}

TEST_CASE("function groups reproduce Boole's correspondence") {
  auto b2 = zoo_boolean(2);
  auto f = function_group(b2, z_presentation(1), {{Int(1)}, {Int(1)}});
  CHECK(f.rank == 2);
  CHECK(f.unit == ZVec{1, 1});
  auto iv = interval_of(f);
  CHECK(isomorphic(iv.table, b2));

  auto f2 = function_group(b2, z_presentation(1), {{Int(2)}, {Int(2)}});
  auto iv2 = interval_of(f2);
  CHECK(isomorphic(iv2.table, zoo_product(zoo_chain(2), zoo_chain(2))));
  CHECK(classify(iv2.table).is_hmv);

  auto b1 = zoo_boolean(1);
  auto f3 = function_group(b1, z_presentation(1), {{Int(3)}});
  CHECK(isomorphic(interval_of(f3).table, zoo_chain(3)));
}

TEST_CASE("interval construction error paths") {
  {
    GroupPresentation p;  // cone containing a line: not pointed
    p.rank = 1;
    p.unit = {1};
    p.cone_gens = {{1}, {-1}};
    p.label = "line";
    CHECK_THROWS_AS(interval_of(p), std::invalid_argument);
  }
  {
    GroupPresentation p;  // unit outside the semigroup
    p.rank = 1;
    p.unit = {3};
    p.cone_gens = {{2}};
    p.label = "evens";
    CHECK_THROWS_AS(interval_of(p), std::invalid_argument);
  }
}

TEST_CASE("function group rejects bad inputs") {
  CHECK_THROWS_AS(function_group(zoo_chain(2), z_presentation(1), {{Int(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      function_group(zoo_boolean(1), z_presentation(1), {{Int(0)}}),
      std::invalid_argument);
}

TEST_CASE("correspondence checks agree on the corpus") {
  for (const auto& t : iea_corpus()) {
    auto cls = classify(t);
    auto rep = correspondence_checks(t, cls, 3);
    INFO(t.name);
    for (const auto& it : rep.items) {
      INFO(it.name);
      CHECK(it.agree);
    }
  }
}
