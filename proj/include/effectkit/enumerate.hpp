#pragma once

#include <algorithm>
#include <future>
#include <utility>
#include <vector>

#include "effectkit/canonical.hpp"
#include "effectkit/classify.hpp"
#include "effectkit/zoo.hpp"

namespace effectkit {

inline constexpr int kDefaultEnumerateCap = 6;

namespace detail {

// All involutions on {0,...,k-1}, as partner vectors.
inline std::vector<std::vector<int>> involutions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> partner(k, -1);
  auto rec = [&](auto&& self, int i) -> void {
    while (i < k && partner[i] != -1) ++i;
    if (i == k) {
      out.push_back(partner);
      return;
    }
    partner[i] = i;
    self(self, i + 1);
    partner[i] = -1;
    for (int j = i + 1; j < k; ++j) {
      if (partner[j] != -1) continue;
      partner[i] = j;
      partner[j] = i;
      self(self, i + 1);
      partner[i] = -1;
      partner[j] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

// Backtracking enumeration of all validated tables of size n with zero=0
// and unit=n-1. The supplement pairing on the mid elements is chosen
// first; remaining cells then range over undefined and the mid elements
// not excluded by cancellation. Full axiom validation runs at each leaf.
template <typename Sink>
void enumerate_labeled(int n, const std::vector<int>& supp_partner, Sink&& sink) {
  EffectAlgebraTable t = EffectAlgebraTable::empty(n, 0, n - 1);
  for (ElementId x = 0; x < n; ++x) {
    t.set_raw(x, 0, x);
    t.set_raw(0, x, x);
  }
  int mids = n - 2;
  for (int i = 0; i < mids; ++i) {
    ElementId x = 1 + i, y = 1 + supp_partner[i];
    t.set_raw(x, y, n - 1);
    t.set_raw(y, x, n - 1);
  }
  std::vector<std::pair<ElementId, ElementId>> cells;
  for (int i = 0; i < mids; ++i)
    for (int j = i; j < mids; ++j) {
      if (supp_partner[i] == j) continue;
      cells.emplace_back(1 + i, 1 + j);
    }
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      if (validate_axioms(t).ok()) sink(t);
      return;
    }
    auto [x, y] = cells[k];
    self(self, k + 1);  // cell left undefined
    for (ElementId z = 1; z <= mids; ++z) {
      if (z == x || z == y) continue;  // cancellation would fail
      t.set_raw(x, y, z);
      t.set_raw(y, x, z);
      self(self, k + 1);
      t.set_raw(x, y, kUndefined);
      t.set_raw(y, x, kUndefined);
    }
  };
  rec(rec, 0);
}

inline std::vector<EffectAlgebraTable> enumerate_size(int n, int workers) {
  auto invs = involutions(n - 2);
  auto run = [n](std::vector<std::vector<int>> chunk) {
    std::vector<EffectAlgebraTable> found;
    for (const auto& inv : chunk)
      enumerate_labeled(n, inv, [&](const EffectAlgebraTable& t) {
        if (is_canonical(t)) found.push_back(t);
      });
    return found;
  };

  std::vector<EffectAlgebraTable> all;
  if (workers <= 1 || invs.size() <= 1) {
    all = run(invs);
  } else {
    int w = std::min<int>(workers, static_cast<int>(invs.size()));
    std::vector<std::vector<std::vector<int>>> chunks(w);
    for (std::size_t i = 0; i < invs.size(); ++i)
      chunks[i % w].push_back(invs[i]);
    std::vector<std::future<std::vector<EffectAlgebraTable>>> futs;
    for (auto& c : chunks)
      futs.push_back(std::async(std::launch::async, run, std::move(c)));
    for (auto& f : futs) {
      auto part = f.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  // Deterministic emission order regardless of worker count.
  std::sort(all.begin(), all.end(),
            [](const EffectAlgebraTable& a, const EffectAlgebraTable& b) {
              return table_signature(a) < table_signature(b);
            });
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i].name = "enum(" + std::to_string(n) + "," + std::to_string(i) + ")";
  return all;
}

}  // namespace detail

// One validated table per isomorphism class, for every size 2..n_max,
// ordered by size then by canonical signature.
inline std::vector<EffectAlgebraTable> enumerate_all(
    int n_max, int workers = 1, int cap = kDefaultEnumerateCap) {
  if (n_max > cap)
    throw CapExceeded("enumerate_all: n_max " + std::to_string(n_max) +
                      " exceeds cap " + std::to_string(cap));
  std::vector<EffectAlgebraTable> out;
  for (int n = 2; n <= n_max; ++n) {
    auto part = detail::enumerate_size(n, workers);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

struct CensusRow {
  int n = 0;
  long long total = 0;
  long long omp = 0;
  long long mv = 0;
  long long boolean_ea = 0;
  long long hmv = 0;
  long long riesz = 0;
};

// Isomorphism-class counts per size, cross-tabulated by classification.
inline std::vector<CensusRow> emit_census(int n_max, int workers = 1,
                                          int cap = kDefaultEnumerateCap) {
  std::vector<CensusRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    if (n > cap)
      throw CapExceeded("emit_census: size exceeds cap");
    CensusRow row;
    row.n = n;
    for (const auto& t : detail::enumerate_size(n, workers)) {
      ++row.total;
      auto c = classify(t);
      if (c.is_omp) ++row.omp;
      if (c.is_mv_effect) ++row.mv;
      if (c.is_boolean_ea) ++row.boolean_ea;
      if (c.is_hmv) ++row.hmv;
      if (c.has_riesz) ++row.riesz;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace effectkit
