#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "effectkit/classify.hpp"
#include "effectkit/unigroup.hpp"

namespace effectkit {

inline std::string verdict_text(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::kTrue:
      return "true";
    case VerdictKind::kTrueUpToBound:
      return "true-up-to-k=" + std::to_string(v.bound);
    case VerdictKind::kFalse: {
      std::string s = "false";
      if (!v.witness.empty()) {
        s += " (witness:";
        for (const auto& w : v.witness) s += " " + to_string(w);
        s += ")";
      }
      return s;
    }
  }
  return "?";
}

// Flat key = value report; sections appear in a fixed order and only
// when filled, so byte-identical runs stay byte-identical.
struct Report {
  std::string subject;
  int n = 0;

  std::optional<ClassificationReport> classification;
  std::vector<std::string> center_names;

  std::optional<std::size_t> measure_vertex_count;
  std::vector<std::string> measure_vertices;
  std::optional<std::string> order_determining;

  std::optional<int> group_rank;
  std::vector<Int> group_torsion;
  std::string group_unit;
  std::vector<std::pair<std::string, std::string>> correspondence;  // name, verdict

  std::optional<std::size_t> projection_count;
  std::vector<std::pair<std::string, std::string>> compression_items;

  std::vector<std::pair<std::string, std::string>> extra;

  std::string to_text() const {
    std::ostringstream os;
    os << "subject = " << subject << "\n";
    if (n > 0) os << "n = " << n << "\n";
    if (classification) {
      const auto& c = *classification;
      os << "is_orthoalgebra = " << (c.is_orthoalgebra ? "true" : "false") << "\n";
      os << "is_omp = " << (c.is_omp ? "true" : "false") << "\n";
      os << "is_lattice = " << (c.is_lattice ? "true" : "false") << "\n";
      os << "is_distributive = " << (c.is_distributive ? "true" : "false") << "\n";
      os << "is_oml = " << (c.is_oml ? "true" : "false") << "\n";
      os << "has_riesz = " << (c.has_riesz ? "true" : "false") << "\n";
      os << "is_boolean = " << (c.is_boolean_ea ? "true" : "false") << "\n";
      os << "is_mv = " << (c.is_mv_effect ? "true" : "false") << "\n";
      os << "is_hmv = " << (c.is_hmv ? "true" : "false") << "\n";
      os << "principal_count = " << c.principal_elements.size() << "\n";
    }
    if (!center_names.empty()) {
      os << "center =";
      for (const auto& s : center_names) os << " " << s;
      os << "\n";
    }
    if (measure_vertex_count)
      os << "measure_vertices = " << *measure_vertex_count << "\n";
    for (const auto& v : measure_vertices) os << "vertex = " << v << "\n";
    if (order_determining)
      os << "order_determining = " << *order_determining << "\n";
    if (group_rank) {
      os << "rank = " << *group_rank << "\n";
      os << "torsion =";
      if (group_torsion.empty())
        os << " none";
      else
        for (const auto& t : group_torsion) os << " " << t;
      os << "\n";
      os << "unit = " << group_unit << "\n";
    }
    for (const auto& [k, v] : correspondence) os << k << " = " << v << "\n";
    if (projection_count) os << "projections = " << *projection_count << "\n";
    for (const auto& [k, v] : compression_items) os << k << " = " << v << "\n";
    for (const auto& [k, v] : extra) os << k << " = " << v << "\n";
    return os.str();
  }
};

}  // namespace effectkit
