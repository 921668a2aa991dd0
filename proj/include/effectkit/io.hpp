#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "effectkit/effect_algebra.hpp"
#include "effectkit/mv.hpp"
#include "effectkit/unigroup.hpp"

namespace effectkit {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " +
                           msg),
        line(l),
        column(c) {}
};

// A parsed document: one of the three payload kinds, plus naming
// metadata. Effect-algebra and MV documents carry element names.
struct AlgebraDocument {
  enum class Kind { kEffectAlgebra, kMvAlgebra, kGroup };
  Kind kind = Kind::kEffectAlgebra;
  EffectAlgebraTable table;
  MVTable mv;
  GroupPresentation group;
  std::vector<std::string> element_names;
  std::string name;
  std::string source;
};

namespace io_detail {

struct Line {
  int number = 0;
  std::string text;
};

// Strips comments and blank lines, keeping line numbers for errors.
inline std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int num = 0;
  while (std::getline(in, raw)) {
    ++num;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' ||
                            raw.back() == '\r'))
      raw.pop_back();
    std::size_t start = raw.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    out.push_back({num, raw.substr(start)});
  }
  return out;
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline ZVec parse_vector(const Line& ln, const std::string& body,
                         int expect = -1) {
  auto toks = split_ws(body);
  ZVec v;
  for (const auto& t : toks) {
    try {
      v.push_back(Int(t));
    } catch (...) {
      throw ParseError(ln.number, 1, "bad integer '" + t + "'");
    }
  }
  if (expect >= 0 && static_cast<int>(v.size()) != expect)
    throw ParseError(ln.number, 1,
                     "expected " + std::to_string(expect) + " entries");
  return v;
}

}  // namespace io_detail

inline AlgebraDocument parse_document(const std::string& text) {
  using io_detail::Line;
  auto lines = io_detail::logical_lines(text);
  AlgebraDocument doc;

  std::map<std::string, ElementId> elem_of;
  auto lookup = [&](const Line& ln, const std::string& name) -> ElementId {
    auto it = elem_of.find(name);
    if (it == elem_of.end())
      throw ParseError(ln.number, 1, "unknown element name '" + name + "'");
    return it->second;
  };

  // Section-less key scan first; the payload kind is decided by which
  // block header appears.
  enum class Block { kNone, kSum, kMvSum, kSupp, kCone, kImages };
  Block block = Block::kNone;
  bool saw_elements = false, saw_zero = false, saw_unit = false,
       saw_rank = false, saw_sum = false, saw_mvsum = false;
  std::string zero_name, unit_name;
  std::vector<std::tuple<int, ElementId, ElementId, ElementId>> sums;
  std::vector<std::pair<ElementId, ElementId>> supps;
  int supp_line = 0;

  for (const auto& ln : lines) {
    const std::string& s = ln.text;
    auto starts = [&](const char* k) {
      return s.rfind(k, 0) == 0;
    };
    if (starts("name:")) {
      doc.name = io_detail::split_ws(s.substr(5)).empty()
                     ? ""
                     : s.substr(s.find_first_not_of(" \t", 5));
      block = Block::kNone;
    } else if (starts("source:")) {
      doc.source = s.substr(s.find_first_not_of(" \t", 7));
      block = Block::kNone;
    } else if (starts("elements:")) {
      auto names = io_detail::split_ws(s.substr(9));
      if (names.empty()) throw ParseError(ln.number, 1, "empty element list");
      for (const auto& n : names) {
        if (elem_of.count(n))
          throw ParseError(ln.number, 1, "duplicate element name '" + n + "'");
        elem_of[n] = static_cast<ElementId>(doc.element_names.size());
        doc.element_names.push_back(n);
      }
      saw_elements = true;
      block = Block::kNone;
    } else if (starts("zero:")) {
      auto toks = io_detail::split_ws(s.substr(5));
      if (toks.size() != 1) throw ParseError(ln.number, 1, "zero: wants one name");
      zero_name = toks[0];
      saw_zero = true;
      block = Block::kNone;
    } else if (starts("unit:") && !saw_rank) {
      auto toks = io_detail::split_ws(s.substr(5));
      if (toks.size() != 1) throw ParseError(ln.number, 1, "unit: wants one name");
      unit_name = toks[0];
      saw_unit = true;
      block = Block::kNone;
    } else if (starts("unit:") && saw_rank) {
      doc.group.unit = io_detail::parse_vector(ln, s.substr(5), doc.group.rank);
      saw_unit = true;
      block = Block::kNone;
    } else if (starts("rank:")) {
      auto toks = io_detail::split_ws(s.substr(5));
      if (toks.size() != 1) throw ParseError(ln.number, 1, "rank: wants one integer");
      doc.group.rank = std::stoi(toks[0]);
      if (doc.group.rank <= 0) throw ParseError(ln.number, 1, "rank must be positive");
      saw_rank = true;
      doc.kind = AlgebraDocument::Kind::kGroup;
      block = Block::kNone;
    } else if (s == "sum:") {
      saw_sum = true;
      block = Block::kSum;
    } else if (s == "mvsum:") {
      saw_mvsum = true;
      block = Block::kMvSum;
    } else if (s == "supp:") {
      block = Block::kSupp;
    } else if (s == "cone:") {
      block = Block::kCone;
    } else if (s == "images:") {
      block = Block::kImages;
    } else {
      switch (block) {
        case Block::kSum:
        case Block::kMvSum: {
          // <a> + <b> = <c>
          auto toks = io_detail::split_ws(s);
          if (toks.size() != 5 || toks[1] != "+" || toks[3] != "=")
            throw ParseError(ln.number, 1, "expected '<a> + <b> = <c>'");
          sums.emplace_back(ln.number, lookup(ln, toks[0]), lookup(ln, toks[2]),
                            lookup(ln, toks[4]));
          break;
        }
        case Block::kSupp: {
          // <a>' = <b>
          auto toks = io_detail::split_ws(s);
          if (toks.size() != 3 || toks[1] != "=" || toks[0].size() < 2 ||
              toks[0].back() != '\'')
            throw ParseError(ln.number, 1, "expected \"<a>' = <b>\"");
          supps.emplace_back(lookup(ln, toks[0].substr(0, toks[0].size() - 1)),
                             lookup(ln, toks[2]));
          supp_line = ln.number;
          break;
        }
        case Block::kCone:
          doc.group.cone_gens.push_back(
              io_detail::parse_vector(ln, s, doc.group.rank));
          break;
        case Block::kImages:
          doc.group.images.push_back(
              io_detail::parse_vector(ln, s, doc.group.rank));
          break;
        case Block::kNone:
          throw ParseError(ln.number, 1, "unexpected line outside any block");
      }
    }
  }

  if (doc.kind == AlgebraDocument::Kind::kGroup) {
    if (!saw_unit) throw ParseError(1, 1, "group document missing 'unit:'");
    if (doc.group.cone_gens.empty())
      throw ParseError(1, 1, "group document missing 'cone:' block");
    doc.group.label = doc.name.empty() ? "group" : doc.name;
    return doc;
  }

  if (!saw_elements) throw ParseError(1, 1, "missing 'elements:'");
  if (!saw_zero) throw ParseError(1, 1, "missing 'zero:'");
  if (!saw_unit) throw ParseError(1, 1, "missing 'unit:'");
  int n = static_cast<int>(doc.element_names.size());
  ElementId zero = elem_of.count(zero_name)
                       ? elem_of[zero_name]
                       : throw ParseError(1, 1, "unknown zero element"),
            unit = elem_of.count(unit_name)
                       ? elem_of[unit_name]
                       : throw ParseError(1, 1, "unknown unit element");

  if (saw_mvsum) {
    doc.kind = AlgebraDocument::Kind::kMvAlgebra;
    doc.mv = MVTable::empty(n, zero, unit, doc.name);
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    for (auto& [line, a, b, c] : sums) {
      auto idx = static_cast<std::size_t>(a) * n + b;
      if (seen[idx] && doc.mv.mvsum[idx] != c)
        throw ParseError(line, 1, "conflicting mv-sum for this pair");
      seen[idx] = 1;
      doc.mv.mvsum[idx] = c;
      auto jdx = static_cast<std::size_t>(b) * n + a;
      if (seen[jdx] && doc.mv.mvsum[jdx] != c)
        throw ParseError(line, 1, "conflicting mv-sum under symmetry");
      seen[jdx] = 1;
      doc.mv.mvsum[jdx] = c;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i])
        throw ParseError(supp_line ? supp_line : 1, 1,
                         "mvsum block must define every pair");
    for (auto& [a, b] : supps) doc.mv.supp[a] = b;
    for (int i = 0; i < n; ++i)
      if (doc.mv.supp[i] == kUndefined)
        throw ParseError(supp_line ? supp_line : 1, 1,
                         "supp block must define every element");
    return doc;
  }

  if (!saw_sum) throw ParseError(1, 1, "missing 'sum:' block");
  doc.kind = AlgebraDocument::Kind::kEffectAlgebra;
  doc.table = EffectAlgebraTable::empty(n, zero, unit, doc.name);
  for (auto& [line, a, b, c] : sums) {
    ElementId prev = doc.table.at(a, b);
    if (prev != kUndefined && prev != c)
      throw ParseError(line, 1, "conflicting sum for this pair");
    ElementId prev_sym = doc.table.at(b, a);
    if (prev_sym != kUndefined && prev_sym != c)
      throw ParseError(line, 1, "conflicting sum under symmetry");
    doc.table.set_raw(a, b, c);
    doc.table.set_raw(b, a, c);
  }
  return doc;
}

// Normalized text form; parse(serialize(doc)) == doc byte-for-byte after
// one round of normalization.
inline std::string serialize(const AlgebraDocument& doc) {
  std::ostringstream os;
  if (!doc.name.empty()) os << "name: " << doc.name << "\n";
  if (!doc.source.empty()) os << "source: " << doc.source << "\n";
  auto write_vec = [&](const ZVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << " ";
      os << v[i];
    }
    os << "\n";
  };
  switch (doc.kind) {
    case AlgebraDocument::Kind::kGroup: {
      os << "rank: " << doc.group.rank << "\n";
      os << "unit: ";
      write_vec(doc.group.unit);
      os << "cone:\n";
      for (const auto& g : doc.group.cone_gens) write_vec(g);
      if (!doc.group.images.empty()) {
        os << "images:\n";
        for (const auto& g : doc.group.images) write_vec(g);
      }
      return os.str();
    }
    case AlgebraDocument::Kind::kMvAlgebra: {
      os << "elements:";
      for (const auto& e : doc.element_names) os << " " << e;
      os << "\n";
      os << "zero: " << doc.element_names[doc.mv.zero] << "\n";
      os << "unit: " << doc.element_names[doc.mv.unit] << "\n";
      os << "mvsum:\n";
      for (ElementId a = 0; a < doc.mv.n; ++a)
        for (ElementId b = a; b < doc.mv.n; ++b)
          os << doc.element_names[a] << " + " << doc.element_names[b] << " = "
             << doc.element_names[doc.mv.sum(a, b)] << "\n";
      os << "supp:\n";
      for (ElementId a = 0; a < doc.mv.n; ++a)
        os << doc.element_names[a] << "' = " << doc.element_names[doc.mv.sup(a)]
           << "\n";
      return os.str();
    }
    case AlgebraDocument::Kind::kEffectAlgebra: {
      os << "elements:";
      for (const auto& e : doc.element_names) os << " " << e;
      os << "\n";
      os << "zero: " << doc.element_names[doc.table.zero] << "\n";
      os << "unit: " << doc.element_names[doc.table.unit] << "\n";
      os << "sum:\n";
      for (ElementId a = 0; a < doc.table.n; ++a)
        for (ElementId b = a; b < doc.table.n; ++b) {
          ElementId c = doc.table.at(a, b);
          if (c == kUndefined) continue;
          os << doc.element_names[a] << " + " << doc.element_names[b] << " = "
             << doc.element_names[c] << "\n";
        }
      return os.str();
    }
  }
  return os.str();
}

// Wraps a bare table in a document with synthetic element names.
inline AlgebraDocument document_of(const EffectAlgebraTable& t) {
  AlgebraDocument doc;
  doc.kind = AlgebraDocument::Kind::kEffectAlgebra;
  doc.table = t;
  doc.name = t.name;
  for (int i = 0; i < t.n; ++i) {
    if (i == t.zero)
      doc.element_names.push_back("0");
    else if (i == t.unit)
      doc.element_names.push_back("u");
    else
      doc.element_names.push_back("e" + std::to_string(i));
  }
  return doc;
}

}  // namespace effectkit
