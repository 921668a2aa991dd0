// Command-line driver: validation, classification, measure polytopes,
// unigroup construction, compressions, the Theorem 8.7 harness, the
// census enumerator, and the fixture zoo.
//
// Exit codes: 0 success / verdict true, 1 verdict false, 2 input error,
// 3 resource cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "effectkit/effectkit.hpp"

using namespace effectkit;

namespace {

struct Caps {
  int enumerate_cap = kDefaultEnumerateCap;
  int zoo_cap = kDefaultSizeCap;
  int point_cap = kDefaultPointCap;
};

Caps read_caps() {
  Caps caps;
  if (const char* env = std::getenv("EFFECTKIT_CAP")) {
    int v = std::atoi(env);
    if (v > 0) {
      caps.enumerate_cap = v;
      caps.zoo_cap = v;
      caps.point_cap = std::max(v, kDefaultPointCap);
    }
  }
  return caps;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string element_name(const AlgebraDocument& doc, ElementId x) {
  if (x >= 0 && x < static_cast<ElementId>(doc.element_names.size()))
    return doc.element_names[x];
  return "#" + std::to_string(x);
}

// Effect-algebra payload of a document, translating MV documents through
// Theorem 5.3.
EffectAlgebraTable table_of(const AlgebraDocument& doc) {
  switch (doc.kind) {
    case AlgebraDocument::Kind::kEffectAlgebra:
      return doc.table;
    case AlgebraDocument::Kind::kMvAlgebra:
      return mv_to_ea(doc.mv);
    default:
      throw std::invalid_argument("command needs an effect-algebra document");
  }
}

GroupPresentation group_of(const AlgebraDocument& doc) {
  if (doc.kind == AlgebraDocument::Kind::kGroup) return doc.group;
  return universal_group(table_of(doc)).presentation;
}

int cmd_validate(const AlgebraDocument& doc) {
  switch (doc.kind) {
    case AlgebraDocument::Kind::kEffectAlgebra: {
      auto res = validate_axioms(doc.table);
      std::cout << "kind = effect-algebra\n";
      std::cout << "valid = " << (res.ok() ? "true" : "false") << "\n";
      for (const auto& v : res.violations) {
        std::cout << "violation = " << axiom_name(v.axiom);
        for (auto w : v.witness) std::cout << " " << element_name(doc, w);
        std::cout << " (" << v.detail << ")\n";
      }
      return res.ok() ? 0 : 1;
    }
    case AlgebraDocument::Kind::kMvAlgebra: {
      auto res = validate_mv(doc.mv);
      std::cout << "kind = mv-algebra\n";
      std::cout << "valid = " << (res.ok() ? "true" : "false") << "\n";
      for (const auto& v : res.violations) {
        std::cout << "violation = axiom-" << v.axiom;
        for (auto w : v.witness) std::cout << " " << element_name(doc, w);
        std::cout << "\n";
      }
      return res.ok() ? 0 : 1;
    }
    case AlgebraDocument::Kind::kGroup: {
      std::cout << "kind = group-presentation\n";
      try {
        SemigroupMembership sm(doc.group);
        bool unit_ok = sm.contains(doc.group.unit);
        std::cout << "cone_pointed = true\n";
        std::cout << "unit_in_cone = " << (unit_ok ? "true" : "false") << "\n";
        return unit_ok ? 0 : 1;
      } catch (const std::invalid_argument&) {
        std::cout << "cone_pointed = false\n";
        return 1;
      }
    }
  }
  return 2;
}

int cmd_classify(const AlgebraDocument& doc) {
  auto t = table_of(doc);
  Report rep;
  rep.subject = doc.name.empty() ? (t.name.empty() ? "algebra" : t.name) : doc.name;
  rep.n = t.n;
  rep.classification = classify(t);
  for (auto z : rep.classification->center)
    rep.center_names.push_back(element_name(doc, z));
  std::cout << rep.to_text();
  return 0;
}

int cmd_center(const AlgebraDocument& doc) {
  auto t = table_of(doc);
  for (auto z : center(t)) std::cout << element_name(doc, z) << "\n";
  return 0;
}

int cmd_measures(const AlgebraDocument& doc) {
  auto t = table_of(doc);
  Report rep;
  rep.subject = doc.name.empty() ? "algebra" : doc.name;
  rep.n = t.n;
  auto poly = probability_polytope(t);
  auto ext = extreme_points(poly);
  rep.measure_vertex_count = ext.size();
  for (const auto& m : ext) rep.measure_vertices.push_back(to_string(m.values));
  auto od = is_order_determining(t, ext);
  rep.order_determining =
      od.determining
          ? "true"
          : "false (witness: " + element_name(doc, od.witness->first) + " vs " +
                element_name(doc, od.witness->second) + ")";
  std::cout << rep.to_text();
  return 0;
}

int cmd_unigroup(const AlgebraDocument& doc, int box_k) {
  Report rep;
  rep.subject = doc.name.empty() ? "algebra" : doc.name;
  if (doc.kind == AlgebraDocument::Kind::kGroup) {
    const auto& p = doc.group;
    rep.group_rank = p.rank;
    rep.group_torsion = p.torsion;
    rep.group_unit = to_string(p.unit);
    auto gp = group_predicates(p, box_k);
    rep.correspondence.emplace_back("order_unit",
                                    gp.is_order_unit ? "true" : "false");
    rep.correspondence.emplace_back("generative",
                                    gp.is_generative ? "true" : "false");
    rep.correspondence.emplace_back("interpolation",
                                    verdict_text(gp.has_interpolation));
    rep.correspondence.emplace_back("lattice_ordered",
                                    verdict_text(gp.is_lattice_ordered));
    rep.correspondence.emplace_back("totally_ordered",
                                    verdict_text(gp.is_totally_ordered));
    rep.correspondence.emplace_back("archimedean",
                                    gp.is_archimedean ? "true" : "false");
    rep.extra.emplace_back("states", std::to_string(states_of(p).size()));
    std::cout << rep.to_text();
    return 0;
  }
  auto t = table_of(doc);
  rep.n = t.n;
  auto ug = universal_group(t);
  const auto& p = ug.presentation;
  rep.group_rank = p.rank;
  rep.group_torsion = p.torsion;
  rep.group_unit = to_string(p.unit);
  for (ElementId x = 0; x < t.n; ++x)
    rep.extra.emplace_back("image_" + element_name(doc, x),
                           to_string(p.images[x]));
  auto cls = classify(t);
  auto corr = correspondence_checks(t, cls, box_k);
  for (const auto& it : corr.items)
    rep.correspondence.emplace_back(
        it.name, std::string(it.agree ? "agree" : "DISAGREE") + " [algebra=" +
                     (it.algebra_side ? "true" : "false") + ", group=" +
                     verdict_text(it.group_side) + "]");
  assert_state_measure_bijection(p, t);
  rep.extra.emplace_back("states", std::to_string(states_of(p).size()));
  rep.extra.emplace_back("state_measure_bijection", "verified");
  std::cout << rep.to_text();
  for (const auto& it : corr.items)
    if (!it.agree) return 1;
  return 0;
}

int cmd_compress(const AlgebraDocument& doc, int box_k) {
  GroupPresentation p = group_of(doc);
  Report rep;
  rep.subject = p.label.empty() ? "group" : p.label;
  UnitalContext ctx(p, box_k);
  auto ps = find_projections(ctx);
  rep.projection_count = ps.projections.size();
  for (const auto& q : ps.projections)
    rep.compression_items.emplace_back("projection", to_string(q));
  rep.compression_items.emplace_back(
      "compressible", ps.is_compressible ? "true" : "false (" + ps.reason + ")");
  if (ps.is_compressible) {
    auto rk = rickart_map(ctx, ps);
    rep.compression_items.emplace_back(
        "rickart", rk.exists ? "true-up-to-k=" + std::to_string(box_k)
                             : "false");
    auto gc = general_comparability(ctx, ps);
    rep.compression_items.emplace_back("general_comparability",
                                       verdict_text(gc));
    bool rgc = rk.exists && gc.holds();
    rep.compression_items.emplace_back(
        "rgc", rgc ? "true-up-to-k=" + std::to_string(box_k) : "false");
  }
  std::cout << rep.to_text();
  return ps.is_compressible ? 0 : 1;
}

int cmd_harness87(const AlgebraDocument& doc, int box_k) {
  GroupPresentation p = group_of(doc);
  UnitalContext ctx(p, box_k);
  auto rep = theorem_8_7_harness(ctx);
  std::cout << "subject = " << (p.label.empty() ? "group" : p.label) << "\n";
  std::cout << "condition_i_unigroup_hmv = "
            << (rep.cond_unigroup_hmv ? "true" : "false") << "\n";
  std::cout << "condition_ii_lattice_rickart = "
            << (rep.cond_lattice_rickart ? "true" : "false") << "\n";
  std::cout << "condition_iii_rgc = " << (rep.cond_rgc ? "true" : "false")
            << "\n";
  std::cout << "agree = " << (rep.agree ? "true" : "false") << "\n";
  if (rep.heyting_formula_ok)
    std::cout << "heyting_formula = " << (*rep.heyting_formula_ok ? "true" : "false")
              << "\n";
  std::cout << "box_k = " << box_k << "\n";
  bool all = rep.agree && rep.cond_unigroup_hmv;
  return all ? 0 : 1;
}

int cmd_enumerate(int max_n, bool census, int workers, const Caps& caps) {
  if (census) {
    for (const auto& row : emit_census(max_n, workers, caps.enumerate_cap))
      std::cout << "n=" << row.n << ": total=" << row.total << " omp=" << row.omp
                << " mv=" << row.mv << " boolean=" << row.boolean_ea
                << " hmv=" << row.hmv << " riesz=" << row.riesz << "\n";
    return 0;
  }
  int prev_n = 1;
  long long count = 0;
  auto flush = [&] {
    if (prev_n >= 2) std::cout << "n=" << prev_n << ": " << count << "\n";
  };
  for (const auto& t : enumerate_all(max_n, workers, caps.enumerate_cap)) {
    if (t.n != prev_n) {
      flush();
      prev_n = t.n;
      count = 0;
    }
    ++count;
  }
  flush();
  return 0;
}

EffectAlgebraTable parse_zoo_spec(const std::string& spec, std::size_t& pos,
                                  const Caps& caps);

std::vector<EffectAlgebraTable> parse_zoo_args(const std::string& spec,
                                               std::size_t& pos,
                                               const Caps& caps) {
  std::vector<EffectAlgebraTable> args;
  if (spec[pos] != '(') throw std::invalid_argument("zoo: expected '('");
  ++pos;
  args.push_back(parse_zoo_spec(spec, pos, caps));
  while (pos < spec.size() && spec[pos] == ',') {
    ++pos;
    args.push_back(parse_zoo_spec(spec, pos, caps));
  }
  if (pos >= spec.size() || spec[pos] != ')')
    throw std::invalid_argument("zoo: expected ')'");
  ++pos;
  return args;
}

EffectAlgebraTable parse_zoo_spec(const std::string& spec, std::size_t& pos,
                                  const Caps& caps) {
  std::size_t start = pos;
  while (pos < spec.size() && (std::isalnum(spec[pos]) || spec[pos] == '_'))
    ++pos;
  std::string head = spec.substr(start, pos - start);
  if (pos < spec.size() && spec[pos] == '(' &&
      (head == "product")) {
    auto args = parse_zoo_args(spec, pos, caps);
    if (args.size() != 2)
      throw std::invalid_argument("zoo: product wants two arguments");
    return zoo_product(args[0], args[1], caps.zoo_cap);
  }
  if (pos >= spec.size() || spec[pos] != '(')
    throw std::invalid_argument("zoo: expected '(' after '" + head + "'");
  ++pos;
  std::size_t nstart = pos;
  while (pos < spec.size() && std::isdigit(spec[pos])) ++pos;
  if (pos >= spec.size() || spec[pos] != ')')
    throw std::invalid_argument("zoo: expected integer argument");
  int k = std::stoi(spec.substr(nstart, pos - nstart));
  ++pos;
  if (head == "boolean") return zoo_boolean(k, caps.zoo_cap);
  if (head == "chain") return zoo_chain(k, caps.zoo_cap);
  if (head == "mo") return zoo_mo(k, caps.zoo_cap);
  if (head == "ring")
    return zoo_ring_idempotents(FiniteRing::cyclic(k), caps.zoo_cap);
  if (head == "m2")
    return zoo_ring_idempotents(FiniteRing::matrix2(k), caps.zoo_cap);
  throw std::invalid_argument("zoo: unknown generator '" + head + "'");
}

int cmd_zoo(const std::string& spec, const std::string& out_path,
            const Caps& caps) {
  std::size_t pos = 0;
  auto t = parse_zoo_spec(spec, pos, caps);
  if (pos != spec.size())
    throw std::invalid_argument("zoo: trailing characters in spec");
  if (!validate_axioms(t).ok())
    throw std::logic_error("zoo: construction failed validation");
  std::string text = serialize(document_of(t));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite effect algebras, their measures, unigroups and compressions"};
  app.require_subcommand(1);
  Caps caps = read_caps();

  int workers = 1;
  int box_k = 2;
  app.add_option("--workers", workers, "parallel workers (never changes output)");
  app.add_option("--box", box_k, "bound k for box-verified group predicates");

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "input document")->required();
  };
  auto* validate = app.add_subcommand("validate", "check the defining axioms");
  validate->fallthrough();
  add_file(validate);
  auto* classify_cmd = app.add_subcommand("classify", "classification flags and center");
  classify_cmd->fallthrough();
  add_file(classify_cmd);
  auto* center_cmd = app.add_subcommand("center", "central elements");
  center_cmd->fallthrough();
  add_file(center_cmd);
  auto* measures = app.add_subcommand("measures", "probability-measure polytope");
  measures->fallthrough();
  add_file(measures);
  auto* unigroup_cmd = app.add_subcommand("unigroup", "universal group and correspondences");
  unigroup_cmd->fallthrough();
  add_file(unigroup_cmd);
  auto* compress = app.add_subcommand("compress", "projections, Rickart map, comparability");
  compress->fallthrough();
  add_file(compress);
  auto* harness = app.add_subcommand("harness87", "three-way HMV/unigroup equivalence");
  harness->fallthrough();
  add_file(harness);

  int max_n = 4;
  bool census = false;
  auto* enumerate = app.add_subcommand("enumerate", "census of isomorphism classes");
  enumerate->fallthrough();
  enumerate->add_option("--max", max_n, "largest size")->required();
  enumerate->add_flag("--census", census, "cross-tabulate by classification");

  std::string zoo_spec, zoo_out;
  auto* zoo = app.add_subcommand("zoo", "generate a fixture algebra");
  zoo->add_option("spec", zoo_spec,
                  "boolean(k) | chain(m) | mo(k) | ring(m) | m2(m) | product(a,b)")
      ->required();
  zoo->add_option("-o,--out", zoo_out, "write to file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return cmd_enumerate(max_n, census, workers, caps);
    if (*zoo) return cmd_zoo(zoo_spec, zoo_out, caps);

    AlgebraDocument doc = parse_document(slurp(file));
    if (*validate) return cmd_validate(doc);
    if (*classify_cmd) return cmd_classify(doc);
    if (*center_cmd) return cmd_center(doc);
    if (*measures) return cmd_measures(doc);
    if (*unigroup_cmd) return cmd_unigroup(doc, box_k);
    if (*compress) return cmd_compress(doc, box_k);
    if (*harness) return cmd_harness87(doc, box_k);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
