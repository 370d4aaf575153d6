#include "slc/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "slc/criteria.hpp"
#include "slc/cycles.hpp"
#include "slc/errors.hpp"
#include "slc/examples.hpp"

namespace slc::cli {

namespace {

Json rational(const Rational& r) { return to_string(r); }

void require_valid(const StableLogSurface& s) {
  const auto violations = validate_triple(s);
  if (violations.empty()) return;
  std::string message = "invalid triple:";
  for (const auto& v : violations) message += "\n  " + v;
  throw InvalidTriple(message);
}

Json locus_point_json(const LocusPoint& p) {
  Json j;
  j["id"] = p.id;
  j["mu"] = p.mu;
  j["mu_with_boundary"] = p.mu_with_boundary;
  j["type"] = std::string(to_string(p.type));
  j["node_pairs"] = p.node_pairs;
  j["degenerate_cusp"] = p.degenerate_cusp;
  j["branches"] = Json::object();
  for (const auto& [comp, count] : p.component_branches) j["branches"][comp] = count;
  return j;
}

std::string flag_text(const std::optional<bool>& flag) {
  if (!flag) return "unknown";
  return *flag ? "true" : "false";
}

Json verdict_json(const Verdict& v) {
  Json j;
  if (v.threshold) {
    j["m"] = *v.threshold;
  } else {
    j["m"] = "unknown";
  }
  j["justification"] = v.justification;
  if (!v.pending.empty()) j["pending"] = v.pending;
  return j;
}

std::string k_multiple(long mi) { return (mi == 1 ? std::string() : std::to_string(mi)) + "K"; }

// Rational components of D whose only special point is a single 3-multi-node
// on them; the line bundle table for that curve gives negative evidence.
std::vector<std::string> multinode3_evidence(const NonNormalLocusReport& report, const PolarizedCurve& d, long mi) {
  std::vector<std::string> out;
  for (const auto& comp : d.curve().components()) {
    if (comp.genus != 0) continue;
    int touching = 0;
    int branches = 0;
    auto visit = [&](const LocusPoint& p) {
      auto it = p.component_branches.find(comp.id);
      if (it == p.component_branches.end()) return;
      ++touching;
      branches = it->second;
    };
    for (const auto& p : report.singular_points) visit(p);
    for (const auto& p : report.boundary_contacts) visit(p);
    if (touching != 1 || branches != 3) continue;
    const Rational deg = Rational(mi) * d.degrees().at(comp.id);
    if (!is_integral(deg) || deg < 2) continue;
    const Multinode3Row row = multinode3_table(static_cast<int>(deg.get_num().get_si()));
    const std::string tag = " on " + comp.id + " (deg " + std::to_string(row.degree) + " table: ";
    if (!row.is_morphism) {
      out.push_back(k_multiple(mi) + " not bpf" + tag + "not a morphism)");
    } else if (!row.embedding) {
      out.push_back(k_multiple(mi) + " not very ample" + tag + "not an embedding)");
    }
  }
  return out;
}

}  // namespace

Json invariants_report(const document::SurfaceDocument& doc) {
  const StableLogSurface& s = doc.surface;
  require_valid(s);
  const SurfaceInvariants inv = invariants(s);
  const NonNormalLocusReport locus = non_normal_locus(s);
  const PolarizedCurve d = conductor_curve(s, locus);

  Json j;
  j["command"] = "invariants";
  j["K2"] = rational(inv.k_squared);
  j["chi"] = inv.chi;
  j["chi_conductor"] = inv.chi_conductor;
  j["chi_D_normalization"] = inv.chi_conductor_nu;
  j["chi_D"] = inv.chi_d;
  j["index"] = s.global_index;
  j["normal_components"] = s.components.size();
  j["D_components"] = locus.component_count();
  j["multi_nodes"] = Json::array();
  for (const auto& p : locus.singular_points) j["multi_nodes"].push_back(locus_point_json(p));
  if (!locus.boundary_contacts.empty()) {
    j["boundary_contacts"] = Json::array();
    for (const auto& p : locus.boundary_contacts) j["boundary_contacts"].push_back(locus_point_json(p));
  }
  j["components_of_D"] = Json::array();
  for (const auto& comp : locus.components) {
    const std::uint64_t bit = std::uint64_t{1} << d.curve().index_of(comp.id);
    j["components_of_D"].push_back({{"id", comp.id},
                                    {"genus", comp.genus},
                                    {"arithmetic_genus", arithmetic_genus(d.curve().restricted(bit))},
                                    {"degree", rational(d.degrees().at(comp.id))}});
  }
  if (!d.curve().components().empty()) j["arithmetic_genus_D"] = arithmetic_genus(d.curve());
  Json graphs = Json::array();
  for (const auto& c : s.components) {
    for (const auto& sp : c.singular_points) {
      Json g{{"component", c.id}, {"location", sp.location}, {"type", std::string(to_string(classify_graph(sp.graph)))}};
      if (!sp.graph.empty()) {
        g["determinant"] = to_string(graph_determinant(sp.graph));
        g["codiscrepancy"] = codiscrepancy(sp.graph).to_string();
      }
      graphs.push_back(std::move(g));
    }
  }
  if (!graphs.empty()) j["singular_points"] = std::move(graphs);
  return j;
}

Json cycle_report(const document::GraphDocument& doc, CycleMode mode) {
  const ExceptionalGraph& g = doc.graph;
  if (!g.empty() && !is_negative_definite(g)) throw NotNegativeDefinite();
  LatticeCycle z;
  std::vector<Rational> offset(g.size());
  Json j;
  j["command"] = "cycle";
  switch (mode) {
    case CycleMode::Semi:
      j["mode"] = "semi";
      z = semi_numerical_cycle(g);
      for (std::size_t i = 0; i < g.size(); ++i) offset[i] = g.marks(i);
      break;
    case CycleMode::Fundamental:
      j["mode"] = "fundamental";
      z = fundamental_cycle(g);
      break;
    case CycleMode::Hat:
      j["mode"] = "hat";
      z = hat_transform(g, doc.incidence);
      for (const auto& [id, v] : doc.incidence) offset[g.index_of(id)] = v;
      break;
  }
  j["type"] = std::string(to_string(classify_graph(g)));
  if (!g.empty()) j["determinant"] = to_string(graph_determinant(g));
  j["cycle"] = z.to_string();
  std::string list;
  for (std::size_t i = 0; i < z.size(); ++i) list += (i ? "," : "") + std::to_string(z.coefficients()[i]);
  j["coefficients"] = list;

  const auto products = intersections(g, z.to_rational(), offset);
  Json checks = Json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const bool ok = products[i] <= 0;
    all_ok = all_ok && ok;
    checks.push_back({{"vertex", g.vertex(i).id}, {"product", rational(products[i])}, {"ok", ok}});
  }
  j["inequalities"] = std::move(checks);
  j["inequalities_hold"] = all_ok;

  if (mode == CycleMode::Hat) {
    std::map<std::string, Rational> incidence;
    for (const auto& [id, v] : doc.incidence) incidence[id] = v;
    const QDivisor pullback = numerical_pullback(g, incidence);
    const auto pb = coefficients_on(g, pullback);
    bool dominates = true;
    for (std::size_t i = 0; i < g.size(); ++i) dominates = dominates && Rational(z.coefficients()[i]) >= pb[i];
    j["pullback"] = pullback.to_string();
    j["hat_dominates_pullback"] = dominates;
    j["cartier"] = z.to_divisor() == pullback;
    if (g.total_marks() == 0 || classify_graph(g) != GraphType::Unclassified) {
      const AdjunctionCorrection corr = adjunction_correction(g, codiscrepancy(g), z, pullback);
      j["adjunction_correction"] = rational(corr.value);
      j["difference_nonpositive"] = corr.difference_nonpositive;
    }
  }
  return j;
}

Json criteria_report(const document::SurfaceDocument& doc, long m_first, long m_last) {
  if (m_first < 1 || m_last < m_first || m_last > 100) throw ValidationError("m range must satisfy 1 <= a <= b <= 100");
  const StableLogSurface& s = doc.surface;
  require_valid(s);
  const Hypotheses h = document::derive_hypotheses(doc);
  const NonNormalLocusReport locus = non_normal_locus(s);
  const PolarizedCurve d = conductor_curve(s, locus);

  const Verdict bpf = bpf_threshold(h);
  const Verdict va = very_ample_threshold(h);
  const Verdict bir = birational_threshold(h);
  const RingBound ring = ring_generation_bound(h.index, *bpf.threshold);

  Json j;
  j["command"] = "criteria";
  Json hyp;
  hyp["index"] = h.index;
  hyp["KDelta_squared"] = rational(h.kdelta_squared);
  hyp["component_squares"] = Json::array();
  for (const auto& q : h.component_squares) hyp["component_squares"].push_back(rational(q));
  hyp["nodal"] = flag_text(h.nodal);
  hyp["normal"] = flag_text(h.normal);
  hyp["conductor_smooth"] = flag_text(h.conductor_smooth);
  hyp["canonical_off_conductor"] = flag_text(h.canonical_off_conductor);
  hyp["semi_canonical"] = flag_text(h.semi_canonical);
  j["hypotheses"] = std::move(hyp);

  Json th;
  th["bpf"] = verdict_json(bpf);
  th["birational"] = verdict_json(bir);
  th["very_ample"] = verdict_json(va);
  th["ring"] = {{"a", *bpf.threshold},
                {"surjective_from", ring.surjective_from},
                {"generated_in_degree", ring.generated_in_degree},
                {"justification", "multiplication surjective from 2 + 2aI, generated in degree <= 3aI + 1"}};
  j["thresholds"] = std::move(th);
  j["notes"] = Json::array({"subschemes of length two not embedded by the 4I-th map are embedded from 7I on; "
                            "this is a remark on sharpness, not a very-ampleness verdict"});

  j["per_m"] = Json::array();
  for (long m = m_first; m <= m_last; ++m) {
    Json row;
    row["m"] = m;
    const std::vector<std::string> evidence = multinode3_evidence(locus, d, m * h.index);
    // Evidence on a curve in D only rules out bpf and very ampleness.
    auto status = [&](const Verdict& v, std::optional<std::string_view> negative) {
      if (v.threshold && m >= *v.threshold) return std::string("yes: ") + v.justification;
      for (const auto& e : evidence) {
        if (negative && e.find(*negative) != std::string::npos) return "no: " + e;
      }
      return std::string("not guaranteed");
    };
    row["X"] = {{"bpf", status(bpf, "not bpf")},
                {"birational", status(bir, std::nullopt)},
                {"very_ample", status(va, " not ")}};

    const RestrictionVerdict rv = restriction_to_D_verdict(locus, d, h.index, m, h.nodal);
    Json dj;
    dj["verdict"] = rv.very_ample ? "VERY_AMPLE" : rv.bpf ? (rv.birational ? "BPF+BIRATIONAL" : "BPF") : "INCONCLUSIVE";
    dj["justification"] = rv.justifications;
    if (rv.certificate) {
      dj["criterion"] = std::string(to_string(rv.certificate->status));
      dj["criterion_detail"] = rv.certificate->justification;
    }
    if (!rv.notes.empty()) dj["notes"] = rv.notes;
    row["D"] = std::move(dj);
    if (!evidence.empty()) row["evidence"] = evidence;
    j["per_m"].push_back(std::move(row));
  }
  return j;
}

Json ring_dims_report(int max_k) {
  const auto dims = examples::graded_ring_dims(max_k);
  Json j;
  j["command"] = "ring-dims";
  j["dims"] = Json::array();
  for (std::size_t k = 0; k < dims.size(); ++k) j["dims"].push_back({{"k", k}, {"dim", dims[k]}});
  return j;
}

Json multinode3_report() {
  Json j;
  j["command"] = "example";
  j["example"] = "multinode3";
  j["curve"] = "rational curve with one 3-multi-node";
  j["arithmetic_genus"] = arithmetic_genus(examples::multinode3_curve(2).curve());
  j["table"] = Json::array();
  for (int deg = 2; deg <= 6; ++deg) {
    const Multinode3Row row = multinode3_table(deg);
    const CfhrResult cfhr = cfhr_check(examples::multinode3_curve(deg));
    j["table"].push_back({{"deg", deg},
                          {"h0", row.h0},
                          {"h1", row.h1},
                          {"bpf", row.bpf},
                          {"morphism", row.is_morphism},
                          {"birational", row.birational},
                          {"embedding", row.embedding},
                          {"criterion", std::string(to_string(cfhr.status))}});
  }
  return j;
}

namespace {

struct ExampleName {
  std::string base;
  std::optional<int> k;
};

ExampleName parse_example_name(const std::string& name, std::optional<int> k) {
  if (name == "descend" || name == "multinode3") return {name, std::nullopt};
  if (name == "largeK2") {
    if (!k) throw ValidationError("largeK2 needs --k");
    return {name, k};
  }
  if (name.rfind("largeK2(", 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(8, name.size() - 9);
    if (inner.empty() || !std::all_of(inner.begin(), inner.end(), ::isdigit) || inner.size() > 4) {
      throw ParseError("bad example parameter in \"" + name + "\"");
    }
    return {"largeK2", std::stoi(inner)};
  }
  throw UnknownExample("unknown example \"" + name + "\"; try descend, largeK2(k) or multinode3");
}

}  // namespace

document::SurfaceDocument example_document(const std::string& name, std::optional<int> k) {
  const ExampleName ex = parse_example_name(name, k);
  if (ex.base == "descend") return examples::descend();
  if (ex.base == "largeK2") return examples::large_k2(*ex.k);
  throw ValidationError("multinode3 is a curve, not a surface document");
}

Json example_report(const std::string& name, std::optional<int> k) {
  const ExampleName ex = parse_example_name(name, k);
  if (ex.base == "multinode3") return multinode3_report();
  const document::SurfaceDocument doc = example_document(name, k);
  Json j;
  j["command"] = "example";
  j["example"] = ex.k ? "largeK2(" + std::to_string(*ex.k) + ")" : ex.base;
  j["invariants"] = invariants_report(doc);
  j["invariants"].erase("command");
  if (ex.base == "descend") {
    j["ring"] = {{"presentation", "degree 10 hypersurface in P(1,1,2,5)"}, {"generators", "generators in degrees 1,1,2,5"}};
    j["ring"]["dims"] = ring_dims_report(12)["dims"];
    j["criteria"] = criteria_report(doc, 3, 5);
  } else {
    j["criteria"] = criteria_report(doc, 2, 4);
  }
  j["criteria"].erase("command");
  return j;
}

std::pair<long, long> parse_m_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), ::isdigit)) {
      throw ParseError("bad m range \"" + text + "\"; expected a..b");
    }
    return std::stol(s);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long m = number(text);
    return {m, m};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_scalar_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    std::size_t width = 0;
    for (const auto& [key, _] : j.items()) width = std::max(width, key.size());
    for (const auto& [key, value] : j.items()) {
      out << pad << key << ':';
      if (value.is_primitive() || (is_scalar_array(value) && !value.empty() && value.size() <= 8 &&
                                   std::all_of(value.begin(), value.end(), [](const Json& x) { return !x.is_string(); }))) {
        out << std::string(width - key.size() + 1, ' ');
        if (value.is_array()) {
          for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar_text(value[i]);
        } else {
          out << scalar_text(value);
        }
        out << '\n';
      } else if (value.empty()) {
        out << std::string(width - key.size() + 1, ' ') << (value.is_array() ? "none" : "-") << '\n';
      } else {
        out << '\n';
        render(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_primitive()) {
        out << pad << "- " << scalar_text(item) << '\n';
      } else {
        std::ostringstream inner;
        render(item, indent + 2, inner);
        std::string text = inner.str();
        text.replace(indent, 2, "- ");
        out << text;
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial stable log surfaces: invariants, cycles and pluricanonical bounds", "slcsurf"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string file;
  std::string mode = "semi";
  std::string m_range = "2..6";
  int max_k = 16;
  std::string example_name;
  std::optional<int> example_k;
  bool emit_json = false;

  auto* inv = app.add_subcommand("invariants", "K^2, chi and the non-normal locus of a surface document");
  inv->add_option("file", file, "Surface document")->required();
  auto* cyc = app.add_subcommand("cycle", "Semi-numerical, fundamental or hat cycle of a graph document");
  cyc->add_option("file", file, "Graph document")->required();
  cyc->add_option("--mode", mode, "Cycle kind")->check(CLI::IsMember({"semi", "fundamental", "hat"}));
  auto* cri = app.add_subcommand("criteria", "Threshold tables and verdicts for a surface document");
  cri->add_option("file", file, "Surface document")->required();
  cri->add_option("--m-range", m_range, "Range a..b of multiples m");
  auto* ring = app.add_subcommand("ring-dims", "Graded dimensions for the descended quartic example");
  ring->add_option("--max-k", max_k, "Largest degree (<= 64)");
  auto* ex = app.add_subcommand("example", "Run a built-in example: descend, largeK2(k), multinode3");
  ex->add_option("name", example_name, "Example name")->required();
  ex->add_option("--k", example_k, "Parameter for largeK2");
  ex->add_flag("--emit-json", emit_json, "Print the example as a surface document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  try {
    Json report;
    if (*inv) {
      report = invariants_report(document::parse_surface(document::read_file(file)));
    } else if (*cyc) {
      const CycleMode m = mode == "semi" ? CycleMode::Semi : mode == "fundamental" ? CycleMode::Fundamental : CycleMode::Hat;
      report = cycle_report(document::parse_graph(document::read_file(file)), m);
    } else if (*cri) {
      const auto [a, b] = parse_m_range(m_range);
      report = criteria_report(document::parse_surface(document::read_file(file)), a, b);
    } else if (*ring) {
      report = ring_dims_report(max_k);
    } else if (*ex) {
      if (emit_json) {
        out << document::to_json(example_document(example_name, example_k)).dump(2) << '\n';
        return kOk;
      }
      report = example_report(example_name, example_k);
    }
    out << (format == "json" ? report.dump(2) + "\n" : render_text(report));
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace slc::cli
