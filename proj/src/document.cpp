#include "slc/document.hpp"

#include <fstream>
#include <set>

#include "slc/errors.hpp"

namespace slc::document {

namespace {

void allow_keys(const Json& j, std::initializer_list<std::string_view> keys, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ParseError(where + ": unknown key \"" + key + "\"");
    }
  }
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing key \"" + key + "\"");
  return *it;
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

long get_int(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (is_integral(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  }
  throw ParseError(where + ": expected an integer");
}

Rational get_rational(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(where + ": expected a rational string \"p/q\"");
}

std::vector<std::string> get_strings(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(get_string(x, where));
  return out;
}

std::map<std::string, std::string> get_string_map(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = get_string(v, where + "." + k);
  return out;
}

std::optional<bool> get_flag(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_boolean()) throw ParseError(where + "." + key + ": expected true, false or null");
  return it->get<bool>();
}

Json rational(const Rational& r) { return to_string(r); }

Json divisor_json(const QDivisor& d) {
  Json out = Json::object();
  for (const auto& [id, c] : d.terms()) out[id] = rational(c);
  return out;
}

QDivisor parse_divisor(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object of coefficients");
  QDivisor d;
  for (const auto& [k, v] : j.items()) d.add(k, get_rational(v, where + "." + k));
  return d;
}

ExceptionalGraph parse_graph_only(const Json& j, const std::string& where,
                                  std::initializer_list<std::string_view> extra_keys = {}) {
  std::vector<std::string_view> keys{"vertices", "edges", "marks", "edge_labels"};
  keys.insert(keys.end(), extra_keys.begin(), extra_keys.end());
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ParseError(where + ": unknown key \"" + key + "\"");
    }
  }
  std::vector<GraphVertex> vertices;
  const Json& vs = need(j, "vertices", where);
  if (!vs.is_array()) throw ParseError(where + ".vertices: expected an array");
  for (const auto& v : vs) {
    const std::string w = where + ".vertices";
    allow_keys(v, {"id", "self_intersection", "genus"}, w);
    GraphVertex gv;
    gv.id = get_string(need(v, "id", w), w + ".id");
    gv.self_intersection = static_cast<int>(get_int(need(v, "self_intersection", w), w + ".self_intersection"));
    if (v.contains("genus")) gv.genus = static_cast<int>(get_int(v["genus"], w + ".genus"));
    vertices.push_back(std::move(gv));
  }
  std::vector<GraphEdge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError(where + ".edges: expected an array");
    for (const auto& e : j["edges"]) {
      const std::string w = where + ".edges";
      allow_keys(e, {"a", "b", "multiplicity"}, w);
      GraphEdge ge;
      ge.a = get_string(need(e, "a", w), w + ".a");
      ge.b = get_string(need(e, "b", w), w + ".b");
      if (e.contains("multiplicity")) ge.multiplicity = static_cast<int>(get_int(e["multiplicity"], w + ".multiplicity"));
      edges.push_back(std::move(ge));
    }
  }
  std::map<std::string, int> marks;
  if (j.contains("marks")) {
    if (!j["marks"].is_object()) throw ParseError(where + ".marks: expected an object");
    for (const auto& [k, v] : j["marks"].items()) marks[k] = static_cast<int>(get_int(v, where + ".marks." + k));
  }
  std::map<std::string, Rational> labels;
  if (j.contains("edge_labels")) {
    if (!j["edge_labels"].is_object()) throw ParseError(where + ".edge_labels: expected an object");
    for (const auto& [k, v] : j["edge_labels"].items()) labels[k] = get_rational(v, where + ".edge_labels." + k);
  }
  return ExceptionalGraph(std::move(vertices), edges, marks, std::move(labels));
}

}  // namespace

Json to_json(const ExceptionalGraph& g) {
  Json out;
  out["vertices"] = Json::array();
  for (const auto& v : g.vertices()) {
    out["vertices"].push_back({{"id", v.id}, {"self_intersection", v.self_intersection}, {"genus", v.genus}});
  }
  out["edges"] = Json::array();
  for (const auto& e : g.edges()) out["edges"].push_back({{"a", e.a}, {"b", e.b}, {"multiplicity", e.multiplicity}});
  out["marks"] = Json::object();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.marks(i) > 0) out["marks"][g.vertex(i).id] = g.marks(i);
  }
  out["edge_labels"] = Json::object();
  for (const auto& [id, label] : g.edge_labels()) out["edge_labels"][id] = rational(label);
  return out;
}

GraphDocument parse_graph(const Json& j) {
  GraphDocument doc;
  doc.graph = parse_graph_only(j, "graph", {"incidence"});
  if (j.contains("incidence")) {
    if (!j["incidence"].is_object()) throw ParseError("graph.incidence: expected an object");
    for (const auto& [k, v] : j["incidence"].items()) doc.incidence[k] = get_int(v, "graph.incidence." + k);
  }
  return doc;
}

Json to_json(const GraphDocument& doc) {
  Json out = to_json(doc.graph);
  out["incidence"] = Json::object();
  for (const auto& [k, v] : doc.incidence) out["incidence"][k] = v;
  return out;
}

SurfaceDocument parse_surface(const Json& j) {
  allow_keys(j, {"index", "components", "gluing", "hypotheses"}, "document");
  SurfaceDocument doc;
  StableLogSurface& s = doc.surface;
  s.global_index = get_int(need(j, "index", "document"), "index");

  const Json& comps = need(j, "components", "document");
  if (!comps.is_array()) throw ParseError("components: expected an array");
  for (const auto& c : comps) {
    const std::string w = "components";
    allow_keys(c, {"id", "classes", "form", "canonical", "conductor", "boundary", "singular_points", "chi"}, w);
    NormalComponent nc;
    nc.id = get_string(need(c, "id", w), w + ".id");
    const std::string wc = "component " + nc.id;
    nc.classes = get_strings(need(c, "classes", wc), wc + ".classes");
    const Json& form = need(c, "form", wc);
    if (!form.is_array() || form.size() != nc.classes.size()) {
      throw ParseError(wc + ".form: expected a square array matching the classes");
    }
    nc.form = RationalMatrix(nc.classes.size());
    for (std::size_t r = 0; r < form.size(); ++r) {
      if (!form[r].is_array() || form[r].size() != nc.classes.size()) {
        throw ParseError(wc + ".form: expected a square array matching the classes");
      }
      for (std::size_t col = 0; col < form[r].size(); ++col) nc.form(r, col) = get_rational(form[r][col], wc + ".form");
    }
    nc.canonical = parse_divisor(need(c, "canonical", wc), wc + ".canonical");
    for (const auto& [name, _] : nc.canonical.terms()) {
      if (!nc.class_index(name)) throw ParseError(wc + ".canonical: undeclared class \"" + name + "\"");
    }
    if (c.contains("conductor")) nc.conductor = get_strings(c["conductor"], wc + ".conductor");
    if (c.contains("boundary")) nc.boundary = get_strings(c["boundary"], wc + ".boundary");
    if (c.contains("chi")) nc.chi = get_int(c["chi"], wc + ".chi");
    if (c.contains("singular_points")) {
      if (!c["singular_points"].is_array()) throw ParseError(wc + ".singular_points: expected an array");
      for (const auto& sp : c["singular_points"]) {
        allow_keys(sp, {"location", "graph"}, wc + ".singular_points");
        SingularPoint p;
        p.location = get_string(need(sp, "location", wc), wc + ".singular_points.location");
        p.graph = parse_graph_only(need(sp, "graph", wc), wc + ".singular_points." + p.location);
        nc.singular_points.push_back(std::move(p));
      }
    }
    s.components.push_back(std::move(nc));
  }

  if (j.contains("gluing")) {
    const Json& g = j["gluing"];
    allow_keys(g, {"branches", "pairing", "points", "point_map"}, "gluing");
    if (g.contains("branches")) {
      if (!g["branches"].is_array()) throw ParseError("gluing.branches: expected an array");
      for (const auto& b : g["branches"]) {
        const std::string w = "gluing.branches";
        allow_keys(b, {"id", "component", "class", "genus", "fixed_points"}, w);
        ConductorBranch cb;
        cb.id = get_string(need(b, "id", w), w + ".id");
        cb.component = get_string(need(b, "component", w), w + ".component");
        cb.conductor_class = get_string(need(b, "class", w), w + ".class");
        if (b.contains("genus")) cb.genus = static_cast<int>(get_int(b["genus"], w + ".genus"));
        if (b.contains("fixed_points")) cb.fixed_points = static_cast<int>(get_int(b["fixed_points"], w + ".fixed_points"));
        s.gluing.branches.push_back(std::move(cb));
      }
    }
    if (g.contains("pairing")) s.gluing.branch_pairing = get_string_map(g["pairing"], "gluing.pairing");
    if (g.contains("points")) {
      if (!g["points"].is_array()) throw ParseError("gluing.points: expected an array");
      for (const auto& p : g["points"]) {
        const std::string w = "gluing.points";
        allow_keys(p, {"id", "branch", "different", "node_partner", "boundary_branches"}, w);
        MarkedPoint mp;
        mp.id = get_string(need(p, "id", w), w + ".id");
        mp.branch = get_string(need(p, "branch", w), w + ".branch");
        if (p.contains("different")) mp.different = get_rational(p["different"], w + ".different");
        if (p.contains("node_partner") && !p["node_partner"].is_null()) {
          mp.node_partner = get_string(p["node_partner"], w + ".node_partner");
        }
        if (p.contains("boundary_branches")) {
          mp.boundary_branches = static_cast<int>(get_int(p["boundary_branches"], w + ".boundary_branches"));
        }
        s.gluing.points.push_back(std::move(mp));
      }
    }
    if (g.contains("point_map")) s.gluing.point_map = get_string_map(g["point_map"], "gluing.point_map");
  }

  if (j.contains("hypotheses")) {
    const Json& h = j["hypotheses"];
    allow_keys(h, {"nodal", "normal", "conductor_smooth", "canonical_off_conductor", "semi_canonical"}, "hypotheses");
    doc.hypotheses.nodal = get_flag(h, "nodal", "hypotheses");
    doc.hypotheses.normal = get_flag(h, "normal", "hypotheses");
    doc.hypotheses.conductor_smooth = get_flag(h, "conductor_smooth", "hypotheses");
    doc.hypotheses.canonical_off_conductor = get_flag(h, "canonical_off_conductor", "hypotheses");
    doc.hypotheses.semi_canonical = get_flag(h, "semi_canonical", "hypotheses");
  }
  return doc;
}

Json to_json(const SurfaceDocument& doc) {
  const StableLogSurface& s = doc.surface;
  Json out;
  out["index"] = s.global_index;
  out["components"] = Json::array();
  for (const auto& c : s.components) {
    Json jc;
    jc["id"] = c.id;
    jc["classes"] = c.classes;
    jc["form"] = Json::array();
    for (std::size_t r = 0; r < c.form.size(); ++r) {
      Json row = Json::array();
      for (std::size_t col = 0; col < c.form.size(); ++col) row.push_back(rational(c.form(r, col)));
      jc["form"].push_back(std::move(row));
    }
    jc["canonical"] = divisor_json(c.canonical);
    jc["conductor"] = c.conductor;
    jc["boundary"] = c.boundary;
    jc["chi"] = c.chi;
    jc["singular_points"] = Json::array();
    for (const auto& sp : c.singular_points) {
      jc["singular_points"].push_back({{"location", sp.location}, {"graph", to_json(sp.graph)}});
    }
    out["components"].push_back(std::move(jc));
  }
  Json g;
  g["branches"] = Json::array();
  for (const auto& b : s.gluing.branches) {
    g["branches"].push_back({{"id", b.id},
                             {"component", b.component},
                             {"class", b.conductor_class},
                             {"genus", b.genus},
                             {"fixed_points", b.fixed_points}});
  }
  g["pairing"] = Json::object();
  for (const auto& [a, b] : s.gluing.branch_pairing) g["pairing"][a] = b;
  g["points"] = Json::array();
  for (const auto& p : s.gluing.points) {
    Json jp{{"id", p.id}, {"branch", p.branch}, {"different", rational(p.different)}};
    if (p.node_partner) jp["node_partner"] = *p.node_partner;
    jp["boundary_branches"] = p.boundary_branches;
    g["points"].push_back(std::move(jp));
  }
  g["point_map"] = Json::object();
  for (const auto& [a, b] : s.gluing.point_map) g["point_map"][a] = b;
  out["gluing"] = std::move(g);

  Json h = Json::object();
  auto put = [&](const char* key, const std::optional<bool>& flag) {
    if (flag) h[key] = *flag;
  };
  put("nodal", doc.hypotheses.nodal);
  put("normal", doc.hypotheses.normal);
  put("conductor_smooth", doc.hypotheses.conductor_smooth);
  put("canonical_off_conductor", doc.hypotheses.canonical_off_conductor);
  put("semi_canonical", doc.hypotheses.semi_canonical);
  out["hypotheses"] = std::move(h);
  return out;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("\"" + path + "\": " + e.what());
  }
}

Hypotheses derive_hypotheses(const SurfaceDocument& doc) {
  const StableLogSurface& s = doc.surface;
  Hypotheses h;
  h.index = s.global_index;
  h.component_squares = component_squares(s);
  for (const Rational& q : h.component_squares) h.kdelta_squared += q;
  h.nodal = doc.hypotheses.nodal;
  h.conductor_smooth = doc.hypotheses.conductor_smooth;
  h.canonical_off_conductor = doc.hypotheses.canonical_off_conductor;
  h.semi_canonical = doc.hypotheses.semi_canonical;
  const bool normal = s.gluing.branches.empty();
  if (doc.hypotheses.normal && *doc.hypotheses.normal != normal) {
    throw ValidationError(std::string("hypotheses declare normal = ") + (normal ? "false" : "true") +
                          " but the conductor is " + (normal ? "empty" : "non-empty"));
  }
  h.normal = normal;
  return closure(h);
}

}  // namespace slc::document
