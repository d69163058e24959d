#include "xmg/io.hpp"

#include <optional>
#include <set>

namespace xmg {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column,
                       std::string pointer)
    : Error(line > 0 ? what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"
                     : what + " at " + (pointer.empty() ? std::string("/") : pointer)),
      line_(line),
      column_(column),
      pointer_(std::move(pointer)) {}

ValidationError::ValidationError(std::string object, const LawViolation& cause)
    : Error(object + ": " + cause.what()),
      object_(std::move(object)),
      law_(cause.law()),
      witness_(cause.witness()) {}

namespace {

[[noreturn]] void shape(const std::string& what, const std::string& pointer) {
  throw ParseError(what, 0, 0, pointer);
}

const Json& field(const Json& j, const char* key, const std::string& pointer) {
  if (!j.is_object()) shape("expected an object", pointer);
  auto it = j.find(key);
  if (it == j.end()) shape(std::string("missing key \"") + key + "\"", pointer);
  return *it;
}

std::size_t as_index(const Json& j, const std::string& pointer) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    shape("expected a non-negative integer", pointer);
  }
  return j.get<std::size_t>();
}

std::vector<std::size_t> as_indices(const Json& j, const std::string& pointer,
                                    std::optional<std::size_t> length = std::nullopt) {
  if (!j.is_array()) shape("expected an array", pointer);
  if (length && j.size() != *length) {
    shape("expected " + std::to_string(*length) + " entries, found " + std::to_string(j.size()),
          pointer);
  }
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_index(j[i], pointer + "/" + std::to_string(i)));
  return out;
}

const Json& as_array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) shape("expected an array", pointer);
  return j;
}

std::string as_name(const Json& j, const std::string& pointer) {
  const Json& n = field(j, "name", pointer);
  if (!n.is_string()) shape("expected a string", pointer + "/name");
  return n.get<std::string>();
}

void check_id(const Json& item, std::size_t index, const std::string& pointer) {
  if (as_index(field(item, "id", pointer), pointer + "/id") != index) {
    shape("ids must be dense and in order; expected " + std::to_string(index), pointer + "/id");
  }
}

template <class T>
const T* find_named(const std::vector<std::pair<std::string, T>>& v, std::string_view name) {
  for (const auto& [n, x] : v) {
    if (n == name) return &x;
  }
  return nullptr;
}

}  // namespace

const XMGraph* Workspace::find_graph(std::string_view name) const {
  return find_named(graphs, name);
}
const Hypergraph* Workspace::find_hypergraph(std::string_view name) const {
  return find_named(hypergraphs, name);
}
const PiGraph* Workspace::find_pigraph(std::string_view name) const {
  return find_named(pigraphs, name);
}

bool Workspace::operator==(const Workspace& o) const {
  if (static_cast<bool>(context) != static_cast<bool>(o.context)) return false;
  if (context && !same_context(context, o.context)) return false;
  return graphs == o.graphs && hypergraphs == o.hypergraphs && pigraphs == o.pigraphs;
}

ContextPtr context_from_json(const Json& j, const std::string& pointer) {
  const std::size_t nx = as_index(field(j, "X", pointer), pointer + "/X");
  const Json& m = field(j, "M", pointer);
  const std::size_t identity = as_index(field(m, "identity", pointer + "/M"), pointer + "/M/identity");
  const Json& table = as_array(field(m, "table", pointer + "/M"), pointer + "/M/table");
  const std::size_t nm = table.size();
  std::vector<std::vector<Elem>> rows;
  for (std::size_t i = 0; i < nm; ++i) {
    rows.push_back(as_indices(table[i], pointer + "/M/table/" + std::to_string(i), nm));
  }
  const Json& action = as_array(field(j, "action", pointer), pointer + "/action");
  if (action.size() != nx) {
    shape("expected " + std::to_string(nx) + " rows, found " + std::to_string(action.size()),
          pointer + "/action");
  }
  std::vector<std::vector<Point>> act;
  for (std::size_t x = 0; x < nx; ++x) {
    act.push_back(as_indices(action[x], pointer + "/action/" + std::to_string(x), nm));
  }
  try {
    FiniteMonoid monoid = build_monoid(rows, identity);
    RightMSet carrier = validate_mset(monoid, act);
    return make_context(std::move(monoid), std::move(carrier));
  } catch (const LawViolation& e) {
    throw ValidationError("context", e);
  }
}

XMGraph graph_from_json(const ContextPtr& ctx, const Json& j, const std::string& pointer) {
  const std::string name = as_name(j, pointer);
  const std::size_t nv = as_index(field(j, "vertices", pointer), pointer + "/vertices");
  const Json& arcs = as_array(field(j, "arcs", pointer), pointer + "/arcs");
  std::vector<VertexId> inc;
  std::vector<ArcId> act;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const std::string p = pointer + "/arcs/" + std::to_string(a);
    check_id(arcs[a], a, p);
    auto i = as_indices(field(arcs[a], "inc", p), p + "/inc", ctx->points());
    auto m = as_indices(field(arcs[a], "act", p), p + "/act", ctx->elements());
    inc.insert(inc.end(), i.begin(), i.end());
    act.insert(act.end(), m.begin(), m.end());
  }
  try {
    return validate_graph(ctx, nv, arcs.size(), std::move(inc), std::move(act));
  } catch (const LawViolation& e) {
    throw ValidationError("graph " + name, e);
  }
}

Hypergraph hypergraph_from_json(const Json& j, const std::string& pointer) {
  const std::string name = as_name(j, pointer);
  const std::size_t nv = as_index(field(j, "vertices", pointer), pointer + "/vertices");
  const Json& edges = as_array(field(j, "edges", pointer), pointer + "/edges");
  std::vector<VertexSet> phi;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string p = pointer + "/edges/" + std::to_string(e);
    check_id(edges[e], e, p);
    phi.push_back(as_indices(field(edges[e], "phi", p), p + "/phi"));
  }
  try {
    return make_hypergraph(nv, std::move(phi));
  } catch (const LawViolation& e) {
    throw ValidationError("hypergraph " + name, e);
  }
}

PiGraph pigraph_from_json(std::size_t arity, const Json& j, const std::string& pointer) {
  const std::string name = as_name(j, pointer);
  const std::size_t nv = as_index(field(j, "vertices", pointer), pointer + "/vertices");
  const Json& edges = as_array(field(j, "edges", pointer), pointer + "/edges");
  std::vector<Multiset> phi;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string p = pointer + "/edges/" + std::to_string(e);
    check_id(edges[e], e, p);
    phi.push_back(as_indices(field(edges[e], "phi", p), p + "/phi", arity));
  }
  try {
    return make_pigraph(arity, nv, std::move(phi));
  } catch (const LawViolation& e) {
    throw ValidationError("pigraph " + name, e);
  }
}

Workspace parse_workspace(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column, "");
  }
  if (!doc.is_object()) shape("expected an object", "");
  for (const auto& [key, value] : doc.items()) {
    if (key != "context" && key != "graphs" && key != "hypergraphs" && key != "pigraphs") {
      shape("unknown key \"" + key + "\"", "");
    }
  }
  Workspace ws;
  if (doc.contains("context")) ws.context = context_from_json(doc["context"]);
  std::set<std::string> names;
  auto claim = [&](const std::string& name, const std::string& pointer) {
    if (!names.insert(name).second) shape("duplicate name \"" + name + "\"", pointer + "/name");
  };
  if (doc.contains("graphs")) {
    const Json& gs = as_array(doc["graphs"], "/graphs");
    if (!gs.empty() && !ws.context) shape("graphs need a context", "/graphs");
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const std::string p = "/graphs/" + std::to_string(i);
      std::string name = as_name(gs[i], p);
      claim(name, p);
      ws.graphs.emplace_back(std::move(name), graph_from_json(ws.context, gs[i], p));
    }
  }
  if (doc.contains("hypergraphs")) {
    const Json& hs = as_array(doc["hypergraphs"], "/hypergraphs");
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const std::string p = "/hypergraphs/" + std::to_string(i);
      std::string name = as_name(hs[i], p);
      claim(name, p);
      ws.hypergraphs.emplace_back(std::move(name), hypergraph_from_json(hs[i], p));
    }
  }
  if (doc.contains("pigraphs")) {
    const Json& ps = as_array(doc["pigraphs"], "/pigraphs");
    if (!ps.empty() && !ws.context) shape("pigraphs need a context", "/pigraphs");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::string p = "/pigraphs/" + std::to_string(i);
      std::string name = as_name(ps[i], p);
      claim(name, p);
      ws.pigraphs.emplace_back(std::move(name), pigraph_from_json(ws.context->points(), ps[i], p));
    }
  }
  return ws;
}

Json context_to_json(const Context& ctx) {
  return Json{{"X", ctx.points()},
              {"M", {{"identity", ctx.identity()}, {"table", ctx.monoid.table()}}},
              {"action", ctx.carrier.table()}};
}

Json graph_to_json(const XMGraph& g) {
  Json arcs = Json::array();
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    auto b = g.boundary(a);
    auto o = g.orbit_row(a);
    arcs.push_back({{"id", a},
                    {"inc", std::vector<VertexId>(b.begin(), b.end())},
                    {"act", std::vector<ArcId>(o.begin(), o.end())}});
  }
  return Json{{"vertices", g.num_vertices()}, {"arcs", std::move(arcs)}};
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (EdgeId e = 0; e < h.num_edges(); ++e) edges.push_back({{"id", e}, {"phi", h.phi(e)}});
  return Json{{"vertices", h.num_vertices()}, {"edges", std::move(edges)}};
}

Json pigraph_to_json(const PiGraph& p) {
  Json edges = Json::array();
  for (EdgeId e = 0; e < p.num_edges(); ++e) edges.push_back({{"id", e}, {"phi", p.phi(e)}});
  return Json{{"vertices", p.num_vertices()}, {"edges", std::move(edges)}};
}

Json morphism_to_json(std::span<const std::size_t> vmap, std::span<const std::size_t> amap,
                      const char* second_key) {
  return Json{{"vertices", std::vector<std::size_t>(vmap.begin(), vmap.end())},
              {second_key, std::vector<std::size_t>(amap.begin(), amap.end())}};
}

std::string serialize_workspace(const Workspace& ws) {
  Json doc = Json::object();
  if (ws.context) doc["context"] = context_to_json(*ws.context);
  auto named = [](const std::string& name, Json body) {
    body["name"] = name;
    return body;
  };
  doc["graphs"] = Json::array();
  for (const auto& [n, g] : ws.graphs) doc["graphs"].push_back(named(n, graph_to_json(g)));
  doc["hypergraphs"] = Json::array();
  for (const auto& [n, h] : ws.hypergraphs) {
    doc["hypergraphs"].push_back(named(n, hypergraph_to_json(h)));
  }
  doc["pigraphs"] = Json::array();
  for (const auto& [n, p] : ws.pigraphs) doc["pigraphs"].push_back(named(n, pigraph_to_json(p)));
  return doc.dump(2) + "\n";
}

}  // namespace xmg
