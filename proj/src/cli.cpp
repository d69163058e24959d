#include "xmg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "xmg/adjunction.hpp"
#include "xmg/hom.hpp"
#include "xmg/hullcover.hpp"
#include "xmg/hypergraph.hpp"
#include "xmg/io.hpp"
#include "xmg/pigraph.hpp"

namespace xmg {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// A check ran and said no; the report already holds the witness.
struct CheckFailed {
  Json report;
  std::string status;
};

struct Options {
  std::string context;
  std::vector<std::string> graphs;
  std::string target = "graph";
  std::optional<std::size_t> k;
  std::string out;
  std::string format = "json";
};

constexpr std::size_t kListLimit = 1000;

std::size_t parse_count(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError("bad " + what + ": " + s);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt) {
    if (opt.context.empty()) return;
    const std::string& c = opt.context;
    auto suffix = [&](const std::string& prefix) -> std::optional<std::size_t> {
      if (c.rfind(prefix, 0) != 0) return std::nullopt;
      return parse_count(c.substr(prefix.size()), "context size");
    };
    if (c == "quiver") {
      ctx_ = trivial_context(2);
    } else if (c == "symmetric") {
      ctx_ = aut_context(2);
    } else if (auto n = suffix("trivial:")) {
      ctx_ = trivial_context(*n);
    } else if (auto n = suffix("aut:")) {
      ctx_ = aut_context(*n);
    } else if (auto n = suffix("idempotent:")) {
      ctx_ = idempotent_context(*n);
    } else {
      ws_ = parse_workspace(read_file(c));
      ctx_ = ws_.context;
    }
  }

  const ContextPtr& context() const {
    if (!ctx_) throw UsageError("this command needs --context");
    return ctx_;
  }
  const Workspace& workspace() const { return ws_; }

  const std::string& graph_name(std::size_t i) const {
    if (i >= opt_.graphs.size()) {
      throw UsageError("this command needs " + std::to_string(i + 1) + " --graph option(s)");
    }
    return opt_.graphs[i];
  }

  XMGraph graph(std::size_t i = 0) const {
    const std::string& name = graph_name(i);
    if (name == "initial") return initial_graph(context());
    if (name == "terminal") return terminal_graph(context());
    if (name == "V") return representable(context(), Sort::Vertex);
    if (name == "A") return representable(context(), Sort::Arc);
    if (const XMGraph* g = ws_.find_graph(name)) return *g;
    throw UsageError("no graph named " + name);
  }

  Hypergraph hypergraph(std::size_t i = 0) const {
    const std::string& name = graph_name(i);
    if (name == "point") return hyper_point();
    if (name.rfind("E:", 0) == 0) return hyper_e(parse_count(name.substr(2), "edge size"));
    if (const Hypergraph* h = ws_.find_hypergraph(name)) return *h;
    throw UsageError("no hypergraph named " + name);
  }

  PiGraph pigraph(std::size_t i = 0) const {
    const std::string& name = graph_name(i);
    if (const PiGraph* p = ws_.find_pigraph(name)) return *p;
    throw UsageError("no pigraph named " + name);
  }

  // The (X, Aut(X)) context nerves land in.
  ContextPtr aut() const { return aut_context(context()->points()); }

  const Options& options() const { return opt_; }

 private:
  const Options& opt_;
  ContextPtr ctx_;
  Workspace ws_;
};

Json morphism_json(const GraphMorphism& f) { return morphism_to_json(f.vmap, f.amap); }

Json element_json(Element z) {
  return {{"sort", z.sort == Sort::Vertex ? "vertex" : "arc"}, {"id", z.id}};
}

Json cmd_validate(const Session& s) {
  const Workspace& ws = s.workspace();
  Json r;
  if (ws.context) r["context"] = {{"X", ws.context->points()}, {"M", ws.context->elements()}};
  r["graphs"] = Json::array();
  for (const auto& [n, g] : ws.graphs) {
    r["graphs"].push_back({{"name", n}, {"vertices", g.num_vertices()}, {"arcs", g.num_arcs()}});
  }
  r["hypergraphs"] = Json::array();
  for (const auto& [n, h] : ws.hypergraphs) {
    r["hypergraphs"].push_back({{"name", n}, {"vertices", h.num_vertices()}, {"edges", h.num_edges()}});
  }
  r["pigraphs"] = Json::array();
  for (const auto& [n, p] : ws.pigraphs) {
    r["pigraphs"].push_back({{"name", n}, {"vertices", p.num_vertices()}, {"edges", p.num_edges()}});
  }
  return r;
}

Json cmd_hom(const Session& s) {
  const XMGraph g = s.graph(0);
  const XMGraph h = s.graph(1);
  auto homs = hom_enumerate(g, h);
  Json list = Json::array();
  for (std::size_t i = 0; i < homs.size() && i < kListLimit; ++i) list.push_back(morphism_json(homs[i]));
  return {{"count", homs.size()}, {"morphisms", std::move(list)},
          {"truncated", homs.size() > kListLimit}};
}

Json cmd_refine(const Session& s, bool proj) {
  const XMGraph g = s.graph();
  Refinement r = proj ? proj_refinement(g) : inj_refinement(g);
  return {{"object", graph_to_json(r.object)}, {proj ? "counit" : "unit", morphism_json(r.map)}};
}

Json cmd_hull(const Session& s) {
  const XMGraph g = s.graph();
  HullResult h = injective_hull(g);
  return {{"hull", graph_to_json(h.hull)},
          {"embedding", morphism_json(h.embedding)},
          {"added_arcs", h.added_arcs}};
}

Json cmd_cover(const Session& s) {
  CoverResult c = projective_cover(s.graph());
  return {{"cover", graph_to_json(c.cover)},
          {"projection", morphism_json(c.projection)},
          {"isolated", c.isolated},
          {"generators", c.generators}};
}

Json verdict(Json r, bool ok, const std::string& what) {
  r["holds"] = ok;
  if (!ok) throw CheckFailed{std::move(r), what + " fails"};
  return r;
}

Json cmd_check_injective(const Session& s) {
  const std::string& t = s.options().target;
  if (t == "hyper") {
    HyperInjectivity q = hyper_injectivity(s.hypergraph());
    Json r = {{"property", "injective"}, {"target", "hyper"}};
    if (q.unrealized) r["witness"] = {{"unrealized_subset", *q.unrealized}};
    return verdict(std::move(r), q.injective, "injectivity");
  }
  if (t == "pi") {
    PiDeciders d = pi_deciders(s.aut(), s.pigraph());
    return verdict({{"property", "injective"}, {"target", "pi"}}, d.injective, "injectivity");
  }
  InjectivityCertificate c = injectivity_certificate(s.graph());
  Json r = {{"property", "injective"}, {"target", "graph"}};
  if (c.unrealized) r["witness"] = {{"unrealized_map", *c.unrealized}};
  if (c.injective) r["realizers"] = c.realizer;
  return verdict(std::move(r), c.injective, "injectivity");
}

Json cmd_check_projective(const Session& s) {
  const std::string& t = s.options().target;
  if (t == "hyper") {
    const std::optional<std::size_t> k = s.options().k;
    Json r = {{"property", "projective"}, {"target", "hyper"}};
    if (k) r["k"] = *k;
    return verdict(std::move(r), hyper_is_projective(s.hypergraph(), k), "projectivity");
  }
  if (t == "pi") {
    PiDeciders d = pi_deciders(s.aut(), s.pigraph());
    return verdict({{"property", "projective"}, {"target", "pi"}}, d.projective, "projectivity");
  }
  auto d = decompose_projective(s.graph());
  Json r = {{"property", "projective"}, {"target", "graph"}};
  if (d) r["decomposition"] = {{"isolated", d->isolated}, {"generators", d->generators}};
  return verdict(std::move(r), d.has_value(), "projectivity");
}

Json cmd_check_essential_mono(const Session& s) {
  HullResult h = injective_hull(s.graph());
  EssentialMonoResult e = is_essential_mono(h.embedding);
  Json r = {{"property", "essential-mono"}, {"morphism", "hull embedding"}};
  if (e.witness) r["witness"] = {element_json(e.witness->first), element_json(e.witness->second)};
  return verdict(std::move(r), e.essential, "essentiality of the hull embedding");
}

Json cmd_check_essential_epi(const Session& s) {
  CoverResult c = projective_cover(s.graph());
  EssentialEpiResult e = is_essential_epi(c.projection);
  Json r = {{"property", "essential-epi"}, {"morphism", "cover projection"}};
  if (e.witness) r["witness"] = element_json(*e.witness);
  return verdict(std::move(r), e.essential, "essentiality of the cover projection");
}

Json cmd_check_triangles(const Session& s) {
  const XMGraph g = s.graph();
  std::vector<GraphMorphism> morphisms;
  if (s.options().graphs.size() > 1) {
    for (std::size_t i = 1; i < s.options().graphs.size(); ++i) {
      auto homs = hom_enumerate(g, s.graph(i));
      for (std::size_t j = 0; j < homs.size() && j < kListLimit; ++j) morphisms.push_back(homs[j]);
    }
  } else {
    auto homs = hom_enumerate(g, g);
    for (std::size_t j = 0; j < homs.size() && j < kListLimit; ++j) morphisms.push_back(homs[j]);
  }
  TriangleReport t = check_triangles(g, morphisms);
  Json r = {{"property", "triangles"},
            {"identities_checked", t.identities_checked},
            {"squares_checked", t.squares_checked},
            {"morphisms", morphisms.size()},
            {"sampled", t.sampled},
            {"failures", t.failures}};
  return verdict(std::move(r), t.ok(), "an adjunction law");
}

Json cmd_nerve(const Session& s) {
  const std::string& t = s.options().target;
  if (t == "pi") {
    PiNerve n = nerve_pi(s.aut(), s.pigraph());
    return {{"nerve", graph_to_json(n.graph)}, {"edge_of_arc", n.edge_of_arc}};
  }
  if (t != "hyper") throw UsageError("nerve needs --target hyper or --target pi");
  HyperNerve n = nerve_hyper(s.aut(), s.hypergraph());
  return {{"nerve", graph_to_json(n.graph)}, {"edge_of_arc", n.edge_of_arc}};
}

Json cmd_realize(const Session& s) {
  const std::string& t = s.options().target;
  if (t == "pi") {
    PiRealization r = realize_pi(s.graph());
    return {{"pigraph", pigraph_to_json(r.pi)}, {"edge_of_arc", r.edge_of_arc}};
  }
  if (t != "hyper") throw UsageError("realize needs --target hyper or --target pi");
  HyperRealization r = realize_hyper(s.graph());
  return {{"hypergraph", hypergraph_to_json(r.hyper)}, {"edge_of_arc", r.edge_of_arc}};
}

Json cmd_coreflect(const Session& s) {
  if (!s.options().k) throw UsageError("coreflect needs --k");
  Coreflection c = coreflect_k(s.hypergraph(), *s.options().k);
  return {{"k", *s.options().k},
          {"core", hypergraph_to_json(c.core)},
          {"inclusion", morphism_to_json(c.inclusion.vmap, c.inclusion.emap, "edges")}};
}

// Golden fixtures: each entry compares an expected value with a computed one.
Json cmd_examples() {
  Json checks = Json::array();
  bool all = true;
  auto expect = [&](const std::string& name, const Json& expected, const Json& actual) {
    const bool ok = expected == actual;
    all = all && ok;
    checks.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"ok", ok}});
  };

  const ContextPtr s3 = aut_context(3);
  const Hypergraph pair = make_hypergraph(2, {{0, 1}});
  HyperNerve n = nerve_hyper(s3, pair);
  HyperRealization r = realize_hyper(n.graph);
  HypergraphMorphism eps = counit_hyper(s3, pair);
  std::vector<std::vector<VertexId>> arcs;
  for (ArcId a = 0; a < n.graph.num_arcs(); ++a) {
    auto b = n.graph.boundary(a);
    arcs.emplace_back(b.begin(), b.end());
  }
  expect("hyper |X|=3, one edge on 2 vertices: nerve arcs", 6, n.graph.num_arcs());
  expect("hyper |X|=3, one edge on 2 vertices: nerve arc incidences",
         Json({{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}}), arcs);
  expect("hyper |X|=3, one edge on 2 vertices: realized edges", 2, r.hyper.num_edges());
  expect("hyper |X|=3, one edge on 2 vertices: counit on edges", Json({0, 0}), eps.emap);
  expect("hyper |X|=3, one edge on 2 vertices: counit epi", true, hyper_is_epi(eps));

  const Hypergraph big = make_hypergraph(4, {{0, 1, 2, 3}});
  HypergraphMorphism eps_big = counit_hyper(s3, big);
  expect("hyper |X|=3, one edge on 4 vertices: nerve arcs", 0, nerve_hyper(s3, big).graph.num_arcs());
  expect("hyper |X|=3, one edge on 4 vertices: counit epi", false, hyper_is_epi(eps_big));

  for (const auto& [name, ctx] : {std::pair{"quiver", trivial_context(2)},
                                  std::pair{"symmetric", aut_context(2)}}) {
    const XMGraph v = representable(ctx, Sort::Vertex);
    const XMGraph a = representable(ctx, Sort::Arc);
    expect(std::string(name) + ": V counts", Json({1, 0}), Json({v.num_vertices(), v.num_arcs()}));
    expect(std::string(name) + ": A counts", Json({ctx->points(), ctx->elements()}),
           Json({a.num_vertices(), a.num_arcs()}));
    expect(std::string(name) + ": triangles on A", true, check_triangles(a).ok());
  }
  const XMGraph sym_a = representable(aut_context(2), Sort::Arc);
  expect("symmetric: A tables",
         Json::parse(R"([{"id":0,"inc":[0,1],"act":[0,1]},{"id":1,"inc":[1,0],"act":[1,0]}])"),
         graph_to_json(sym_a)["arcs"]);

  for (const auto& [name, ctx] : {std::pair{"quiver", trivial_context(2)},
                                  std::pair{"symmetric", aut_context(2)},
                                  std::pair{"idempotent:2", idempotent_context(2)}}) {
    HullResult h = injective_hull(initial_graph(ctx));
    expect(std::string(name) + ": hull of the initial graph is terminal", true,
           h.hull == terminal_graph(ctx));
  }

  expect("E_2 projective", false, hyper_is_projective(hyper_e(2)));
  expect("E_2 projective among 2-bounded", true, hyper_is_projective(hyper_e(2), 2));

  const ContextPtr s2 = aut_context(2);
  PiNerve loop = nerve_pi(s2, make_pigraph(2, 1, {{0, 0}}));
  expect("pi loop {0,0}: nerve arcs", 1, loop.graph.num_arcs());
  expect("pi loop {0,0}: projective", false, pi_deciders(s2, make_pigraph(2, 1, {{0, 0}})).projective);
  expect("pi edge {0,1}: nerve arcs", 2, nerve_pi(s2, make_pigraph(2, 2, {{0, 1}})).graph.num_arcs());

  Json report = {{"checks", std::move(checks)}};
  if (!all) throw CheckFailed{report, "a golden fixture does not match"};
  return report;
}

void emit(const Json& report, const Options& opt, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + opt.out);
  f << text;
}

void status(std::ostream& err, int code, const std::string& message) {
  const char* env = std::getenv("XMG_COLOR");
  const bool color = env && std::string(env) == "1";
  const char* tag = code == kExitOk ? "ok" : code == kExitCheckFailed ? "check failed" : "error";
  const char* paint = code == kExitOk ? "\033[32m" : code == kExitCheckFailed ? "\033[33m" : "\033[31m";
  if (color) err << paint;
  err << tag;
  if (color) err << "\033[0m";
  if (!message.empty()) err << ": " << message;
  err << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Finite (X,M)-graphs: refinements, hulls, covers, and hypergraph bridges", "xmg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--context", opt.context,
                 "workspace file, or quiver | symmetric | trivial:N | aut:N | idempotent:N");
  app.add_option("--graph", opt.graphs, "graph name (repeatable); builtins initial terminal V A, "
                                        "point and E:k for hypergraphs");
  app.add_option("--target", opt.target, "graph | hyper | pi")
      ->check(CLI::IsMember({"graph", "hyper", "pi"}));
  app.add_option("--k", opt.k, "edge-size bound");
  app.add_option("--out", opt.out, "write the report here instead of stdout");
  app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json"}));

  std::string command;
  auto sub = [&](const char* name, const char* help) {
    return app.add_subcommand(name, help)->callback([&command, name] {
      if (command.empty()) command = name;
    });
  };
  sub("validate", "load a workspace and check every law");
  sub("hom", "enumerate morphisms from the first --graph to the second");
  sub("refine-proj", "Proj(G) with its counit");
  sub("refine-inj", "Inj(G) with its unit");
  sub("hull", "injective hull");
  sub("cover", "projective cover");
  CLI::App* check = app.add_subcommand("check", "run a decider");
  check->require_subcommand(1);
  for (const char* name : {"injective", "projective", "essential-mono", "essential-epi", "triangles"}) {
    check->add_subcommand(name)->callback([&command, name] { command = std::string("check ") + name; });
  }
  sub("nerve", "nerve of a hypergraph or Pi-graph");
  sub("realize", "realization of an (X, Aut(X))-graph");
  sub("coreflect", "k-bounded coreflection of a hypergraph");
  sub("examples", "check the built-in golden fixtures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    status(err, kExitUsage, e.what());
    return kExitUsage;
  }

  Json report = {{"command", command}};
  int code = kExitOk;
  std::string message;
  try {
    Session s(opt);
    Json body;
    if (command == "validate") body = cmd_validate(s);
    else if (command == "hom") body = cmd_hom(s);
    else if (command == "refine-proj") body = cmd_refine(s, true);
    else if (command == "refine-inj") body = cmd_refine(s, false);
    else if (command == "hull") body = cmd_hull(s);
    else if (command == "cover") body = cmd_cover(s);
    else if (command == "check injective") body = cmd_check_injective(s);
    else if (command == "check projective") body = cmd_check_projective(s);
    else if (command == "check essential-mono") body = cmd_check_essential_mono(s);
    else if (command == "check essential-epi") body = cmd_check_essential_epi(s);
    else if (command == "check triangles") body = cmd_check_triangles(s);
    else if (command == "nerve") body = cmd_nerve(s);
    else if (command == "realize") body = cmd_realize(s);
    else if (command == "coreflect") body = cmd_coreflect(s);
    else if (command == "examples") body = cmd_examples();
    report.update(body);
    report["ok"] = true;
  } catch (CheckFailed& f) {
    report.update(f.report);
    report["ok"] = false;
    code = kExitCheckFailed;
    message = f.status;
  } catch (const ValidationError& e) {
    report["ok"] = false;
    report["error"] = {{"object", e.object()},
                       {"law", std::string(law_name(e.law()))},
                       {"witness", e.witness()}};
    code = kExitCheckFailed;
    message = e.what();
  } catch (const LawViolation& e) {
    report["ok"] = false;
    report["error"] = {{"law", std::string(law_name(e.law()))}, {"witness", e.witness()}};
    code = kExitCheckFailed;
    message = e.what();
  } catch (const HullSectionNotFound& e) {
    report["ok"] = false;
    report["error"] = {{"reason", "no equivariant section"}, {"witness", e.obstruction()}};
    code = kExitCheckFailed;
    message = e.what();
  } catch (const ParseError& e) {
    report["ok"] = false;
    report["error"] = {{"reason", e.what()}, {"line", e.line()}, {"column", e.column()},
                       {"pointer", e.pointer()}};
    code = kExitUsage;
    message = e.what();
  } catch (const std::exception& e) {
    report["ok"] = false;
    report["error"] = {{"reason", e.what()}};
    code = kExitUsage;
    message = e.what();
  }
  try {
    emit(report, opt, out);
  } catch (const std::exception& e) {
    status(err, kExitUsage, e.what());
    return kExitUsage;
  }
  status(err, code, message);
  return code;
}

}  // namespace xmg
