#pragma once

// JSON workspaces: one context plus named graphs, hypergraphs, and Pi-graphs.
// Serialization is canonical (sorted keys, dense ids), so equal workspaces
// produce identical text.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "xmg/error.hpp"
#include "xmg/graph.hpp"
#include "xmg/hypergraph.hpp"
#include "xmg/pigraph.hpp"

namespace xmg {

using Json = nlohmann::json;

// Malformed text or a document of the wrong shape. Syntax errors carry a
// 1-based line and column; shape errors carry a JSON pointer and line 0.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column, std::string pointer);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string pointer_;
};

// A well-formed object that breaks a law; forwards the law and witness.
class ValidationError : public Error {
 public:
  ValidationError(std::string object, const LawViolation& cause);
  const std::string& object() const noexcept { return object_; }
  Law law() const noexcept { return law_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::string object_;
  Law law_;
  std::vector<std::size_t> witness_;
};

struct Workspace {
  ContextPtr context;  // null when the document has none
  std::vector<std::pair<std::string, XMGraph>> graphs;
  std::vector<std::pair<std::string, Hypergraph>> hypergraphs;
  std::vector<std::pair<std::string, PiGraph>> pigraphs;

  const XMGraph* find_graph(std::string_view name) const;
  const Hypergraph* find_hypergraph(std::string_view name) const;
  const PiGraph* find_pigraph(std::string_view name) const;

  bool operator==(const Workspace& o) const;
};

Workspace parse_workspace(std::string_view text);
std::string serialize_workspace(const Workspace& ws);

Json context_to_json(const Context& ctx);
Json graph_to_json(const XMGraph& g);
Json hypergraph_to_json(const Hypergraph& h);
Json pigraph_to_json(const PiGraph& p);
Json morphism_to_json(std::span<const std::size_t> vmap, std::span<const std::size_t> amap,
                      const char* second_key = "arcs");

// Throws ParseError / ValidationError.
ContextPtr context_from_json(const Json& j, const std::string& pointer = "/context");
XMGraph graph_from_json(const ContextPtr& ctx, const Json& j, const std::string& pointer);
Hypergraph hypergraph_from_json(const Json& j, const std::string& pointer);
PiGraph pigraph_from_json(std::size_t arity, const Json& j, const std::string& pointer);

}  // namespace xmg
