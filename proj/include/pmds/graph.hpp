#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pmds {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Raised by the edge-list reader; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Neighbor lists are sorted by index, contain no self-loops and no duplicates.
/// Every node keeps the identifier it had in the input file.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph on `node_count` nodes. Self-loops are dropped and
  /// parallel or reversed duplicates collapsed. When `original_ids` is empty the
  /// decimal index is used as the identifier.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::vector<std::string> original_ids = {});

  std::size_t node_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(NodeId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::uint32_t max_degree() const noexcept { return max_degree_; }
  bool has_edge(NodeId u, NodeId v) const;

  const std::string& original_id(NodeId v) const { return ids_[v]; }
  const std::vector<std::string>& original_ids() const noexcept { return ids_; }

  /// Edges as (u, v) index pairs with u < v, lexicographically ordered.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::string> ids_;
  std::size_t edge_count_ = 0;
  std::uint32_t max_degree_ = 0;
};

/// Where an edge list comes from. Lines starting with one of
/// `comment_prefixes` (after leading whitespace) and blank lines are skipped.
struct EdgeListSource {
  std::filesystem::path path;
  std::string comment_prefixes = "#%";
};

/// Reads "<u> <v>" lines. Tokens are arbitrary non-whitespace strings, indexed
/// in order of first appearance.
Graph load_edge_list(std::istream& in, std::string_view comment_prefixes = "#%");
Graph load_edge_list(const EdgeListSource& source);

/// Canonical form: one "min_id<TAB>max_id" line per edge, ordered by index pair.
void write_edge_list(std::ostream& out, const Graph& g);

/// Any callable answering "is node v in S?".
template <typename F>
concept NodePredicate = std::predicate<const F&, NodeId>;

/// |N(v) ∩ S|, zero when v itself is outside S.
template <NodePredicate Member>
std::uint32_t induced_degree(const Graph& g, const Member& member, NodeId v) {
  if (v >= g.node_count()) throw std::out_of_range("induced_degree: node index out of range");
  if (!member(v)) return 0;
  std::uint32_t d = 0;
  for (NodeId u : g.neighbors(v)) d += member(u) ? 1u : 0u;
  return d;
}

/// |E(S)|.
template <NodePredicate Member>
std::size_t induced_edge_count(const Graph& g, const Member& member) {
  std::size_t twice = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!member(v)) continue;
    for (NodeId u : g.neighbors(v)) twice += member(u) ? 1 : 0;
  }
  return twice / 2;
}

/// Membership mask for an explicit node list.
std::vector<bool> membership_mask(std::size_t node_count, std::span<const NodeId> nodes);

/// Component label per node (labels dense, in order of smallest member) and the count.
std::pair<std::vector<NodeId>, std::size_t> connected_components(const Graph& g);

/// Subgraph induced by `nodes`, keeping their original identifiers and
/// relabeling in ascending index order.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

Graph largest_component(const Graph& g);

}  // namespace pmds
