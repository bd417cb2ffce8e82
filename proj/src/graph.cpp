#include "pmds/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace pmds {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<std::string> original_ids) {
  if (!original_ids.empty() && original_ids.size() != node_count)
    throw std::invalid_argument("Graph::from_edges: id count does not match node count");

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count)
      throw std::out_of_range("Graph::from_edges: edge endpoint out of range");
    if (u == v) continue;
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.edge_count_ = canon.size();
  g.offsets_.assign(node_count + 1, 0);
  for (auto [u, v] : canon) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Canonical pairs are sorted by (u, v) with u < v. Filling every list with its
  // smaller neighbors first and its larger neighbors second keeps it sorted.
  for (auto [u, v] : canon) g.adjacency_[cursor[v]++] = u;
  for (auto [u, v] : canon) g.adjacency_[cursor[u]++] = v;
  for (NodeId v = 0; v < node_count; ++v) g.max_degree_ = std::max(g.max_degree_, g.degree(v));

  if (original_ids.empty()) {
    original_ids.reserve(node_count);
    for (std::size_t v = 0; v < node_count; ++v) original_ids.push_back(std::to_string(v));
  }
  g.ids_ = std::move(original_ids);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f'; }

}  // namespace

Graph load_edge_list(std::istream& in, std::string_view comment_prefixes) {
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> ids;
  std::vector<Edge> edges;

  auto intern = [&](std::string token) {
    auto [it, inserted] = index.try_emplace(std::move(token), static_cast<NodeId>(ids.size()));
    if (inserted) ids.push_back(it->first);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == line.size()) continue;
    if (comment_prefixes.find(line[pos]) != std::string_view::npos) continue;

    std::string tokens[2];
    std::size_t count = 0;
    while (pos < line.size()) {
      std::size_t end = pos;
      while (end < line.size() && !is_space(line[end])) ++end;
      if (count == 2) throw ParseError(line_no, "expected 2 tokens, found more");
      tokens[count++] = line.substr(pos, end - pos);
      pos = end;
      while (pos < line.size() && is_space(line[pos])) ++pos;
    }
    if (count != 2) throw ParseError(line_no, "expected 2 tokens, found " + std::to_string(count));
    NodeId u = intern(std::move(tokens[0]));
    NodeId v = intern(std::move(tokens[1]));
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw std::runtime_error("read error after line " + std::to_string(line_no));
  const std::size_t n = ids.size();
  return Graph::from_edges(n, edges, std::move(ids));
}

Graph load_edge_list(const EdgeListSource& source) {
  std::ifstream in(source.path);
  if (!in) throw std::runtime_error("cannot open " + source.path.string());
  return load_edge_list(in, source.comment_prefixes);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << g.original_id(u) << '\t' << g.original_id(v) << '\n';
}

std::vector<bool> membership_mask(std::size_t node_count, std::span<const NodeId> nodes) {
  std::vector<bool> mask(node_count, false);
  for (NodeId v : nodes) mask.at(v) = true;
  return mask;
}

std::pair<std::vector<NodeId>, std::size_t> connected_components(const Graph& g) {
  constexpr NodeId unset = ~NodeId{0};
  std::vector<NodeId> label(g.node_count(), unset);
  std::vector<NodeId> stack;
  NodeId next = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId u : g.neighbors(v)) {
        if (label[u] == unset) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return {std::move(label), next};
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  constexpr NodeId absent = ~NodeId{0};
  std::vector<NodeId> relabel(g.node_count(), absent);
  std::vector<std::string> ids;
  ids.reserve(sorted.size());
  for (NodeId i = 0; i < sorted.size(); ++i) {
    relabel.at(sorted[i]) = i;
    ids.push_back(g.original_id(sorted[i]));
  }
  std::vector<Edge> edges;
  for (NodeId v : sorted)
    for (NodeId u : g.neighbors(v))
      if (v < u && relabel[u] != absent) edges.emplace_back(relabel[v], relabel[u]);
  return Graph::from_edges(sorted.size(), edges, std::move(ids));
}

Graph largest_component(const Graph& g) {
  auto [label, count] = connected_components(g);
  if (count == 0) return g;
  std::vector<std::size_t> size(count, 0);
  for (NodeId l : label) ++size[l];
  auto best = static_cast<NodeId>(std::max_element(size.begin(), size.end()) - size.begin());
  std::vector<NodeId> keep;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (label[v] == best) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace pmds
