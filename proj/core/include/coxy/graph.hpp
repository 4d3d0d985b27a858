#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxy {

using Vertex = int;

struct Edge {
  std::string label;
  Vertex a = 0;
  Vertex b = 0;

  bool touches(Vertex v) const noexcept { return a == v || b == v; }
  Vertex other(Vertex v) const noexcept { return v == a ? b : a; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A word in the edge generators. Every generator is an involution, so the
/// inverse of a word is its reversal.
class EdgeWord {
public:
  EdgeWord() = default;
  EdgeWord(std::initializer_list<std::string> letters) : letters_(letters) {}
  explicit EdgeWord(std::vector<std::string> letters) : letters_(std::move(letters)) {}

  static EdgeWord parse(std::string_view text);

  const std::vector<std::string>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::string& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(std::string label) { letters_.push_back(std::move(label)); }
  EdgeWord& operator+=(const EdgeWord& rhs);
  EdgeWord inverse() const;
  std::string str() const;

  friend EdgeWord operator+(EdgeWord lhs, const EdgeWord& rhs) { return lhs += rhs; }
  friend bool operator==(const EdgeWord&, const EdgeWord&) = default;

private:
  std::vector<std::string> letters_;
};

EdgeWord power(const EdgeWord& w, int k);

class Graph {
public:
  Graph() = default;
  /// Throws GraphError on loops, repeated pairs, repeated labels or
  /// vertices outside 1..n.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const Edge& edge(std::string_view label) const;
  std::optional<std::size_t> find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }
  std::optional<std::size_t> edge_between(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }

  /// Indices into edges() of the edges at v.
  const std::vector<std::size_t>& incident(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return incident(v).size(); }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> by_label_;
  std::map<std::pair<Vertex, Vertex>, std::size_t> by_pair_;
  std::vector<std::vector<std::size_t>> incidence_;
};

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// Induced subgraph on a vertex set, renumbered 1..k in ascending order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// Subgraph spanned by the given edges with vertices renumbered 1..k in
/// ascending order of their original ids. `to_original[k-1]` is the old id.
Graph edge_subgraph(const Graph& g, std::span<const std::string> labels,
                    std::vector<Vertex>* to_original = nullptr);

struct TreeLink {
  Vertex parent = 0;
  std::string label;
  friend bool operator==(const TreeLink&, const TreeLink&) = default;
};

struct SpanningTree {
  int n = 0;
  std::vector<std::string> edges;
  /// Indexed by vertex; the root (vertex 1) has no link.
  std::vector<std::optional<TreeLink>> parent;
  std::vector<int> depth;

  bool contains(std::string_view label) const;
  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

/// Breadth-first tree rooted at vertex 1, neighbours in ascending order.
SpanningTree spanning_tree(const Graph& g);
/// Tree made of the given edge labels, rooted at vertex 1.
SpanningTree spanning_tree(const Graph& g, std::span<const std::string> labels);

struct PathStep {
  std::string label;
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

std::vector<PathStep> tree_path(const SpanningTree& tree, Vertex a, Vertex b);

struct BasicCycle {
  std::string chord;
  /// Local vertex i (1-based) is `vertices[i-1]`; local 1 is the chord start.
  std::vector<Vertex> vertices;
  /// u_2..u_m; `path[k]` joins local vertices k+1 and k+2.
  std::vector<std::string> path;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  Vertex start() const { return vertices.front(); }
  Vertex end() const { return vertices.back(); }
  /// Local index of a global vertex, 0 when off the cycle.
  int local_index(Vertex v) const;
  Vertex global(int local) const { return vertices.at(static_cast<std::size_t>(local - 1)); }
  /// u_i for i in 1..m, read cyclically so that u_{m+1} = u_1.
  const std::string& edge_at(int i) const;
  /// 1..m if the label is on the cycle, 0 otherwise.
  int edge_index(std::string_view label) const;

  friend bool operator==(const BasicCycle&, const BasicCycle&) = default;
};

std::vector<BasicCycle> basic_cycles(const Graph& g, const SpanningTree& tree);

/// Vertices are the edges of g in ascending label order; edges join
/// intersecting edges and are labelled "a_b".
Graph dual_graph(const Graph& g);

struct Fork {
  Vertex center = 0;
  std::array<Vertex, 3> leaves{};
};

/// A vertex with three distinct neighbours, i.e. a copy of K_{1,3}.
std::optional<Fork> has_forbidden_fork(const Graph& g);

bool is_valid_label(std::string_view label) noexcept;

} // namespace coxy
