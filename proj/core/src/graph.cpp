#include "coxy/graph.hpp"

#include "coxy/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

namespace coxy {

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == '\n'))
      ++i;
    std::size_t j = i;
    while (j < text.size() && !(text[j] == ' ' || text[j] == '\t' || text[j] == '\r' || text[j] == '\n'))
      ++j;
    if (j > i)
      out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    return std::nullopt;
  return v;
}

std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

} // namespace

bool is_valid_label(std::string_view label) noexcept {
  if (label.empty())
    return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(label.front()))
    return false;
  return std::all_of(label.begin() + 1, label.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

EdgeWord EdgeWord::parse(std::string_view text) {
  EdgeWord w;
  for (auto tok : split_ws(text)) {
    if (!is_valid_label(tok))
      throw ParseError(fmt::format("invalid letter '{}'", tok));
    w.letters_.emplace_back(tok);
  }
  return w;
}

EdgeWord& EdgeWord::operator+=(const EdgeWord& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

EdgeWord EdgeWord::inverse() const {
  return EdgeWord(std::vector<std::string>(letters_.rbegin(), letters_.rend()));
}

std::string EdgeWord::str() const { return fmt::format("{}", fmt::join(letters_, " ")); }

EdgeWord power(const EdgeWord& w, int k) {
  EdgeWord base = k < 0 ? w.inverse() : w;
  EdgeWord out;
  for (int i = 0; i < std::abs(k); ++i)
    out += base;
  return out;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0)
    throw GraphError("negative vertex count");
  incidence_.assign(static_cast<std::size_t>(n) + 1, {});
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (!is_valid_label(e.label))
      throw GraphError(fmt::format("invalid edge label '{}'", e.label));
    if (e.a < 1 || e.b < 1 || e.a > n || e.b > n)
      throw GraphError(fmt::format("edge {} has a vertex outside 1..{}", e.label, n));
    if (e.a == e.b)
      throw GraphError(fmt::format("edge {} is a loop", e.label));
    if (!by_label_.emplace(e.label, k).second)
      throw GraphError(fmt::format("duplicate label {}", e.label));
    auto key = ordered(e.a, e.b);
    if (!by_pair_.emplace(key, k).second)
      throw GraphError(fmt::format("duplicate edge between {} and {}", key.first, key.second));
    incidence_[static_cast<std::size_t>(e.a)].push_back(k);
    incidence_[static_cast<std::size_t>(e.b)].push_back(k);
  }
}

const Edge& Graph::edge(std::string_view label) const {
  auto k = find(label);
  if (!k)
    throw UnknownLabel(std::string(label));
  return edges_[*k];
}

std::optional<std::size_t> Graph::find(std::string_view label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Graph::edge_between(Vertex a, Vertex b) const {
  auto it = by_pair_.find(ordered(a, b));
  if (it == by_pair_.end())
    return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& Graph::incident(Vertex v) const {
  if (v < 1 || v > n_)
    throw GraphError(fmt::format("vertex {} outside 1..{}", v, n_));
  return incidence_[static_cast<std::size_t>(v)];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (auto k : incident(v))
    out.push_back(edges_[k].other(v));
  std::sort(out.begin(), out.end());
  return out;
}

Graph parse_graph(std::string_view text) {
  std::vector<Edge> edges;
  std::set<std::string, std::less<>> labels;
  std::set<std::pair<Vertex, Vertex>> pairs;
  int n = 0;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++lineno;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty())
      continue;
    if (tok.size() != 3)
      throw ParseError(fmt::format("expected 'A B LABEL', got {} fields", tok.size()), lineno);
    auto a = parse_int(tok[0]);
    auto b = parse_int(tok[1]);
    if (!a || !b)
      throw ParseError("vertex is not an integer", lineno);
    if (*a <= 0 || *b <= 0)
      throw ParseError("vertices must be positive", lineno);
    if (*a > 1'000'000 || *b > 1'000'000)
      throw ParseError("vertex id too large", lineno);
    if (*a == *b)
      throw ParseError(fmt::format("loop at vertex {}", *a), lineno);
    if (!is_valid_label(tok[2]))
      throw ParseError(fmt::format("invalid label '{}'", tok[2]), lineno);
    if (labels.count(tok[2]))
      throw ParseError(fmt::format("duplicate label {}", tok[2]), lineno);
    auto key = ordered(static_cast<Vertex>(*a), static_cast<Vertex>(*b));
    if (!pairs.insert(key).second)
      throw ParseError(fmt::format("duplicate edge between {} and {}", key.first, key.second), lineno);
    labels.emplace(tok[2]);
    edges.push_back({std::string(tok[2]), static_cast<Vertex>(*a), static_cast<Vertex>(*b)});
    n = std::max({n, static_cast<int>(*a), static_cast<int>(*b)});
  }
  return Graph(n, std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges())
    out += fmt::format("{} {} {}\n", e.a, e.b, e.label);
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 1; s <= n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0)
      continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<Vertex> queue{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      out.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  auto local = [&](Vertex v) -> int {
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    return it != vs.end() && *it == v ? static_cast<int>(it - vs.begin()) + 1 : 0;
  };
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    int a = local(e.a);
    int b = local(e.b);
    if (a && b)
      edges.push_back({e.label, a, b});
  }
  return Graph(static_cast<int>(vs.size()), std::move(edges));
}

Graph edge_subgraph(const Graph& g, std::span<const std::string> labels,
                    std::vector<Vertex>* to_original) {
  std::vector<Vertex> vs;
  for (const auto& l : labels) {
    const Edge& e = g.edge(l);
    vs.push_back(e.a);
    vs.push_back(e.b);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  auto local = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()) + 1;
  };
  std::vector<Edge> edges;
  for (const auto& l : labels) {
    const Edge& e = g.edge(l);
    edges.push_back({e.label, local(e.a), local(e.b)});
  }
  if (to_original)
    *to_original = vs;
  return Graph(static_cast<int>(vs.size()), std::move(edges));
}

bool SpanningTree::contains(std::string_view label) const {
  return std::find(edges.begin(), edges.end(), label) != edges.end();
}

namespace {

SpanningTree bfs_tree(const Graph& g, const std::vector<bool>& allowed) {
  const int n = g.vertex_count();
  SpanningTree t;
  t.n = n;
  t.parent.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
  t.depth.assign(static_cast<std::size_t>(n) + 1, -1);
  if (n == 0)
    return t;
  std::deque<Vertex> queue{1};
  t.depth[1] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    std::vector<std::pair<Vertex, std::size_t>> next;
    for (auto k : g.incident(v))
      if (allowed[k])
        next.emplace_back(g.edges()[k].other(v), k);
    std::sort(next.begin(), next.end());
    for (auto [w, k] : next) {
      if (t.depth[static_cast<std::size_t>(w)] >= 0)
        continue;
      t.depth[static_cast<std::size_t>(w)] = t.depth[static_cast<std::size_t>(v)] + 1;
      t.parent[static_cast<std::size_t>(w)] = TreeLink{v, g.edges()[k].label};
      t.edges.push_back(g.edges()[k].label);
      queue.push_back(w);
    }
  }
  if (static_cast<int>(t.edges.size()) != n - 1)
    throw GraphError("graph is disconnected");
  return t;
}

} // namespace

SpanningTree spanning_tree(const Graph& g) {
  return bfs_tree(g, std::vector<bool>(g.edge_count(), true));
}

SpanningTree spanning_tree(const Graph& g, std::span<const std::string> labels) {
  std::vector<bool> allowed(g.edge_count(), false);
  for (const auto& l : labels) {
    auto k = g.find(l);
    if (!k)
      throw UnknownLabel(l);
    if (allowed[*k])
      throw GraphError(fmt::format("tree edge {} listed twice", l));
    allowed[*k] = true;
  }
  if (static_cast<int>(labels.size()) != g.vertex_count() - 1)
    throw GraphError(fmt::format("a spanning tree needs {} edges, got {}", g.vertex_count() - 1,
                                 labels.size()));
  try {
    return bfs_tree(g, allowed);
  } catch (const GraphError&) {
    throw GraphError("given edges do not form a spanning tree");
  }
}

std::vector<PathStep> tree_path(const SpanningTree& tree, Vertex a, Vertex b) {
  if (a < 1 || b < 1 || a > tree.n || b > tree.n)
    throw GraphError(fmt::format("tree path endpoints {} {} outside 1..{}", a, b, tree.n));
  std::vector<PathStep> up;
  std::vector<PathStep> down;
  auto depth = [&](Vertex v) { return tree.depth[static_cast<std::size_t>(v)]; };
  auto link = [&](Vertex v) -> const TreeLink& { return *tree.parent[static_cast<std::size_t>(v)]; };
  while (a != b) {
    if (depth(a) >= depth(b)) {
      const auto& l = link(a);
      up.push_back({l.label, a, l.parent});
      a = l.parent;
    } else {
      const auto& l = link(b);
      down.push_back({l.label, l.parent, b});
      b = l.parent;
    }
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

int BasicCycle::local_index(Vertex v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? 0 : static_cast<int>(it - vertices.begin()) + 1;
}

const std::string& BasicCycle::edge_at(int i) const {
  const int m = length();
  int k = ((i - 1) % m + m) % m + 1;
  return k == 1 ? chord : path[static_cast<std::size_t>(k - 2)];
}

int BasicCycle::edge_index(std::string_view label) const {
  if (label == chord)
    return 1;
  auto it = std::find(path.begin(), path.end(), label);
  return it == path.end() ? 0 : static_cast<int>(it - path.begin()) + 2;
}

std::vector<BasicCycle> basic_cycles(const Graph& g, const SpanningTree& tree) {
  std::vector<BasicCycle> out;
  for (const auto& e : g.edges()) {
    if (tree.contains(e.label))
      continue;
    BasicCycle c;
    c.chord = e.label;
    const Vertex s = std::min(e.a, e.b);
    const Vertex f = std::max(e.a, e.b);
    c.vertices.push_back(s);
    for (const auto& step : tree_path(tree, s, f)) {
      c.path.push_back(step.label);
      c.vertices.push_back(step.to);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Graph dual_graph(const Graph& g) {
  std::vector<const Edge*> sorted;
  for (const auto& e : g.edges())
    sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const Edge* x, const Edge* y) { return x->label < y->label; });
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const Edge& x = *sorted[i];
      const Edge& y = *sorted[j];
      if (x.touches(y.a) || x.touches(y.b))
        edges.push_back({x.label + "_" + y.label, static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1)});
    }
  }
  return Graph(static_cast<int>(sorted.size()), std::move(edges));
}

std::optional<Fork> has_forbidden_fork(const Graph& g) {
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() >= 3)
      return Fork{v, {nb[0], nb[1], nb[2]}};
  }
  return std::nullopt;
}

} // namespace coxy
