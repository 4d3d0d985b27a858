#include "coxy/coxy.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace coxy {

namespace {

Graph require_connected(Graph g) {
  if (g.vertex_count() == 0)
    throw GraphError("graph has no vertices");
  auto comps = connected_components(g);
  if (comps.size() != 1)
    throw GraphError(fmt::format("graph is disconnected ({} components)", comps.size()));
  return g;
}

} // namespace

Context::Context(Graph g) : graph_(require_connected(std::move(g))), tree_(spanning_tree(graph_)) {
  cycles_ = basic_cycles(graph_, tree_);
  is_k4_ = graph_.vertex_count() == 4 && is_complete(graph_);
}

Context::Context(Graph g, SpanningTree tree) : graph_(require_connected(std::move(g))), tree_(std::move(tree)) {
  if (tree_.n != graph_.vertex_count() || static_cast<int>(tree_.edges.size()) != graph_.vertex_count() - 1)
    throw GraphError("spanning tree does not match the graph");
  for (const auto& l : tree_.edges)
    graph_.edge(l);
  cycles_ = basic_cycles(graph_, tree_);
  is_k4_ = graph_.vertex_count() == 4 && is_complete(graph_);
}

bool Context::is_chord(std::string_view label) const {
  return std::any_of(cycles_.begin(), cycles_.end(), [&](const BasicCycle& c) { return c.chord == label; });
}

std::vector<std::string> Context::chords() const {
  std::vector<std::string> out;
  for (const auto& c : cycles_)
    out.push_back(c.chord);
  return out;
}

const BasicCycle& Context::cycle_of(std::string_view chord) const {
  for (const auto& c : cycles_)
    if (c.chord == chord)
      return c;
  throw UnknownLabel(std::string(chord));
}

Context build_context(Graph g) { return Context(std::move(g)); }

Context build_context(Graph g, std::span<const std::string> tree_labels) {
  auto tree = spanning_tree(g, tree_labels);
  return Context(std::move(g), std::move(tree));
}

SemidirectElement phi_letter(const Context& ctx, std::string_view label) {
  const Edge& e = ctx.graph().edge(label);
  const int n = ctx.n();
  if (!ctx.is_chord(label))
    return SemidirectElement(Permutation::transposition(n, e.a, e.b));
  const Vertex s = std::min(e.a, e.b);
  const Vertex f = std::max(e.a, e.b);
  return {Permutation::transposition(n, s, f), mu(AGenerator{e.label, s, f}, n)};
}

SemidirectElement phi(const Context& ctx, const EdgeWord& w) {
  SemidirectElement out = sd_identity(ctx.n());
  for (const auto& l : w)
    out = out * phi_letter(ctx, l);
  return out;
}

Permutation cycle_rotation(const BasicCycle& cyc, int n) {
  std::vector<Vertex> pts(cyc.vertices.rbegin(), cyc.vertices.rend());
  return Permutation::cycle(n, pts);
}

namespace {

EdgeWord gamma_local(const BasicCycle& cyc, int i) {
  const int m = cyc.length();
  EdgeWord w;
  if (i <= m - 2) {
    for (int k = i + 2; k <= m; ++k)
      w.push_back(cyc.edge_at(k));
    for (int k = 1; k <= i; ++k)
      w.push_back(cyc.edge_at(k));
  } else if (i == m - 1) {
    for (int k = 1; k <= m - 1; ++k)
      w.push_back(cyc.edge_at(k));
  } else {
    for (int k = 2; k <= m; ++k)
      w.push_back(cyc.edge_at(k));
  }
  return w;
}

} // namespace

EdgeWord gamma(const Context& ctx, const BasicCycle& cyc, Vertex a) {
  if (a < 1 || a > ctx.n())
    throw DomainError(fmt::format("vertex {} outside 1..{}", a, ctx.n()));
  if (int local = cyc.local_index(a))
    return gamma_local(cyc, local);
  auto path = tree_path(ctx.tree(), cyc.start(), a);
  EdgeWord head;
  EdgeWord tail;
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    head += tilde(ctx, cyc, it->label);
  for (const auto& step : path)
    tail.push_back(step.label);
  return head + gamma_local(cyc, 1) + tail;
}

EdgeWord tilde(const Context& ctx, const BasicCycle& cyc, std::string_view label) {
  if (int i = cyc.edge_index(label))
    return EdgeWord{cyc.edge_at(i + 1)};
  const Edge& e = ctx.graph().edge(label);
  int i = cyc.local_index(e.a);
  int j = cyc.local_index(e.b);
  if (i > j)
    std::swap(i, j);
  if (j == 0)
    return EdgeWord{e.label};
  if (i == 0)
    return EdgeWord{cyc.edge_at(j + 1), e.label, cyc.edge_at(j + 1)};
  const auto& ui = cyc.edge_at(i + 1);
  const auto& uj = cyc.edge_at(j + 1);
  return EdgeWord{ui, uj, e.label, uj, ui};
}

EdgeWord tilde(const Context& ctx, const BasicCycle& cyc, const EdgeWord& w) {
  EdgeWord out;
  for (const auto& l : w)
    out += tilde(ctx, cyc, l);
  return out;
}

EdgeWord psi_perm(const Context& ctx, const Permutation& s) {
  if (s.size() != ctx.n())
    throw SizeMismatch(fmt::format("permutation of degree {} on a graph with {} vertices", s.size(), ctx.n()));
  std::vector<std::pair<Vertex, Vertex>> factors;
  std::vector<Vertex> r = s.images();
  for (Vertex i = ctx.n(); i >= 1; --i) {
    Vertex ri = r[static_cast<std::size_t>(i - 1)];
    if (ri == i)
      continue;
    factors.emplace_back(i, ri);
    // r <- r * (i ri): swap the values i and ri.
    for (auto& v : r) {
      if (v == i)
        v = ri;
      else if (v == ri)
        v = i;
    }
  }
  EdgeWord out;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    auto path = tree_path(ctx.tree(), std::min(it->first, it->second), std::max(it->first, it->second));
    EdgeWord w;
    for (const auto& step : path)
      w.push_back(step.label);
    for (std::size_t k = path.size() - 1; k-- > 0;)
      w.push_back(path[k].label);
    out += w;
  }
  return out;
}

EdgeWord psi_gen(const Context& ctx, const AGenerator& gen) {
  const BasicCycle& cyc = ctx.cycle_of(gen.chord);
  return gamma(ctx, cyc, gen.j).inverse() + gamma(ctx, cyc, gen.i);
}

EdgeWord psi(const Context& ctx, const AWord& w) {
  EdgeWord out;
  for (const auto& l : w)
    out += psi_gen(ctx, l.exp == 1 ? l.gen : l.gen.swapped());
  return out;
}

EdgeWord psi(const Context& ctx, const SemidirectElement& g) {
  return psi_perm(ctx, g.perm) + psi(ctx, lift_to_a(g.f));
}

std::string_view to_string(Verdict::Kind kind) {
  switch (kind) {
  case Verdict::Kind::trivial: return "trivial";
  case Verdict::Kind::nontrivial: return "nontrivial";
  case Verdict::Kind::trivial_in_quotient: return "quotient";
  }
  return "?";
}

Verdict is_trivial(const Context& ctx, const EdgeWord& w) {
  SemidirectElement image = phi(ctx, w);
  if (!image.is_identity())
    return {Verdict::Kind::nontrivial, std::move(image)};
  return {ctx.is_k4() ? Verdict::Kind::trivial_in_quotient : Verdict::Kind::trivial, std::nullopt};
}

Verdict equal(const Context& ctx, const EdgeWord& w1, const EdgeWord& w2) {
  return is_trivial(ctx, w1 + w2.inverse());
}

KernelMembership in_kernel(const Context& ctx, const EdgeWord& w) {
  SemidirectElement image = phi(ctx, w);
  return {image.perm.is_identity(), std::move(image.f)};
}

std::string_view to_string(Classification c) {
  switch (c) {
  case Classification::symmetric_group: return "symmetric group";
  case Classification::virtually_abelian: return "virtually abelian";
  case Classification::contains_free_subgroup: return "contains a free subgroup";
  }
  return "?";
}

std::string StructureReport::group_description() const {
  if (is_k4)
    return "S_4 ⋉ A_{3,4}";
  switch (classification) {
  case Classification::symmetric_group: return fmt::format("S_{}", n);
  case Classification::virtually_abelian: return fmt::format("S_{} ⋉ Z^{}", n, n - 1);
  case Classification::contains_free_subgroup: return fmt::format("S_{} ⋉ F_{{{},{}}}", n, t, n);
  }
  return "?";
}

StructureReport structure_report(const Context& ctx) {
  StructureReport r;
  r.n = ctx.n();
  r.t = ctx.t();
  r.classification = r.t == 0   ? Classification::symmetric_group
                     : r.t == 1 ? Classification::virtually_abelian
                                : Classification::contains_free_subgroup;
  r.kernel_ab_rank = static_cast<long long>(r.t) * (r.n - 1);
  r.is_k4 = ctx.is_k4();
  r.torsion_free_kernel = !r.is_k4;
  r.residually_finite = !r.is_k4;
  r.word_problem_exact = !r.is_k4;
  return r;
}

} // namespace coxy
