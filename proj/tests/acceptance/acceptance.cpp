#include "coxy/oracle.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <string>
#include <vector>

using namespace coxy;
using namespace coxy::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void require(const OracleReport& r, const std::string& where) {
    require(r.passed(), fmt::format("{}: {}", where, r.str(3)));
  }
};

std::vector<std::string> labels_of(const Graph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges())
    out.push_back(e.label);
  return out;
}

std::vector<Permutation> edge_transpositions(const Graph& g) {
  std::vector<Permutation> gens;
  for (const auto& e : g.edges())
    gens.push_back(Permutation::transposition(g.vertex_count(), e.a, e.b));
  return gens;
}

std::size_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::size_t>(n) * factorial(n - 1); }

Context six_context() {
  auto labels = sixpts_tree();
  return build_context(sixpts(), labels);
}

Outcome relator_soundness() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  for (const auto& entry : corpus())
    o.require(check_relators(Context(entry.graph)), entry.name);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 5.0, fmt::format("took {:.2f}s", secs));
  if (o.pass)
    o.detail = fmt::format("{} graphs in {:.2f}s", corpus().size(), secs);
  return o;
}

Outcome tree_case() {
  Outcome o;
  std::vector<CorpusEntry> trees;
  for (int n = 2; n <= 7; ++n)
    trees.push_back({fmt::format("P{}", n), path_graph(n)});
  trees.push_back({"Y", star_graph(3)});
  for (int n = 3; n <= 7; ++n)
    trees.push_back({fmt::format("random-tree-{}", n), random_connected(100 + static_cast<std::uint64_t>(n), n, 0)});
  for (const auto& [name, g] : trees) {
    auto gens = edge_transpositions(g);
    auto order = bfs_group_order(gens);
    o.require(order == factorial(g.vertex_count()), fmt::format("{}: order {}", name, order));
    Context ctx(g);
    Rng rng(7);
    auto labels = labels_of(g);
    for (int s = 0; s < 500; ++s) {
      auto w = random_word(labels, rng, rng() % 16);
      bool trivial = is_trivial(ctx, w).kind == Verdict::Kind::trivial;
      o.require(trivial == perm_of_word(g, w).is_identity(), fmt::format("{}: {}", name, w.str()));
    }
  }
  return o;
}

bool single_chord_powers(const FStarElement& f, const std::string& chord) {
  for (const auto& c : f.components())
    for (const auto& l : c.letters())
      if (l.chord != chord)
        return false;
  return true;
}

Outcome cycle_case() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    Context ctx(cycle_graph(n));
    auto chord = ctx.chords().front();
    auto labels = labels_of(ctx.graph());
    Rng rng(static_cast<std::uint64_t>(n));
    std::vector<FStarElement> witnesses;
    for (int s = 0; s < 200; ++s) {
      auto w = random_word(labels, rng, rng() % 20);
      auto k = w + psi_perm(ctx, perm_of_word(ctx.graph(), w)).inverse();
      auto v = in_kernel(ctx, k);
      o.require(v.in_kernel, fmt::format("C{}: {} not in kernel", n, k.str()));
      o.require(single_chord_powers(v.witness, chord), fmt::format("C{}: witness {}", n, v.witness.str()));
      witnesses.push_back(v.witness);
    }
    for (std::size_t i = 0; i + 1 < witnesses.size(); ++i) {
      const auto& a = witnesses[i];
      const auto& b = witnesses[i + 1];
      o.require(a * b == b * a, fmt::format("C{}: {} and {} do not commute", n, a.str(), b.str()));
    }
    auto chords = ctx.chords();
    auto rank = ab_rank(kernel_generators(ctx), chords);
    o.require(rank == static_cast<std::size_t>(n - 1), fmt::format("C{}: rank {}", n, rank));
  }
  return o;
}

Outcome worked_example() {
  Outcome o;
  auto ctx = six_context();
  struct Case {
    const char* word;
    FStarElement want;
  };
  std::vector<Case> cases{{"c e c x", fstar({"x", "", "", "x^-1", "", ""})},
                          {"b d b y", fstar({"", "", "y", "", "", "y^-1"})},
                          {"c a d a c z", fstar({"", "", "", "", "z", "z^-1"})}};
  for (const auto& c : cases) {
    auto got = phi(ctx, EdgeWord::parse(c.word));
    o.require(got == SemidirectElement(c.want), fmt::format("{} -> {}", c.word, got.str()));
  }
  return o;
}

Outcome round_trips() {
  Outcome o;
  for (const auto& entry : corpus()) {
    Context ctx(entry.graph);
    const int n = ctx.n();
    Rng rng(17);
    for (int s = 0; s < 200; ++s) {
      auto sigma = random_permutation(n, rng);
      auto got = phi(ctx, psi_perm(ctx, sigma));
      o.require(got == SemidirectElement(sigma), fmt::format("{}: psi_perm {}", entry.name, sigma.str()));
    }
    for (const auto& x : ctx.chords())
      for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = 1; j <= n; ++j) {
          if (i == j)
            continue;
          AGenerator gen{x, i, j};
          auto got = phi(ctx, psi_gen(ctx, gen));
          o.require(got == SemidirectElement(mu(gen, n)), fmt::format("{}: psi_gen {}", entry.name, gen.str()));
        }
    for (const auto& e : entry.graph.edges()) {
      auto image = phi_letter(ctx, e.label);
      auto back = psi(ctx, image);
      o.require(phi(ctx, back) == image, fmt::format("{}: psi(phi({}))", entry.name, e.label));
    }
  }
  return o;
}

Outcome gamma_laws() {
  Outcome o;
  for (const auto& entry : corpus()) {
    Context ctx(entry.graph);
    for (const auto& cyc : ctx.cycles()) {
      auto tau = cycle_rotation(cyc, ctx.n());
      for (Vertex a = 1; a <= ctx.n(); ++a) {
        auto got = phi(ctx, gamma(ctx, cyc, a));
        SemidirectElement want(tau, mu(AGenerator{cyc.chord, a, cyc.end()}, ctx.n()));
        o.require(got == want, fmt::format("{}: gamma_{} for {}", entry.name, a, cyc.chord));
      }
    }
    o.require(check_gamma_laws(ctx), entry.name);
  }
  return o;
}

Outcome identities() {
  Outcome o;
  long long checks = 0;
  for (auto [n, t] : {std::pair{5, 3}, std::pair{6, 3}, std::pair{4, 2}}) {
    auto r = identity_suite(2024, n, t, 1000);
    checks += r.checks_run();
    o.require(r, fmt::format("n={} t={}", n, t));
  }
  if (o.pass)
    o.detail = fmt::format("{} checks", checks);
  return o;
}

Outcome structure() {
  Outcome o;
  auto c6 = structure_report(Context(cycle_graph(6)));
  o.require(c6.classification == Classification::virtually_abelian && c6.kernel_ab_rank == 5, "C6");
  auto y = structure_report(Context(star_graph(3)));
  o.require(y.classification == Classification::symmetric_group && y.group_description() == "S_4", "Y");
  auto six = structure_report(six_context());
  o.require(six.classification == Classification::contains_free_subgroup && six.kernel_ab_rank == 15 &&
                six.kernel_ab_rank == six.t * (six.n - 1),
            "sixpts");
  auto k = structure_report(Context(k4()));
  o.require(k.is_k4 && !k.word_problem_exact, "K4");
  return o;
}

std::vector<Graph> parabolic_subgraphs(const Context& ctx, Rng& rng) {
  const Graph& g = ctx.graph();
  std::vector<Graph> subs;
  auto keep = [&](std::vector<std::string> labels) {
    std::vector<Edge> edges;
    for (const auto& l : labels)
      edges.push_back(g.edge(l));
    subs.emplace_back(g.vertex_count(), edges);
  };
  keep(ctx.tree().edges);
  for (const auto& cyc : ctx.cycles()) {
    auto labels = cyc.path;
    labels.push_back(cyc.chord);
    keep(labels);
  }
  // A random connected subgraph grown from one edge.
  auto labels = labels_of(g);
  std::vector<std::string> grown{labels[rng() % labels.size()]};
  std::vector<bool> touched(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  touched[static_cast<std::size_t>(g.edge(grown[0]).a)] = touched[static_cast<std::size_t>(g.edge(grown[0]).b)] = true;
  for (int step = 0; step < 6; ++step) {
    std::vector<std::string> options;
    for (const auto& e : g.edges())
      if (std::find(grown.begin(), grown.end(), e.label) == grown.end() &&
          (touched[static_cast<std::size_t>(e.a)] || touched[static_cast<std::size_t>(e.b)]))
        options.push_back(e.label);
    if (options.empty())
      break;
    const auto& pick = g.edge(options[rng() % options.size()]);
    grown.push_back(pick.label);
    touched[static_cast<std::size_t>(pick.a)] = touched[static_cast<std::size_t>(pick.b)] = true;
  }
  auto candidate = edge_subgraph(g, grown, nullptr);
  if (!(candidate.vertex_count() == 4 && is_complete(candidate)))
    keep(grown);
  return subs;
}

Outcome parabolic() {
  Outcome o;
  long long checks = 0;
  std::size_t pairs = 0;
  Rng rng(99);
  for (const auto& entry : corpus()) {
    Context ctx(entry.graph);
    for (const auto& sub : parabolic_subgraphs(ctx, rng)) {
      auto r = parabolic_check(ctx, sub, 500, 1000 + pairs);
      checks += r.checks_run();
      ++pairs;
      o.require(r, entry.name);
    }
  }
  if (o.pass)
    o.detail = fmt::format("{} pairs, {} checks", pairs, checks);
  return o;
}

Outcome tsaranov() {
  Outcome o;
  auto p = tsaranov_presentation(3, 3, 3);
  o.require(p.n == 5 && p.t == 3, fmt::format("n={} t={}", p.n, p.t));
  o.require(p.family.starts_with("x_i^2 x_j^-2"), p.family);
  o.require(p.extra_relators.size() == 3 * 4, fmt::format("{} relators", p.extra_relators.size()));
  for (const auto& r : p.extra_relators) {
    o.require(in_ftn(r), r.str());
    std::size_t nonempty = 0;
    for (const auto& c : r.components())
      nonempty += !c.empty();
    o.require(nonempty == 2, r.str());
  }
  return o;
}

Graph graph_from_pairs(const std::vector<std::pair<Vertex, Vertex>>& pairs, int n) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs)
    edges.push_back({fmt::format("e{}", edges.size() + 1), a, b});
  return Graph(n, edges);
}

Outcome dual_and_fork() {
  Outcome o;
  o.require(isomorphic(dual_graph(star_graph(3)), cycle_graph(3)), "dual(Y)");
  for (int n = 3; n <= 8; ++n)
    o.require(isomorphic(dual_graph(cycle_graph(n)), cycle_graph(n)), fmt::format("dual(C{})", n));

  constexpr int kVertices = 8;
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex a = 1; a <= kVertices; ++a)
    for (Vertex b = a + 1; b <= kVertices; ++b)
      all.emplace_back(a, b);
  std::size_t graphs = 0;
  std::vector<std::size_t> pick;
  auto check = [&](const Graph& g) {
    ++graphs;
    bool fast = has_forbidden_fork(g).has_value();
    o.require(fast == brute_force_fork(g), fmt::format("fork mismatch on {}", format_graph(g)));
  };
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    std::vector<std::pair<Vertex, Vertex>> chosen;
    for (auto k : pick)
      chosen.push_back(all[k]);
    check(graph_from_pairs(chosen, kVertices));
    if (pick.size() == 5)
      return;
    for (std::size_t k = from; k < all.size(); ++k) {
      pick.push_back(k);
      extend(k + 1);
      pick.pop_back();
    }
  };
  extend(0);
  // Graphs with at most five edges that need more than eight vertices.
  check(graph_from_pairs({{1, 2}, {2, 3}, {4, 5}, {6, 7}, {8, 9}}, 9));
  check(graph_from_pairs({{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}}, 10));
  if (o.pass)
    o.detail = fmt::format("{} graphs", graphs);
  return o;
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"relator-soundness", relator_soundness}, {"tree-case", tree_case},
      {"cycle-case", cycle_case},               {"worked-example", worked_example},
      {"round-trips", round_trips},             {"gamma-laws", gamma_laws},
      {"identity-suite", identities},           {"structure-reports", structure},
      {"parabolic-consistency", parabolic},     {"tsaranov", tsaranov},
      {"dual-graph-and-fork", dual_and_fork},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      out = criteria[k].run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = fmt::format("exception: {}", e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !out.pass;
    fmt::print("{} {:>2} {} [{:.2f}s]{}{}\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].name, secs,
               out.detail.empty() ? "" : " ", out.detail);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
