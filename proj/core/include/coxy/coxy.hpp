#pragma once

#include "coxy/error.hpp"
#include "coxy/freeprod.hpp"
#include "coxy/graph.hpp"
#include "coxy/perm.hpp"
#include "coxy/presentation.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxy {

/// A connected graph together with its spanning tree and basic cycles.
class Context {
public:
  /// Breadth-first spanning tree from vertex 1.
  explicit Context(Graph g);
  Context(Graph g, SpanningTree tree);

  const Graph& graph() const noexcept { return graph_; }
  const SpanningTree& tree() const noexcept { return tree_; }
  const std::vector<BasicCycle>& cycles() const noexcept { return cycles_; }
  int n() const noexcept { return graph_.vertex_count(); }
  int t() const noexcept { return static_cast<int>(cycles_.size()); }
  bool is_k4() const noexcept { return is_k4_; }

  bool is_chord(std::string_view label) const;
  std::vector<std::string> chords() const;
  const BasicCycle& cycle_of(std::string_view chord) const;

private:
  Graph graph_;
  SpanningTree tree_;
  std::vector<BasicCycle> cycles_;
  bool is_k4_ = false;
};

Context build_context(Graph g);
Context build_context(Graph g, std::span<const std::string> tree_labels);

SemidirectElement phi_letter(const Context& ctx, std::string_view label);
SemidirectElement phi(const Context& ctx, const EdgeWord& w);

/// The cycle rotation local i -> i-1 (local 1 -> m), as a permutation of
/// global vertices.
Permutation cycle_rotation(const BasicCycle& cyc, int n);

EdgeWord gamma(const Context& ctx, const BasicCycle& cyc, Vertex a);
EdgeWord tilde(const Context& ctx, const BasicCycle& cyc, std::string_view label);
EdgeWord tilde(const Context& ctx, const BasicCycle& cyc, const EdgeWord& w);

EdgeWord psi_perm(const Context& ctx, const Permutation& s);
EdgeWord psi_gen(const Context& ctx, const AGenerator& gen);
EdgeWord psi(const Context& ctx, const AWord& w);
/// A word whose image under phi is g; g.f must lie in F_{t,n}.
EdgeWord psi(const Context& ctx, const SemidirectElement& g);

struct Verdict {
  enum class Kind { trivial, nontrivial, trivial_in_quotient };
  Kind kind = Kind::trivial;
  /// Set when nontrivial.
  std::optional<SemidirectElement> witness;

  bool is_trivial() const noexcept { return kind != Kind::nontrivial; }
};

std::string_view to_string(Verdict::Kind kind);

Verdict is_trivial(const Context& ctx, const EdgeWord& w);
Verdict equal(const Context& ctx, const EdgeWord& w1, const EdgeWord& w2);

struct KernelMembership {
  bool in_kernel = false;
  FStarElement witness;
};

KernelMembership in_kernel(const Context& ctx, const EdgeWord& w);

enum class Classification { symmetric_group, virtually_abelian, contains_free_subgroup };

std::string_view to_string(Classification c);

struct StructureReport {
  int n = 0;
  int t = 0;
  Classification classification = Classification::symmetric_group;
  long long kernel_ab_rank = 0;
  bool is_k4 = false;
  bool torsion_free_kernel = true;
  bool residually_finite = true;
  bool word_problem_exact = true;

  /// "S_6 ⋉ Z^5" and similar.
  std::string group_description() const;
};

StructureReport structure_report(const Context& ctx);

} // namespace coxy
