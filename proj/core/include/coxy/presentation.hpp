#pragma once

#include "coxy/freeprod.hpp"
#include "coxy/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxy {

/// The generator x_{ij} of A_{t,n} for the chord x.
struct AGenerator {
  std::string chord;
  Vertex i = 0;
  Vertex j = 0;

  AGenerator swapped() const { return {chord, j, i}; }
  std::string str() const;
  friend auto operator<=>(const AGenerator&, const AGenerator&) = default;
  friend bool operator==(const AGenerator&, const AGenerator&) = default;
};

struct ALetter {
  AGenerator gen;
  int exp = 1;

  ALetter inverse() const { return {gen, -exp}; }
  friend bool operator==(const ALetter&, const ALetter&) = default;
};

using AWord = std::vector<ALetter>;

AWord inverse(const AWord& w);
std::string to_string(const AWord& w);
/// Parses "x_{14} y_{2,3}^-1 ...". The empty string is the empty word.
AWord parse_a_word(std::string_view text);

/// x at slot i and x^-1 at slot j; the identity when i == j.
FStarElement mu(const AGenerator& gen, int n);
FStarElement mu(const ALetter& l, int n);
FStarElement mu(const AWord& w, int n);

/// x_{ij} -> x_{s(i), s(j)}.
AGenerator act_a(const Permutation& s, const AGenerator& gen);

/// Rewrites with x_{ij}^-1 = x_{ji}, x_{ij} x_{jk} = x_{ik} and x_{ii} = 1.
AWord simplify(const AWord& w);

/// An A-word whose image under mu is f. Requires f in F_{t,n}.
AWord lift_to_a(const FStarElement& f);

enum class PresentationKind { coxeter, coxy, symmetric, atn };

std::string_view to_string(PresentationKind kind);
std::optional<PresentationKind> presentation_from_string(std::string_view name);

struct RelatorSet {
  PresentationKind kind = PresentationKind::coxeter;
  std::vector<EdgeWord> edge_relators;
  std::vector<AWord> a_relators;

  std::string_view name() const { return to_string(kind); }
  std::size_t size() const { return edge_relators.size() + a_relators.size(); }
  /// One relator per line.
  std::string str() const;
};

/// Cycle and A-relators use the breadth-first spanning tree.
RelatorSet relators(const Graph& g, PresentationKind which);
RelatorSet relators(const Graph& g, const SpanningTree& tree, PresentationKind which);
/// Relators (7)-(10) of A_{t,n} for the given chords.
std::vector<AWord> atn_relators(std::span<const std::string> chords, int n);

struct TsaranovPresentation {
  Graph graph;
  int n = 0;
  int t = 0;
  std::vector<std::string> chords;
  /// Human-readable relator family, e.g. "x_i^2 x_j^-2".
  std::string family;
  /// x_1^2 x_j^-2 for every chord x and j = 2..n, each in F_{t,n}.
  std::vector<FStarElement> extra_relators;
};

TsaranovPresentation tsaranov_presentation(int a, int b, int t);

} // namespace coxy
