#include "coxy/presentation.hpp"

#include "coxy/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>

namespace coxy {

std::string AGenerator::str() const {
  if (i < 10 && j < 10 && i >= 0 && j >= 0)
    return fmt::format("{}_{{{}{}}}", chord, i, j);
  return fmt::format("{}_{{{},{}}}", chord, i, j);
}

AWord inverse(const AWord& w) {
  AWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(it->inverse());
  return out;
}

std::string to_string(const AWord& w) {
  if (w.empty())
    return "1";
  std::vector<std::string> parts;
  for (const auto& l : w)
    parts.push_back(l.exp == 1 ? l.gen.str() : l.gen.str() + "^-1");
  return fmt::format("{}", fmt::join(parts, " "));
}

namespace {

int to_int(std::string_view s, std::string_view token) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError(fmt::format("bad index in '{}'", token));
  return v;
}

ALetter parse_a_letter(std::string_view tok) {
  int exp = 1;
  if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
    exp = -1;
    tok.remove_suffix(3);
  }
  auto us = tok.find("_{");
  if (us == std::string_view::npos || tok.back() != '}')
    throw ParseError(fmt::format("expected x_{{ij}}, got '{}'", tok));
  std::string_view chord = tok.substr(0, us);
  std::string_view idx = tok.substr(us + 2, tok.size() - us - 3);
  if (!is_valid_label(chord))
    throw ParseError(fmt::format("bad chord label in '{}'", tok));
  int i = 0;
  int j = 0;
  if (auto comma = idx.find(','); comma != std::string_view::npos) {
    i = to_int(idx.substr(0, comma), tok);
    j = to_int(idx.substr(comma + 1), tok);
  } else if (idx.size() == 2) {
    i = to_int(idx.substr(0, 1), tok);
    j = to_int(idx.substr(1, 1), tok);
  } else {
    throw ParseError(fmt::format("ambiguous indices in '{}'", tok));
  }
  return {{std::string(chord), i, j}, exp};
}

} // namespace

AWord parse_a_word(std::string_view text) {
  AWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) {
      auto tok = text.substr(i, j - i);
      if (tok != "1")
        out.push_back(parse_a_letter(tok));
    }
    i = j;
  }
  return out;
}

FStarElement mu(const AGenerator& gen, int n) {
  if (gen.i < 1 || gen.j < 1 || gen.i > n || gen.j > n)
    throw DomainError(fmt::format("generator {} outside 1..{}", gen.str(), n));
  if (gen.i == gen.j)
    return FStarElement(n);
  std::vector<ReducedWord> c(static_cast<std::size_t>(n));
  c[static_cast<std::size_t>(gen.i - 1)] = ReducedWord(Letter{gen.chord, 1});
  c[static_cast<std::size_t>(gen.j - 1)] = ReducedWord(Letter{gen.chord, -1});
  return FStarElement(std::move(c));
}

FStarElement mu(const ALetter& l, int n) {
  return l.exp == 1 ? mu(l.gen, n) : mu(l.gen.swapped(), n);
}

FStarElement mu(const AWord& w, int n) {
  FStarElement out(n);
  for (const auto& l : w)
    out = out * mu(l, n);
  return out;
}

AGenerator act_a(const Permutation& s, const AGenerator& gen) {
  return {gen.chord, s(gen.i), s(gen.j)};
}

AWord simplify(const AWord& w) {
  AWord out;
  for (const auto& raw : w) {
    AGenerator g = raw.exp == 1 ? raw.gen : raw.gen.swapped();
    if (g.i == g.j)
      continue;
    if (!out.empty() && out.back().gen.chord == g.chord && out.back().gen.j == g.i) {
      out.back().gen.j = g.j;
      if (out.back().gen.i == out.back().gen.j)
        out.pop_back();
      continue;
    }
    out.push_back({g, 1});
  }
  return out;
}

AWord lift_to_a(const FStarElement& f) {
  if (!in_ftn(f))
    throw DomainError("element is outside F_{t,n}");
  const int n = f.size();
  AWord out;
  if (n == 0)
    return out;
  // Push every slot below n onto slot n; what remains there is a commutator.
  std::vector<Letter> pushed;
  for (Vertex i = 1; i < n; ++i) {
    for (const auto& l : f[i].letters()) {
      out.push_back({{l.chord, i, n}, l.exp});
      pushed.push_back(l.inverse());
    }
  }
  ReducedWord rest = ReducedWord::reduce(pushed).inverse() * f[n];
  if (rest.empty())
    return simplify(out);
  if (n < 3)
    throw DomainError("commutator part needs at least three slots");

  auto lift_at = [n](const std::vector<Letter>& letters, Vertex other) {
    AWord w;
    for (const auto& l : letters)
      w.push_back({{l.chord, n, other}, l.exp});
    return w;
  };
  std::vector<Letter> word = rest.letters();
  for (;;) {
    std::size_t p = 0;
    while (p + 1 < word.size() && word[p].chord <= word[p + 1].chord)
      ++p;
    if (p + 1 >= word.size())
      break;
    // u a b v = (u [a,b] u^-1)(u b a v)
    std::vector<Letter> u(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
    AWord conj = lift_at(u, 1);
    ALetter a{{word[p].chord, n, 1}, word[p].exp};
    ALetter b{{word[p + 1].chord, n, 2}, word[p + 1].exp};
    AWord factor = conj;
    factor.insert(factor.end(), {a, b, a.inverse(), b.inverse()});
    AWord back = inverse(conj);
    factor.insert(factor.end(), back.begin(), back.end());
    out.insert(out.end(), factor.begin(), factor.end());
    std::swap(word[p], word[p + 1]);
    word = ReducedWord::reduce(word).letters();
  }
  if (!word.empty())
    throw Error("internal: commutator decomposition left a residue");
  return simplify(out);
}

std::string_view to_string(PresentationKind kind) {
  switch (kind) {
  case PresentationKind::coxeter: return "coxeter";
  case PresentationKind::coxy: return "coxy";
  case PresentationKind::symmetric: return "symmetric";
  case PresentationKind::atn: return "atn";
  }
  return "?";
}

std::optional<PresentationKind> presentation_from_string(std::string_view name) {
  for (auto k : {PresentationKind::coxeter, PresentationKind::coxy, PresentationKind::symmetric,
                 PresentationKind::atn})
    if (to_string(k) == name)
      return k;
  return std::nullopt;
}

std::string RelatorSet::str() const {
  std::string out;
  for (const auto& w : edge_relators)
    out += w.str() + "\n";
  for (const auto& w : a_relators)
    out += to_string(w) + "\n";
  return out;
}

std::vector<AWord> atn_relators(std::span<const std::string> chords, int n) {
  std::vector<AWord> out;
  for (const auto& x : chords)
    for (Vertex i = 1; i <= n; ++i)
      out.push_back({{{x, i, i}, 1}});
  for (const auto& x : chords)
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = 1; j <= n; ++j)
        for (Vertex k = 1; k <= n; ++k) {
          if (i == j || j == k || i == k)
            continue;
          out.push_back({{{x, i, j}, 1}, {{x, j, k}, 1}, {{x, i, k}, -1}});
          out.push_back({{{x, j, k}, 1}, {{x, i, j}, 1}, {{x, i, k}, -1}});
        }
  for (std::size_t xa = 0; xa < chords.size(); ++xa)
    for (std::size_t ya = xa; ya < chords.size(); ++ya)
      for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = 1; j <= n; ++j)
          for (Vertex k = 1; k <= n; ++k)
            for (Vertex l = 1; l <= n; ++l) {
              if (i == j || i == k || i == l || j == k || j == l || k == l)
                continue;
              if (xa == ya && std::pair{i, j} >= std::pair{k, l})
                continue;
              AGenerator x{chords[xa], i, j};
              AGenerator y{chords[ya], k, l};
              out.push_back({{x, 1}, {y, 1}, {x, -1}, {y, -1}});
            }
  return out;
}

RelatorSet relators(const Graph& g, PresentationKind which) {
  if (which == PresentationKind::symmetric || which == PresentationKind::atn)
    return relators(g, spanning_tree(g), which);
  return relators(g, SpanningTree{}, which);
}

RelatorSet relators(const Graph& g, const SpanningTree& tree, PresentationKind which) {
  RelatorSet out;
  out.kind = which;
  if (which == PresentationKind::atn) {
    std::vector<std::string> chords;
    for (const auto& c : basic_cycles(g, tree))
      chords.push_back(c.chord);
    out.a_relators = atn_relators(chords, g.vertex_count());
    return out;
  }
  const auto& edges = g.edges();
  for (const auto& e : edges)
    out.edge_relators.push_back({e.label, e.label});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& u = edges[i].label;
      const auto& v = edges[j].label;
      bool meet = edges[i].touches(edges[j].a) || edges[i].touches(edges[j].b);
      out.edge_relators.push_back(power(EdgeWord{u, v}, meet ? 3 : 2));
    }
  }
  if (which == PresentationKind::coxeter)
    return out;
  for (Vertex c = 1; c <= g.vertex_count(); ++c) {
    std::vector<std::string> at;
    for (auto k : g.incident(c))
      at.push_back(edges[k].label);
    std::sort(at.begin(), at.end());
    for (std::size_t i = 0; i < at.size(); ++i)
      for (std::size_t j = i + 1; j < at.size(); ++j)
        for (std::size_t k = j + 1; k < at.size(); ++k) {
          EdgeWord conj{at[j], at[k], at[j]};
          out.edge_relators.push_back(EdgeWord{at[i]} + conj + EdgeWord{at[i]} + conj);
        }
  }
  if (which == PresentationKind::coxy)
    return out;
  if (!is_connected(g))
    throw GraphError("cycle relators need a connected graph");
  for (const auto& c : basic_cycles(g, tree)) {
    EdgeWord lhs;
    EdgeWord rhs;
    for (int i = 1; i < c.length(); ++i) {
      lhs.push_back(c.edge_at(i));
      rhs.push_back(c.edge_at(i + 1));
    }
    out.edge_relators.push_back(lhs + rhs.inverse());
  }
  return out;
}

TsaranovPresentation tsaranov_presentation(int a, int b, int t) {
  if (t < 0 || a < t || b < t)
    throw DomainError(fmt::format("tsaranov parameters need a, b >= t >= 0; got {} {} {}", a, b, t));
  std::vector<Edge> edges{{"u0", 1, 2}};
  Vertex next = 3;
  for (int k = 1; k <= t; ++k, ++next) {
    edges.push_back({fmt::format("p{}", k), 1, next});
    edges.push_back({fmt::format("q{}", k), 2, next});
  }
  for (int k = 1; k <= a - t; ++k, ++next)
    edges.push_back({fmt::format("s{}", k), 1, next});
  for (int k = 1; k <= b - t; ++k, ++next)
    edges.push_back({fmt::format("r{}", k), 2, next});

  TsaranovPresentation out;
  out.graph = Graph(next - 1, std::move(edges));
  out.n = out.graph.vertex_count();
  for (const auto& c : basic_cycles(out.graph, spanning_tree(out.graph)))
    out.chords.push_back(c.chord);
  out.t = static_cast<int>(out.chords.size());
  if (out.t > 0) {
    out.family = fmt::format("x_i^2 x_j^-2 (x in {{{}}}, 1 <= i, j <= {})", fmt::join(out.chords, ", "), out.n);
    for (const auto& x : out.chords) {
      for (Vertex j = 2; j <= out.n; ++j) {
        std::vector<ReducedWord> c(static_cast<std::size_t>(out.n));
        c[0] = ReducedWord::reduce(std::vector<Letter>{{x, 1}, {x, 1}});
        c[static_cast<std::size_t>(j - 1)] = ReducedWord::reduce(std::vector<Letter>{{x, -1}, {x, -1}});
        out.extra_relators.emplace_back(std::move(c));
      }
    }
  }
  return out;
}

} // namespace coxy
