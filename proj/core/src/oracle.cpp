#include "coxy/oracle.hpp"

#include <boost/container_hash/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

namespace coxy {

void OracleReport::merge(const OracleReport& other) {
  checks_ += other.checks_;
  failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
}

std::string OracleReport::str(std::size_t max_details) const {
  std::string out = fmt::format("{} {} ({} checks", passed() ? "PASS" : "FAIL", id_, checks_);
  if (!passed())
    out += fmt::format(", {} failures", failures_.size());
  out += ")";
  if (seed_ != 0)
    out += fmt::format(" seed={}", seed_);
  for (std::size_t k = 0; k < failures_.size() && k < max_details; ++k) {
    const auto& f = failures_[k];
    out += fmt::format("\n  {}: inputs [{}] expected [{}] got [{}]", f.check, f.inputs, f.expected, f.got);
  }
  if (failures_.size() > max_details)
    out += fmt::format("\n  ... {} more", failures_.size() - max_details);
  return out;
}

SemidirectElement sd_mul_mutated(const SemidirectElement& g, const SemidirectElement& h) {
  return {compose(g.perm, h.perm), fstar_mul(g.f, sn_act_f(g.perm, h.f))};
}

EdgeWord random_word(std::span<const std::string> alphabet, Rng& rng, std::size_t length) {
  EdgeWord w;
  if (alphabet.empty())
    return w;
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (std::size_t k = 0; k < length; ++k)
    w.push_back(alphabet[pick(rng)]);
  return w;
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  // Fisher-Yates with an explicit distribution keeps the sequence portable.
  for (std::size_t k = images.size(); k > 1; --k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    std::swap(images[k - 1], images[pick(rng)]);
  }
  return Permutation::from_images(std::move(images));
}

namespace {

std::vector<std::string> labels_of(const Graph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges())
    out.push_back(e.label);
  return out;
}

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Vertex draw_vertex(Rng& rng, int n) {
  return std::uniform_int_distribution<Vertex>(1, n)(rng);
}

std::vector<Vertex> distinct_vertices(Rng& rng, int n, int k) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), all.size() - 1);
    std::swap(all[static_cast<std::size_t>(i)], all[pick(rng)]);
  }
  all.resize(static_cast<std::size_t>(k));
  return all;
}

} // namespace

OracleReport check_relators(const Context& ctx, const SdProduct& mul) {
  OracleReport r("relators");
  const Graph& g = ctx.graph();
  std::map<std::string, SemidirectElement, std::less<>> images;
  for (const auto& e : g.edges())
    images.emplace(e.label, phi_letter(ctx, e.label));

  for (const auto& w : relators(g, ctx.tree(), PresentationKind::coxy).edge_relators) {
    SemidirectElement acc = sd_identity(ctx.n());
    for (const auto& l : w)
      acc = mul(acc, images.find(l)->second);
    r.expect(acc.is_identity(), [&] {
      return OracleFailure{"phi-kills-relator", w.str(), "() | 1", acc.str()};
    });
  }
  for (const auto& w : relators(g, ctx.tree(), PresentationKind::symmetric).edge_relators) {
    Permutation p = perm_of_word(g, w);
    r.expect(p.is_identity(), [&] {
      return OracleFailure{"perm-kills-relator", w.str(), "()", p.str()};
    });
  }
  return r;
}

std::size_t bfs_group_order(std::span<const Permutation> gens, std::size_t guard) {
  if (gens.empty())
    return 1;
  const int n = gens.front().size();
  for (const auto& g : gens)
    if (g.size() != n)
      throw SizeMismatch("generators of different degree");
  struct Hash {
    std::size_t operator()(const std::vector<Vertex>& v) const { return boost::hash_range(v.begin(), v.end()); }
  };
  std::unordered_set<std::vector<Vertex>, Hash> seen;
  std::deque<Permutation> queue{Permutation(n)};
  seen.insert(queue.front().images());
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation q = p * g;
      if (seen.insert(q.images()).second) {
        if (seen.size() > guard)
          throw GuardExceeded(fmt::format("group order exceeds {}", guard));
        queue.push_back(std::move(q));
      }
    }
  }
  return seen.size();
}

std::vector<long long> component_vector(const FStarElement& f, std::span<const std::string> chords) {
  const auto n = static_cast<std::size_t>(f.size());
  std::vector<long long> out(chords.size() * n, 0);
  for (std::size_t slot = 0; slot < n; ++slot) {
    for (const auto& l : f.components()[slot].letters()) {
      auto it = std::find(chords.begin(), chords.end(), l.chord);
      if (it == chords.end())
        throw UnknownLabel(l.chord);
      out[static_cast<std::size_t>(it - chords.begin()) * n + slot] += l.exp;
    }
  }
  return out;
}

std::size_t ab_rank(const std::vector<std::vector<long long>>& rows) {
  using boost::multiprecision::cpp_int;
  if (rows.empty())
    return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<cpp_int>> m;
  for (const auto& row : rows) {
    if (row.size() != cols)
      throw SizeMismatch("rows of different length");
    m.emplace_back(row.begin(), row.end());
  }
  std::size_t rank = 0;
  cpp_int prev = 1;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t p = rank;
    while (p < m.size() && m[p][col] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t ab_rank(std::span<const FStarElement> elements, std::span<const std::string> chords) {
  std::vector<std::vector<long long>> rows;
  for (const auto& f : elements)
    rows.push_back(component_vector(f, chords));
  return ab_rank(rows);
}

std::vector<FStarElement> kernel_generators(const Context& ctx) {
  std::vector<FStarElement> out;
  for (const auto& x : ctx.chords())
    for (Vertex i = 1; i < ctx.n(); ++i)
      out.push_back(phi(ctx, psi_gen(ctx, {x, i, i + 1})).f);
  return out;
}

namespace {

std::vector<std::string> chord_names(int t) {
  static const char* base[] = {"x", "y", "z", "w", "v", "u"};
  std::vector<std::string> out;
  for (int k = 0; k < t; ++k)
    out.push_back(k < 6 ? std::string(base[k]) : fmt::format("c{}", k + 1));
  return out;
}

FStarElement erase_chord(const FStarElement& p, const std::string& chord) {
  std::vector<ReducedWord> out;
  for (const auto& c : p.components()) {
    std::vector<Letter> kept;
    for (const auto& l : c.letters())
      if (l.chord != chord)
        kept.push_back(l);
    out.push_back(ReducedWord::reduce(kept));
  }
  return FStarElement(std::move(out));
}

} // namespace

OracleReport identity_suite(std::uint64_t seed, int n, int t, int trials) {
  if (t < 1 || n < 4)
    throw DomainError("identity suite needs t >= 1 and n >= 4");
  OracleReport r("identities", seed);
  Rng rng(seed);
  const auto names = chord_names(t);
  auto chord = [&] { return names[draw(rng, 0, names.size() - 1)]; };
  auto X = [&](const std::string& c, Vertex i, Vertex j) { return mu(AGenerator{c, i, j}, n); };
  auto inv = [](const FStarElement& p) { return fstar_inv(p); };
  auto comm = [&](const FStarElement& a, const FStarElement& b) { return a * b * inv(a) * inv(b); };
  auto fail = [](std::string check, std::string inputs, const FStarElement& lhs, const FStarElement& rhs) {
    return OracleFailure{std::move(check), std::move(inputs), rhs.str(), lhs.str()};
  };
  const FStarElement one(n);

  for (int trial = 0; trial < trials; ++trial) {
    auto x = chord();
    auto y = chord();
    auto z = chord();
    auto v4 = distinct_vertices(rng, n, 4);
    const Vertex i = v4[0], j = v4[1], k = v4[2], l = v4[3];
    const std::string in = fmt::format("x={} y={} z={} i={} j={} k={} l={}", x, y, z, i, j, k, l);

    auto lhs = X(x, i, i);
    r.expect(lhs == one, [&] { return fail("unit", in, lhs, one); });

    Vertex a = draw_vertex(rng, n), b = draw_vertex(rng, n), c = draw_vertex(rng, n);
    auto abin = fmt::format("x={} a={} b={} c={}", x, a, b, c);
    lhs = X(x, a, b) * X(x, b, c);
    r.expect(lhs == X(x, a, c), [&] { return fail("transitive", abin, lhs, X(x, a, c)); });
    lhs = X(x, b, c) * X(x, a, b);
    r.expect(lhs == X(x, a, c), [&] { return fail("transitive-swapped", abin, lhs, X(x, a, c)); });

    lhs = comm(X(x, i, j), X(y, k, l));
    r.expect(lhs == one, [&] { return fail("disjoint-commute", in, lhs, one); });

    lhs = comm(X(x, i, j), X(z, i, k) * X(y, k, l) * X(z, k, i));
    r.expect(lhs == one, [&] { return fail("conjugate-commute", in, lhs, one); });
    lhs = comm(X(x, i, j), X(z, k, i) * X(y, k, l) * X(z, i, k));
    r.expect(lhs == one, [&] { return fail("conjugate-commute-inner", in, lhs, one); });

    lhs = X(x, j, k) * X(y, k, i) * X(x, i, j);
    auto rhs = X(y, j, i) * X(x, i, k) * X(y, k, j);
    r.expect(lhs == rhs, [&] { return fail("triangle-swap", in, lhs, rhs); });
    lhs = X(x, j, k) * X(y, i, k) * X(x, i, j);
    rhs = X(y, i, j) * X(x, i, k) * X(y, j, k);
    r.expect(lhs == rhs, [&] { return fail("triangle-swap-inverted", in, lhs, rhs); });
    lhs = X(x, k, j) * X(y, i, k) * X(x, j, i);
    rhs = X(y, i, j) * X(x, k, i) * X(y, j, k);
    r.expect(lhs == rhs, [&] { return fail("triangle-swap-reversed", in, lhs, rhs); });

    // Four distinct indices s, i, j, k with chords u, v, w.
    const Vertex s = l;
    const auto& u = x;
    const auto& v = y;
    const auto& w = z;
    lhs = X(u, s, i) * X(v, i, j) * X(u, j, s) * X(w, s, k);
    rhs = X(w, s, k) * X(u, k, i) * X(v, i, j) * X(u, j, k);
    r.expect(lhs == rhs, [&] { return fail("four-index-shift", in, lhs, rhs); });

    lhs = X(x, i, j);
    r.expect(in_ftn(lhs), [&] { return fail("image-in-kernel-of-ab", in, lhs, one); });

    // Erasing one chord is a homomorphism.
    FStarElement p = one;
    FStarElement q = one;
    for (std::size_t step = draw(rng, 1, 4); step > 0; --step)
      p = p * X(chord(), draw_vertex(rng, n), draw_vertex(rng, n));
    for (std::size_t step = draw(rng, 1, 4); step > 0; --step)
      q = q * inv(X(chord(), draw_vertex(rng, n), draw_vertex(rng, n)));
    auto e = chord();
    lhs = erase_chord(p * q, e);
    rhs = erase_chord(p, e) * erase_chord(q, e);
    r.expect(lhs == rhs, [&] {
      return fail("retract", fmt::format("p=[{}] q=[{}] erase={}", p.str(), q.str(), e), lhs, rhs);
    });

    if (t == 1) {
      auto g1 = X(x, draw_vertex(rng, n), draw_vertex(rng, n));
      auto g2 = X(x, draw_vertex(rng, n), draw_vertex(rng, n));
      lhs = g1 * g2;
      rhs = g2 * g1;
      r.expect(lhs == rhs, [&] { return fail("single-chord-commute", g1.str() + " ; " + g2.str(), lhs, rhs); });
    }
  }
  return r;
}

OracleReport parabolic_check(const Context& ctx, const Graph& sub, int samples, std::uint64_t seed) {
  OracleReport r("parabolic", seed);
  std::vector<std::string> labels = labels_of(sub);
  if (labels.empty())
    throw GraphError("subgraph has no edges");
  for (const auto& e : sub.edges()) {
    auto k = ctx.graph().find(e.label);
    if (!k)
      throw GraphError(fmt::format("subgraph edge {} is not in the graph", e.label));
    const Edge& big = ctx.graph().edges()[*k];
    if (std::min(big.a, big.b) != std::min(e.a, e.b) || std::max(big.a, big.b) != std::max(e.a, e.b))
      throw GraphError(fmt::format("subgraph edge {} has different endpoints", e.label));
  }
  Graph local = edge_subgraph(ctx.graph(), labels);
  if (!is_connected(local))
    throw GraphError("subgraph is disconnected");
  if (local.vertex_count() == 4 && is_complete(local))
    throw GraphError("subgraph is K_4");
  Context sctx(local);
  const bool tree = local.edge_count() + 1 == static_cast<std::size_t>(local.vertex_count());

  auto trivial_rel = relators(local, sctx.tree(), PresentationKind::coxy).edge_relators;
  auto all_rel = relators(local, sctx.tree(), PresentationKind::symmetric).edge_relators;
  std::vector<EdgeWord> cycle_rel(all_rel.begin() + static_cast<std::ptrdiff_t>(trivial_rel.size()), all_rel.end());

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    EdgeWord w;
    switch (s % 3) {
    case 0:
      w = random_word(labels, rng, draw(rng, 0, 14));
      break;
    case 1: {
      auto u = random_word(labels, rng, draw(rng, 0, 6));
      w = u + trivial_rel[draw(rng, 0, trivial_rel.size() - 1)] + u.inverse();
      break;
    }
    default: {
      auto u = random_word(labels, rng, draw(rng, 0, 6));
      const auto& pool = cycle_rel.empty() ? trivial_rel : cycle_rel;
      w = u + pool[draw(rng, 0, pool.size() - 1)] + u.inverse() + random_word(labels, rng, draw(rng, 0, 2));
      break;
    }
    }
    bool big = is_trivial(ctx, w).is_trivial();
    bool small = is_trivial(sctx, w).is_trivial();
    r.expect(big == small, [&] {
      return OracleFailure{"same-verdict", w.str(), small ? "trivial" : "nontrivial", big ? "trivial" : "nontrivial"};
    });
    if (tree) {
      bool perm_trivial = perm_of_word(local, w).is_identity();
      r.expect(small == perm_trivial, [&] {
        return OracleFailure{"tree-word-trivial-iff-perm", w.str(), perm_trivial ? "trivial" : "nontrivial",
                             small ? "trivial" : "nontrivial"};
      });
    }
  }
  return r;
}

OracleReport check_perm_consistency(const Context& ctx, int samples, std::uint64_t seed) {
  OracleReport r("perm-consistency", seed);
  Rng rng(seed);
  auto labels = labels_of(ctx.graph());
  for (int s = 0; s < samples; ++s) {
    auto w = random_word(labels, rng, draw(rng, 0, 30));
    auto lhs = phi(ctx, w).perm;
    auto rhs = perm_of_word(ctx.graph(), w);
    r.expect(lhs == rhs, [&] { return OracleFailure{"phi-perm-part", w.str(), rhs.str(), lhs.str()}; });
  }
  return r;
}

OracleReport check_round_trips(const Context& ctx, int samples, std::uint64_t seed) {
  OracleReport r("round-trips", seed);
  Rng rng(seed);
  const int n = ctx.n();
  for (int s = 0; s < samples; ++s) {
    auto sigma = random_permutation(n, rng);
    auto w = psi_perm(ctx, sigma);
    auto got = phi(ctx, w);
    SemidirectElement want(sigma);
    r.expect(got == want, [&] { return OracleFailure{"phi-psi-perm", sigma.str(), want.str(), got.str()}; });
    bool tree_only = std::all_of(w.begin(), w.end(), [&](const std::string& l) { return ctx.tree().contains(l); });
    r.expect(tree_only, [&] { return OracleFailure{"psi-perm-uses-tree", sigma.str(), "tree edges", w.str()}; });
  }
  for (const auto& x : ctx.chords()) {
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        AGenerator gen{x, i, j};
        auto got = phi(ctx, psi_gen(ctx, gen));
        SemidirectElement want(mu(gen, n));
        r.expect(got == want, [&] { return OracleFailure{"phi-psi-gen", gen.str(), want.str(), got.str()}; });
      }
    }
  }
  for (const auto& e : ctx.graph().edges()) {
    EdgeWord u{e.label};
    auto back = psi(ctx, phi(ctx, u));
    auto v = equal(ctx, back, u);
    r.expect(v.is_trivial(), [&] { return OracleFailure{"psi-phi-generator", e.label, e.label, back.str()}; });
  }
  auto labels = labels_of(ctx.graph());
  for (int s = 0; s < samples; ++s) {
    auto w = random_word(labels, rng, draw(rng, 0, 16));
    auto image = phi(ctx, w);
    auto lifted = lift_to_a(image.f);
    auto f = mu(lifted, n);
    r.expect(f == image.f, [&] { return OracleFailure{"lift", image.f.str(), image.f.str(), f.str()}; });
    auto back = phi(ctx, psi(ctx, image));
    r.expect(back == image, [&] { return OracleFailure{"phi-psi-phi", w.str(), image.str(), back.str()}; });
  }
  return r;
}

OracleReport check_gamma_laws(const Context& ctx) {
  OracleReport r("gamma-laws");
  const int n = ctx.n();
  const Graph& g = ctx.graph();
  for (const auto& cyc : ctx.cycles()) {
    const auto tau = cycle_rotation(cyc, n);
    const Vertex first = cyc.start();
    const Vertex last = cyc.end();
    std::vector<SemidirectElement> img(static_cast<std::size_t>(n) + 1);
    for (Vertex a = 1; a <= n; ++a)
      img[static_cast<std::size_t>(a)] = phi(ctx, gamma(ctx, cyc, a));
    auto G = [&](Vertex a) -> const SemidirectElement& { return img[static_cast<std::size_t>(a)]; };

    for (Vertex a = 1; a <= n; ++a) {
      SemidirectElement want(tau, mu(AGenerator{cyc.chord, a, last}, n));
      r.expect(G(a) == want, [&] {
        return OracleFailure{"gamma-image", fmt::format("{} a={}", cyc.chord, a), want.str(), G(a).str()};
      });
      auto lhs = G(a) * G(last);
      auto rhs = G(first) * G(tau(a));
      r.expect(lhs == rhs, [&] {
        return OracleFailure{"gamma-last", fmt::format("{} j={}", cyc.chord, a), rhs.str(), lhs.str()};
      });
      for (Vertex b = 1; b <= n; ++b) {
        auto l2 = G(b) * G(tau(a));
        auto r2 = G(a) * G(tau(b));
        r.expect(l2 == r2, [&] {
          return OracleFailure{"gamma-swap", fmt::format("{} i={} j={}", cyc.chord, a, b), r2.str(), l2.str()};
        });
      }
    }
    for (const auto& e : g.edges()) {
      auto lhs = perm_of_word(g, tilde(ctx, cyc, e.label));
      auto rhs = tau * Permutation::transposition(n, e.a, e.b) * tau.inverse();
      r.expect(lhs == rhs, [&] {
        return OracleFailure{"tilde-perm", fmt::format("{} u={}", cyc.chord, e.label), rhs.str(), lhs.str()};
      });
    }
    EdgeWord w = EdgeWord{cyc.chord} + gamma(ctx, cyc, first).inverse() + gamma(ctx, cyc, last);
    auto got = phi(ctx, w);
    SemidirectElement want(Permutation::transposition(n, first, last));
    r.expect(got == want, [&] { return OracleFailure{"chord-from-gammas", cyc.chord, want.str(), got.str()}; });
  }
  return r;
}

OracleReport check_action_laws(const Context& ctx, int samples, std::uint64_t seed) {
  OracleReport r("action-laws", seed);
  if (ctx.t() == 0 || ctx.tree().edges.empty())
    return r;
  Rng rng(seed);
  const int n = ctx.n();
  const auto& tree = ctx.tree().edges;
  for (int s = 0; s < samples; ++s) {
    const auto& cyc = ctx.cycles()[draw(rng, 0, ctx.cycles().size() - 1)];
    auto sigma = random_word(tree, rng, draw(rng, 0, 6));
    auto p = perm_of_word(ctx.graph(), sigma);
    Vertex a = draw_vertex(rng, n);
    auto lhs = sd_inv(phi(ctx, tilde(ctx, cyc, sigma))) * phi(ctx, gamma(ctx, cyc, a)) * phi(ctx, sigma);
    auto rhs = phi(ctx, gamma(ctx, cyc, p(a)));
    r.expect(lhs == rhs, [&] {
      return OracleFailure{"tilde-action", fmt::format("{} sigma=[{}] a={}", cyc.chord, sigma.str(), a), rhs.str(),
                           lhs.str()};
    });
    Vertex i = draw_vertex(rng, n);
    Vertex j = draw_vertex(rng, n);
    auto l2 = phi(ctx, sigma.inverse() + psi_gen(ctx, {cyc.chord, i, j}) + sigma);
    auto r2 = phi(ctx, psi_gen(ctx, {cyc.chord, p(i), p(j)}));
    r.expect(l2 == r2, [&] {
      return OracleFailure{"conjugation-action", fmt::format("{} sigma=[{}] i={} j={}", cyc.chord, sigma.str(), i, j),
                           r2.str(), l2.str()};
    });
  }
  return r;
}

OracleReport check_tilde_conjugation(const Context& ctx) {
  OracleReport r("tilde-conjugation");
  const int n = ctx.n();
  if (n < 3)
    return r;
  for (const auto& cyc : ctx.cycles()) {
    for (const auto& e : ctx.graph().edges()) {
      Vertex c = 1;
      while (e.touches(c))
        ++c;
      auto gc = phi(ctx, gamma(ctx, cyc, c));
      auto lhs = phi(ctx, tilde(ctx, cyc, e.label));
      auto rhs = gc * phi_letter(ctx, e.label) * sd_inv(gc);
      r.expect(lhs == rhs, [&] {
        return OracleFailure{"tilde-is-conjugation", fmt::format("{} u={} c={}", cyc.chord, e.label, c), rhs.str(),
                             lhs.str()};
      });
    }
  }
  return r;
}

OracleReport check_kernel_rank(const Context& ctx) {
  OracleReport r("kernel-rank");
  auto gens = kernel_generators(ctx);
  auto chords = ctx.chords();
  auto rank = static_cast<long long>(ab_rank(gens, chords));
  const long long want = static_cast<long long>(ctx.t()) * (ctx.n() - 1);
  r.expect(rank == want, [&] {
    return OracleFailure{"ab-rank", fmt::format("n={} t={}", ctx.n(), ctx.t()), std::to_string(want),
                         std::to_string(rank)};
  });
  for (const auto& f : gens)
    r.expect(in_ftn(f), [&] { return OracleFailure{"generator-in-ftn", f.str(), "ab = 0", "nonzero"}; });
  return r;
}

std::vector<OracleReport> full_suite(const Context& ctx, std::uint64_t seed, int trials) {
  std::vector<OracleReport> out;
  out.push_back(check_relators(ctx));
  out.push_back(check_perm_consistency(ctx, trials, seed));
  out.push_back(check_round_trips(ctx, trials, seed));
  out.push_back(check_gamma_laws(ctx));
  out.push_back(check_action_laws(ctx, trials, seed));
  if (!ctx.is_k4())
    out.push_back(check_tilde_conjugation(ctx));
  out.push_back(check_kernel_rank(ctx));

  if (ctx.n() <= 9) {
    OracleReport order("tree-image-order");
    std::vector<Permutation> gens;
    for (const auto& l : ctx.tree().edges) {
      const Edge& e = ctx.graph().edge(l);
      gens.push_back(Permutation::transposition(ctx.n(), e.a, e.b));
    }
    std::size_t want = 1;
    for (int k = 2; k <= ctx.n(); ++k)
      want *= static_cast<std::size_t>(k);
    std::size_t got = bfs_group_order(gens);
    order.expect(got == want, [&] {
      return OracleFailure{"order", fmt::format("n={}", ctx.n()), std::to_string(want), std::to_string(got)};
    });
    out.push_back(order);
  }

  OracleReport para("parabolic", seed);
  if (ctx.n() >= 2) {
    std::vector<Edge> tree_edges;
    for (const auto& l : ctx.tree().edges)
      tree_edges.push_back(ctx.graph().edge(l));
    para.merge(parabolic_check(ctx, Graph(ctx.n(), tree_edges), trials, seed));
    for (const auto& cyc : ctx.cycles()) {
      std::vector<Edge> edges{ctx.graph().edge(cyc.chord)};
      for (const auto& l : cyc.path)
        edges.push_back(ctx.graph().edge(l));
      para.merge(parabolic_check(ctx, Graph(ctx.n(), edges), trials, seed));
    }
  }
  out.push_back(para);

  if (ctx.t() >= 1)
    out.push_back(identity_suite(seed, std::max(ctx.n(), 4), ctx.t(), trials));
  return out;
}

} // namespace coxy
