#include "cli.hpp"

#include "coxy/oracle.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace coxy::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

class Output {
public:
  explicit Output(bool porcelain) : porcelain_(porcelain) {}

  bool porcelain() const { return porcelain_; }
  void line(const std::string& s) { text_ += s + "\n"; }
  void raw(const std::string& s) { text_ += s; }
  template <class T>
  void kv(std::string_view key, const T& value) {
    text_ += fmt::format("{}={}\n", key, value);
  }
  std::string take() { return std::move(text_); }

private:
  bool porcelain_;
  std::string text_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError(fmt::format("cannot read {}", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_labels(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  return EdgeWord::parse(s).letters();
}

Context load(const std::string& path, const std::string& tree) {
  Graph g = parse_graph(read_file(path));
  if (tree.empty())
    return Context(std::move(g));
  auto labels = split_labels(tree);
  return build_context(std::move(g), labels);
}

EdgeWord load_word(const Context& ctx, const std::string& text) {
  EdgeWord w = EdgeWord::parse(text);
  for (const auto& l : w)
    ctx.graph().edge(l);
  return w;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string classification_id(Classification c) {
  switch (c) {
  case Classification::symmetric_group: return "symmetric_group";
  case Classification::virtually_abelian: return "virtually_abelian";
  case Classification::contains_free_subgroup: return "contains_free_subgroup";
  }
  return "?";
}

void cmd_analyze(Output& o, const Context& ctx) {
  auto r = structure_report(ctx);
  if (o.porcelain()) {
    o.kv("n", r.n);
    o.kv("t", r.t);
    o.kv("edges", ctx.graph().edge_count());
    o.kv("classification", classification_id(r.classification));
    o.kv("group", r.group_description());
    o.kv("rank", r.kernel_ab_rank);
    o.kv("is_k4", bool_str(r.is_k4));
    o.kv("torsion_free_kernel", bool_str(r.torsion_free_kernel));
    o.kv("residually_finite", bool_str(r.residually_finite));
    o.kv("word_problem_exact", bool_str(r.word_problem_exact));
    o.kv("tree", fmt::format("{}", fmt::join(ctx.tree().edges, ",")));
    for (const auto& c : ctx.cycles())
      o.kv("cycle." + c.chord, fmt::format("{}", fmt::join(c.vertices, ",")));
    return;
  }
  o.line(fmt::format("n={} edges={}", r.n, ctx.graph().edge_count()));
  o.line(fmt::format("t={} {}, {}", r.t, to_string(r.classification), r.group_description()));
  o.line(fmt::format("kernel abelianization: Z^{}", r.kernel_ab_rank));
  o.line(fmt::format("flags: isK4={} torsionFreeKernel={} residuallyFinite={} wordProblemExact={}", yes_no(r.is_k4),
                     yes_no(r.torsion_free_kernel), yes_no(r.residually_finite), yes_no(r.word_problem_exact)));
  if (r.is_k4)
    o.line("note: K4 answers are computed in the quotient S_4 ⋉ F_{3,4}");
  o.line(fmt::format("spanning tree: {}", fmt::join(ctx.tree().edges, " ")));
  if (ctx.cycles().empty())
    return;
  o.line("basic cycles:");
  for (const auto& c : ctx.cycles()) {
    std::vector<std::string> local;
    std::vector<std::string> edges;
    for (int i = 1; i <= c.length(); ++i) {
      local.push_back(fmt::format("{}->{}", i, c.global(i)));
      edges.push_back(fmt::format("u{}={}", i, c.edge_at(i)));
    }
    o.line(fmt::format("  {}: {} to {}, m={}, local {}, {}", c.chord, c.start(), c.end(), c.length(),
                       fmt::join(local, " "), fmt::join(edges, " ")));
  }
}

void print_witness(Output& o, const Context& ctx, const SemidirectElement& w) {
  bool kernel = w.perm.is_identity();
  auto a_word = lift_to_a(w.f);
  auto word = psi(ctx, w);
  if (o.porcelain()) {
    o.kv("kernel", bool_str(kernel));
    o.kv("perm", w.perm.str());
    o.kv("f", w.f.str());
    o.kv("a_word", to_string(a_word));
    o.kv("word", word.str());
    return;
  }
  o.line(fmt::format("witness: {}", w.str()));
  o.line(fmt::format("normal form word: {}", word.empty() ? "(empty)" : word.str()));
}

void report_verdict(Output& o, const Context& ctx, const Verdict& v, std::string_view yes, std::string_view no) {
  if (o.porcelain()) {
    o.kv("verdict", to_string(v.kind));
    o.kv("n", ctx.n());
    o.kv("t", ctx.t());
    if (v.witness)
      print_witness(o, ctx, *v.witness);
    return;
  }
  switch (v.kind) {
  case Verdict::Kind::trivial:
    o.line(std::string(yes));
    break;
  case Verdict::Kind::trivial_in_quotient:
    o.line(fmt::format("{} QUOTIENT-ONLY (K4)", yes));
    o.line("the image in S_4 ⋉ F_{3,4} is trivial; triviality in the group itself is not decided");
    break;
  case Verdict::Kind::nontrivial: {
    const auto& w = *v.witness;
    if (w.perm.is_identity())
      o.line(fmt::format("{} kernel element: {}", no, to_string(lift_to_a(w.f))));
    else
      o.line(fmt::format("{} permutation: {}", no, w.perm.str()));
    print_witness(o, ctx, w);
    break;
  }
  }
}

void cmd_kernel(Output& o, const Context& ctx, const EdgeWord& w) {
  auto k = in_kernel(ctx, w);
  auto image = phi(ctx, w);
  if (o.porcelain()) {
    o.kv("in_kernel", bool_str(k.in_kernel));
    o.kv("perm", image.perm.str());
    o.kv("f", k.witness.str());
    if (k.in_kernel)
      o.kv("a_word", to_string(lift_to_a(k.witness)));
    return;
  }
  if (k.in_kernel) {
    o.line(fmt::format("IN KERNEL: {}", to_string(lift_to_a(k.witness))));
    o.line(fmt::format("f-part: {}", k.witness.str()));
  } else {
    o.line(fmt::format("NOT IN KERNEL: permutation {}", image.perm.str()));
    o.line(fmt::format("f-part: {}", k.witness.str()));
  }
}

bool cmd_verify(Output& o, const Context& ctx, std::uint64_t seed, int trials) {
  auto reports = full_suite(ctx, seed, trials);
  long long checks = 0;
  std::size_t failures = 0;
  for (const auto& r : reports) {
    checks += r.checks_run();
    failures += r.failures().size();
    if (o.porcelain()) {
      o.kv(r.id() + ".checks", r.checks_run());
      o.kv(r.id() + ".failures", r.failures().size());
    } else {
      o.line(r.str());
    }
  }
  if (o.porcelain()) {
    o.kv("seed", seed);
    o.kv("checks", checks);
    o.kv("failures", failures);
    o.kv("status", failures == 0 ? "pass" : "fail");
  } else {
    o.line(fmt::format("{}: {} checks, {} failures, seed {}", failures == 0 ? "OK" : "FAILED", checks, failures, seed));
  }
  return failures == 0;
}

void cmd_tsaranov(Output& o, int a, int b, int t) {
  auto p = tsaranov_presentation(a, b, t);
  if (o.porcelain()) {
    o.kv("n", p.n);
    o.kv("t", p.t);
    o.kv("chords", fmt::format("{}", fmt::join(p.chords, ",")));
    o.kv("family", p.family.empty() ? "none" : p.family);
    o.kv("relators", p.extra_relators.size());
    std::vector<std::string> edges;
    for (const auto& e : p.graph.edges())
      edges.push_back(fmt::format("{}:{}-{}", e.label, e.a, e.b));
    o.kv("graph", fmt::format("{}", fmt::join(edges, ",")));
    return;
  }
  o.line(fmt::format("tsaranov a={} b={} t={}", a, b, t));
  o.line(fmt::format("n={} t={}", p.n, p.t));
  o.line("graph:");
  for (const auto& e : p.graph.edges())
    o.line(fmt::format("  {} {} {}", e.a, e.b, e.label));
  if (p.t == 0) {
    o.line("no extra relators");
    return;
  }
  o.line(fmt::format("chords: {}", fmt::join(p.chords, " ")));
  o.line(fmt::format("extra relators: {}", p.family));
  for (const auto& f : p.extra_relators)
    o.line(fmt::format("  {}", f.str()));
}

void cmd_relators(Output& o, const Context& ctx, const std::string& kind) {
  auto k = presentation_from_string(kind);
  if (!k)
    throw UsageError(fmt::format("unknown presentation '{}'", kind));
  o.raw(relators(ctx.graph(), ctx.tree(), *k).str());
}

} // namespace

Result run(const std::vector<std::string>& args) {
  CLI::App app{"Word problem and structure reports for Coxeter quotients of graphs"};
  app.name("coxy");
  app.require_subcommand(1);
  app.fallthrough();
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "Print key=value lines");

  std::string file, word, word2, tree, kind = "coxy";
  std::uint64_t seed = 1;
  int trials = 200;
  int ta = 0, tb = 0, tt = 0;

  auto add_tree = [&](CLI::App* sub) {
    sub->add_option("--tree", tree, "Spanning tree edge labels, comma or space separated");
  };
  auto* analyze = app.add_subcommand("analyze", "Structure report for a graph");
  analyze->add_option("FILE", file)->required();
  add_tree(analyze);
  auto* solve = app.add_subcommand("solve", "Decide whether a word is trivial");
  solve->add_option("FILE", file)->required();
  solve->add_option("WORD", word, "Space-separated edge labels")->required();
  add_tree(solve);
  auto* eq = app.add_subcommand("equal", "Decide whether two words are equal");
  eq->add_option("FILE", file)->required();
  eq->add_option("WORD1", word)->required();
  eq->add_option("WORD2", word2)->required();
  add_tree(eq);
  auto* kernel = app.add_subcommand("kernel", "Test membership in the kernel of the map to S_n");
  kernel->add_option("FILE", file)->required();
  kernel->add_option("WORD", word)->required();
  add_tree(kernel);
  auto* verify = app.add_subcommand("verify", "Run the oracle suite on a graph");
  verify->add_option("FILE", file)->required();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--trials", trials, "Samples per randomized check")->capture_default_str()->check(CLI::Range(1, 1000000));
  add_tree(verify);
  auto* tsar = app.add_subcommand("tsaranov", "Tsaranov presentation data");
  tsar->add_option("A", ta)->required();
  tsar->add_option("B", tb)->required();
  tsar->add_option("T", tt)->required();
  auto* rels = app.add_subcommand("relators", "Print a relator set, one word per line");
  rels->add_option("FILE", file)->required();
  rels->add_option("--kind", kind, "coxeter, coxy, symmetric or atn")->capture_default_str();
  add_tree(rels);

  Result result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  Output o(porcelain);
  try {
    if (*tsar) {
      cmd_tsaranov(o, ta, tb, tt);
    } else {
      Context ctx = load(file, tree);
      if (*analyze) {
        cmd_analyze(o, ctx);
      } else if (*solve) {
        report_verdict(o, ctx, is_trivial(ctx, load_word(ctx, word)), "TRIVIAL", "NONTRIVIAL");
      } else if (*eq) {
        report_verdict(o, ctx, equal(ctx, load_word(ctx, word), load_word(ctx, word2)), "EQUAL", "NOT EQUAL");
      } else if (*kernel) {
        cmd_kernel(o, ctx, load_word(ctx, word));
      } else if (*verify) {
        if (!cmd_verify(o, ctx, seed, trials))
          result.exit_code = 1;
      } else if (*rels) {
        cmd_relators(o, ctx, kind);
      }
    }
  } catch (const UnknownLabel& e) {
    result.exit_code = 1;
    result.err = fmt::format("error: {}\n", e.what());
    return result;
  } catch (const Error& e) {
    result.exit_code = 2;
    result.err = fmt::format("error: {}\n", e.what());
    return result;
  }
  result.out = o.take();
  return result;
}

} // namespace coxy::cli
