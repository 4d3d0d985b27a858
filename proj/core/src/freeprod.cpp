#include "coxy/freeprod.hpp"

#include "coxy/error.hpp"

#include <fmt/format.h>

namespace coxy {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (l.exp != 1 && l.exp != -1)
    throw DomainError(fmt::format("letter exponent {} is not +-1", l.exp));
  if (!out.empty() && out.back().chord == l.chord && out.back().exp == -l.exp)
    out.pop_back();
  else
    out.push_back(l);
}

void check_sizes(int a, int b) {
  if (a != b)
    throw SizeMismatch(fmt::format("operands of degree {} and {}", a, b));
}

} // namespace

ReducedWord::ReducedWord(Letter l) {
  push_reduced(letters_, l);
}

ReducedWord ReducedWord::reduce(std::span<const Letter> raw) {
  ReducedWord w;
  for (const auto& l : raw)
    push_reduced(w.letters_, l);
  return w;
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

std::map<std::string, long long> ReducedWord::exponent_sums() const {
  std::map<std::string, long long> out;
  for (const auto& l : letters_)
    out[l.chord] += l.exp;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string ReducedWord::str() const {
  if (letters_.empty())
    return "1";
  std::vector<std::string> parts;
  for (const auto& l : letters_)
    parts.push_back(l.exp == 1 ? l.chord : l.chord + "^-1");
  return fmt::format("{}", fmt::join(parts, " "));
}

ReducedWord operator*(const ReducedWord& x, const ReducedWord& y) {
  ReducedWord w = x;
  for (const auto& l : y.letters_)
    push_reduced(w.letters_, l);
  return w;
}

FStarElement::FStarElement(int n) : components_(static_cast<std::size_t>(n)) {}

FStarElement::FStarElement(std::vector<ReducedWord> components) : components_(std::move(components)) {}

FStarElement FStarElement::single(int n, Vertex slot, Letter l) {
  if (slot < 1 || slot > n)
    throw DomainError(fmt::format("slot {} outside 1..{}", slot, n));
  FStarElement p(n);
  p.components_[static_cast<std::size_t>(slot - 1)] = ReducedWord(std::move(l));
  return p;
}

bool FStarElement::is_identity() const noexcept {
  for (const auto& c : components_)
    if (!c.empty())
      return false;
  return true;
}

std::string FStarElement::str() const {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (!components_[i].empty())
      parts.push_back(fmt::format("{}: {}", i + 1, components_[i].str()));
  return parts.empty() ? "1" : fmt::format("{}", fmt::join(parts, ", "));
}

FStarElement fstar_mul(const FStarElement& p, const FStarElement& q) {
  check_sizes(p.size(), q.size());
  std::vector<ReducedWord> out;
  out.reserve(p.components().size());
  for (std::size_t i = 0; i < p.components().size(); ++i)
    out.push_back(p.components()[i] * q.components()[i]);
  return FStarElement(std::move(out));
}

FStarElement fstar_inv(const FStarElement& p) {
  std::vector<ReducedWord> out;
  out.reserve(p.components().size());
  for (const auto& c : p.components())
    out.push_back(c.inverse());
  return FStarElement(std::move(out));
}

AbVector ab(const FStarElement& p) {
  AbVector out;
  for (const auto& c : p.components())
    for (const auto& l : c.letters())
      out[l.chord] += l.exp;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool in_ftn(const FStarElement& p) { return ab(p).empty(); }

FStarElement sn_act_f(const Permutation& s, const FStarElement& p) {
  check_sizes(s.size(), p.size());
  std::vector<ReducedWord> out(p.components().size());
  for (Vertex i = 1; i <= s.size(); ++i)
    out[static_cast<std::size_t>(s(i) - 1)] = p[i];
  return FStarElement(std::move(out));
}

SemidirectElement::SemidirectElement(Permutation p, FStarElement x) : perm(std::move(p)), f(std::move(x)) {
  check_sizes(perm.size(), f.size());
}

SemidirectElement::SemidirectElement(Permutation p) : perm(std::move(p)), f(perm.size()) {}

SemidirectElement::SemidirectElement(FStarElement x) : perm(x.size()), f(std::move(x)) {}

std::string SemidirectElement::str() const { return perm.str() + " | " + f.str(); }

SemidirectElement sd_identity(int n) { return SemidirectElement(Permutation(n)); }

SemidirectElement sd_mul(const SemidirectElement& g, const SemidirectElement& h) {
  check_sizes(g.size(), h.size());
  return {compose(g.perm, h.perm), fstar_mul(sn_act_f(h.perm, g.f), h.f)};
}

SemidirectElement sd_inv(const SemidirectElement& g) {
  Permutation inv = g.perm.inverse();
  return {inv, sn_act_f(inv, fstar_inv(g.f))};
}

} // namespace coxy
