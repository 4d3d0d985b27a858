#include "coxy/perm.hpp"

#include "coxy/error.hpp"

#include <fmt/format.h>

#include <numeric>

namespace coxy {

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 0)
    throw DomainError("negative permutation degree");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<Vertex> images) {
  const auto n = images.size();
  std::vector<bool> seen(n + 1, false);
  for (Vertex v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
      throw DomainError("image sequence is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int n, Vertex a, Vertex b) {
  Permutation p(n);
  if (a < 1 || b < 1 || a > n || b > n)
    throw DomainError(fmt::format("transposition ({} {}) outside 1..{}", a, b, n));
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::cycle(int n, std::initializer_list<Vertex> points) {
  return cycle(n, std::vector<Vertex>(points));
}

Permutation Permutation::cycle(int n, const std::vector<Vertex>& points) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (std::size_t k = 0; k < points.size(); ++k) {
    Vertex from = points[k];
    Vertex to = points[(k + 1) % points.size()];
    if (from < 1 || from > n)
      throw DomainError(fmt::format("cycle point {} outside 1..{}", from, n));
    images[static_cast<std::size_t>(from - 1)] = to;
  }
  return from_images(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<Vertex>(i + 1))
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<Vertex>(i + 1);
  return p;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (Vertex s = 1; s <= size(); ++s) {
    if (seen[static_cast<std::size_t>(s)] || (*this)(s) == s)
      continue;
    std::vector<Vertex> cyc;
    for (Vertex v = s; !seen[static_cast<std::size_t>(v)]; v = (*this)(v)) {
      seen[static_cast<std::size_t>(v)] = true;
      cyc.push_back(v);
    }
    out += fmt::format("({})", fmt::join(cyc, " "));
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size())
    throw SizeMismatch(fmt::format("composing permutations of degree {} and {}", s.size(), t.size()));
  std::vector<Vertex> images(static_cast<std::size_t>(s.size()));
  for (Vertex a = 1; a <= s.size(); ++a)
    images[static_cast<std::size_t>(a - 1)] = t(s(a));
  return Permutation::from_images(std::move(images));
}

Permutation perm_of_word(const Graph& g, const EdgeWord& w) {
  std::vector<Vertex> images(static_cast<std::size_t>(g.vertex_count()));
  std::iota(images.begin(), images.end(), 1);
  // Right multiplication by (a b) swaps the values a and b in the image table.
  for (const auto& label : w) {
    const Edge& e = g.edge(label);
    for (auto& v : images) {
      if (v == e.a)
        v = e.b;
      else if (v == e.b)
        v = e.a;
    }
  }
  return Permutation::from_images(std::move(images));
}

} // namespace coxy
