#pragma once

#include "coxy/graph.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace coxy {

/// An element of S_n acting on 1..n. Products apply the left factor first.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n);
  /// images[i-1] is the image of i. Throws DomainError unless a bijection.
  static Permutation from_images(std::vector<Vertex> images);
  static Permutation transposition(int n, Vertex a, Vertex b);
  /// The cycle a1 -> a2 -> ... -> ak -> a1.
  static Permutation cycle(int n, std::initializer_list<Vertex> points);
  static Permutation cycle(int n, const std::vector<Vertex>& points);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<Vertex>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Vertex> images_;
};

/// (s t)(a) = t(s(a)).
Permutation compose(const Permutation& s, const Permutation& t);
inline Permutation operator*(const Permutation& s, const Permutation& t) { return compose(s, t); }

Permutation perm_of_word(const Graph& g, const EdgeWord& w);

} // namespace coxy
