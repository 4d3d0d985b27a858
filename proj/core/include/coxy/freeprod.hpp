#pragma once

#include "coxy/perm.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace coxy {

struct Letter {
  std::string chord;
  int exp = 1;

  Letter inverse() const { return {chord, -exp}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the free group on the chord labels.
class ReducedWord {
public:
  ReducedWord() = default;
  explicit ReducedWord(Letter l);

  static ReducedWord reduce(std::span<const Letter> raw);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  ReducedWord inverse() const;
  /// Exponent sum per chord, zero entries omitted.
  std::map<std::string, long long> exponent_sums() const;
  std::string str() const;

  friend ReducedWord operator*(const ReducedWord& x, const ReducedWord& y);
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

private:
  std::vector<Letter> letters_;
};

inline ReducedWord reduce(std::span<const Letter> raw) { return ReducedWord::reduce(raw); }

/// An n-tuple of reduced words; slot i is the free factor attached to vertex i.
class FStarElement {
public:
  FStarElement() = default;
  explicit FStarElement(int n);
  explicit FStarElement(std::vector<ReducedWord> components);

  static FStarElement single(int n, Vertex slot, Letter l);

  int size() const noexcept { return static_cast<int>(components_.size()); }
  const ReducedWord& operator[](Vertex slot) const { return components_.at(static_cast<std::size_t>(slot - 1)); }
  const std::vector<ReducedWord>& components() const noexcept { return components_; }
  bool is_identity() const noexcept;
  std::string str() const;

  friend auto operator<=>(const FStarElement&, const FStarElement&) = default;
  friend bool operator==(const FStarElement&, const FStarElement&) = default;

private:
  std::vector<ReducedWord> components_;
};

FStarElement fstar_mul(const FStarElement& p, const FStarElement& q);
FStarElement fstar_inv(const FStarElement& p);
inline FStarElement operator*(const FStarElement& p, const FStarElement& q) { return fstar_mul(p, q); }

using AbVector = std::map<std::string, long long>;

AbVector ab(const FStarElement& p);
bool in_ftn(const FStarElement& p);

/// Slot i of p moves to slot s(i).
FStarElement sn_act_f(const Permutation& s, const FStarElement& p);

struct SemidirectElement {
  Permutation perm;
  FStarElement f;

  SemidirectElement() = default;
  SemidirectElement(Permutation p, FStarElement x);
  explicit SemidirectElement(Permutation p);
  explicit SemidirectElement(FStarElement x);

  int size() const noexcept { return perm.size(); }
  bool is_identity() const noexcept { return perm.is_identity() && f.is_identity(); }
  std::string str() const;

  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

SemidirectElement sd_identity(int n);
/// (s1, f1)(s2, f2) = (s1 s2, (f1 acted on by s2) f2).
SemidirectElement sd_mul(const SemidirectElement& g, const SemidirectElement& h);
SemidirectElement sd_inv(const SemidirectElement& g);
inline SemidirectElement operator*(const SemidirectElement& g, const SemidirectElement& h) {
  return sd_mul(g, h);
}

} // namespace coxy
