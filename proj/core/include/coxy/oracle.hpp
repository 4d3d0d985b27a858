#pragma once

#include "coxy/coxy.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace coxy {

struct OracleFailure {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string got;
};

class OracleReport {
public:
  OracleReport() = default;
  explicit OracleReport(std::string id, std::uint64_t seed = 0) : id_(std::move(id)), seed_(seed) {}

  const std::string& id() const noexcept { return id_; }
  std::uint64_t seed() const noexcept { return seed_; }
  long long checks_run() const noexcept { return checks_; }
  const std::vector<OracleFailure>& failures() const noexcept { return failures_; }
  bool passed() const noexcept { return failures_.empty(); }

  /// Counts one check; `describe` is only called on failure.
  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++checks_;
    if (!ok)
      failures_.push_back(describe());
    return ok;
  }
  void merge(const OracleReport& other);

  /// "PASS id (k checks)" followed by failure details.
  std::string str(std::size_t max_details = 10) const;

private:
  std::string id_;
  std::uint64_t seed_ = 0;
  long long checks_ = 0;
  std::vector<OracleFailure> failures_;
};

using SdProduct = std::function<SemidirectElement(const SemidirectElement&, const SemidirectElement&)>;

/// A deliberately broken product: the permutation action on the free part is
/// applied in the opposite order. Used as a negative control.
SemidirectElement sd_mul_mutated(const SemidirectElement& g, const SemidirectElement& h);

using Rng = std::mt19937_64;

EdgeWord random_word(std::span<const std::string> alphabet, Rng& rng, std::size_t length);
Permutation random_permutation(int n, Rng& rng);

OracleReport check_relators(const Context& ctx, const SdProduct& mul = sd_mul);

class GuardExceeded : public Error {
public:
  using Error::Error;
};

/// Order of the group generated by gens; throws GuardExceeded past `guard`.
std::size_t bfs_group_order(std::span<const Permutation> gens, std::size_t guard = 1'000'000);

/// Exponent sums of f per (chord, slot), flattened chord-major.
std::vector<long long> component_vector(const FStarElement& f, std::span<const std::string> chords);
/// Integer rank by fraction-free elimination.
std::size_t ab_rank(const std::vector<std::vector<long long>>& rows);
std::size_t ab_rank(std::span<const FStarElement> elements, std::span<const std::string> chords);

/// F-parts of phi(psi_gen(x_{i,i+1})) for every chord and 1 <= i < n.
std::vector<FStarElement> kernel_generators(const Context& ctx);

OracleReport identity_suite(std::uint64_t seed, int n, int t, int trials);

/// `sub` uses the vertex ids and labels of ctx.graph().
OracleReport parabolic_check(const Context& ctx, const Graph& sub, int samples, std::uint64_t seed);

OracleReport check_perm_consistency(const Context& ctx, int samples, std::uint64_t seed);
OracleReport check_round_trips(const Context& ctx, int samples, std::uint64_t seed);
OracleReport check_gamma_laws(const Context& ctx);
OracleReport check_action_laws(const Context& ctx, int samples, std::uint64_t seed);
OracleReport check_tilde_conjugation(const Context& ctx);
OracleReport check_kernel_rank(const Context& ctx);

/// Every check above on one graph, plus the order of the tree image when small.
std::vector<OracleReport> full_suite(const Context& ctx, std::uint64_t seed, int trials);

} // namespace coxy
