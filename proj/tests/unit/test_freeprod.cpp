#include "coxy/error.hpp"
#include "coxy/freeprod.hpp"
#include "coxy/oracle.hpp"
#include "coxy/presentation.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace coxy;
using namespace coxy::testing;

namespace {

const Letter xp{"x", 1};
const Letter xm{"x", -1};
const Letter yp{"y", 1};
const Letter ym{"y", -1};

FStarElement random_fstar(Rng& rng, int n, int length) {
  static const std::vector<std::string> names{"x", "y", "z"};
  std::vector<ReducedWord> comps;
  for (int i = 0; i < n; ++i) {
    std::vector<Letter> raw;
    for (int k = 0; k < length; ++k)
      raw.push_back({names[rng() % names.size()], rng() % 2 ? 1 : -1});
    comps.push_back(ReducedWord::reduce(raw));
  }
  return FStarElement(std::move(comps));
}

SemidirectElement random_sd(Rng& rng, int n) {
  return {random_permutation(n, rng), random_fstar(rng, n, 4)};
}

} // namespace

TEST(Reduce, Examples) {
  EXPECT_TRUE(reduce(std::vector<Letter>{xp, xm}).empty());
  EXPECT_EQ(reduce(std::vector<Letter>{xp, yp, ym, xp}).letters(), (std::vector<Letter>{xp, xp}));
  std::vector<Letter> reduced{xp, ym, xp, yp};
  EXPECT_EQ(reduce(reduced).letters(), reduced);
  EXPECT_THROW(reduce(std::vector<Letter>{{"x", 2}}), DomainError);
}

TEST(Reduce, IdempotentAndShrinking) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Letter> raw;
    for (int k = 0; k < 20; ++k)
      raw.push_back({rng() % 2 ? "x" : "y", rng() % 2 ? 1 : -1});
    auto w = reduce(raw);
    EXPECT_LE(w.size(), raw.size());
    EXPECT_EQ(reduce(w.letters()), w);
    for (std::size_t k = 1; k < w.size(); ++k)
      EXPECT_FALSE(w.letters()[k] == w.letters()[k - 1].inverse());
  }
}

TEST(FStar, MultiplicationExamples) {
  Rng rng(8);
  auto p = random_fstar(rng, 5, 6);
  EXPECT_TRUE((p * fstar_inv(p)).is_identity());
  auto x1 = FStarElement::single(5, 1, xp);
  auto y2 = FStarElement::single(5, 2, yp);
  EXPECT_EQ(x1 * y2, y2 * x1);
  auto y1 = FStarElement::single(5, 1, yp);
  EXPECT_NE(x1 * y1, y1 * x1);
  EXPECT_THROW(FStarElement(3) * FStarElement(4), SizeMismatch);
  EXPECT_EQ(fstar({"x", "x^-1 y", "", "", ""}).str(), "1: x, 2: x^-1 y");
  EXPECT_EQ(FStarElement(3).str(), "1");
}

TEST(Ab, Examples) {
  EXPECT_TRUE(ab(FStarElement(4)).empty());
  EXPECT_TRUE(in_ftn(FStarElement(4)));
  auto p = fstar({"x", "x^-1 y", "", ""});
  EXPECT_EQ(ab(p), (AbVector{{"y", 1}}));
  EXPECT_FALSE(in_ftn(p));
  auto m = mu(AGenerator{"x", 1, 4}, 6);
  EXPECT_TRUE(ab(m).empty());
  EXPECT_TRUE(in_ftn(m));
}

TEST(Ab, Additive) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_fstar(rng, 4, 5);
    auto q = random_fstar(rng, 4, 5);
    AbVector sum = ab(p);
    for (const auto& [k, v] : ab(q))
      sum[k] += v;
    std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
    EXPECT_EQ(ab(p * q), sum);
    AbVector neg;
    for (const auto& [k, v] : ab(p))
      neg[k] = -v;
    EXPECT_EQ(ab(fstar_inv(p)), neg);
    auto s = random_permutation(4, rng);
    EXPECT_EQ(ab(sn_act_f(s, p)), ab(p));
    if (in_ftn(p) && in_ftn(q))
      EXPECT_TRUE(in_ftn(p * fstar_inv(q)));
  }
}

TEST(Action, Examples) {
  Rng rng(10);
  auto p = random_fstar(rng, 4, 3);
  EXPECT_EQ(sn_act_f(Permutation(4), p), p);
  EXPECT_EQ(sn_act_f(Permutation::transposition(4, 1, 2), FStarElement::single(4, 1, xp)),
            FStarElement::single(4, 2, xp));
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_permutation(4, rng);
    auto t = random_permutation(4, rng);
    auto q = random_fstar(rng, 4, 3);
    EXPECT_EQ(sn_act_f(t, sn_act_f(s, q)), sn_act_f(compose(s, t), q));
    EXPECT_EQ(sn_act_f(s, q * p), sn_act_f(s, q) * sn_act_f(s, p));
  }
}

TEST(Semidirect, Examples) {
  Rng rng(12);
  auto g = random_sd(rng, 5);
  EXPECT_TRUE((g * sd_inv(g)).is_identity());
  EXPECT_TRUE((sd_inv(g) * g).is_identity());

  // Image of the chord b = (2,3) of the triangle squares to the identity.
  SemidirectElement phib(Permutation::transposition(3, 2, 3), fstar({"", "b", "b^-1"}));
  EXPECT_TRUE((phib * phib).is_identity());

  // ((12), 1) * ((23), mu(b_23)) = ((12)(23), mu(b_23)).
  SemidirectElement left(Permutation::transposition(3, 1, 2));
  auto prod = left * phib;
  EXPECT_EQ(prod.perm, Permutation::cycle(3, {1, 3, 2}));
  EXPECT_EQ(prod.f, fstar({"", "b", "b^-1"}));
  EXPECT_EQ(prod.str(), "(1 3 2) | 2: b, 3: b^-1");
}

TEST(Semidirect, AssociativeOnRandomTriples) {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_sd(rng, 5);
    auto b = random_sd(rng, 5);
    auto c = random_sd(rng, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(sd_inv(a * b), sd_inv(b) * sd_inv(a));
  }
}

TEST(Semidirect, DegenerateAlphabet) {
  SemidirectElement g(Permutation::cycle(3, {1, 2, 3}));
  EXPECT_EQ(g.f, FStarElement(3));
  EXPECT_EQ((g * g * g), sd_identity(3));
}
