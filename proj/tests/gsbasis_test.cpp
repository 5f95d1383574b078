#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "chinese/gsbasis.hpp"
#include "chinese/oracle.hpp"
#include "test_util.hpp"

using namespace chinese;
using chinese::testing::all_words;
using chinese::testing::w;

namespace {

using RulePair = std::pair<std::vector<Letter>, std::vector<Letter>>;

std::set<RulePair> as_set(std::vector<Rule> const& rules) {
  std::set<RulePair> out;
  for (auto const& r : rules) {
    out.emplace(r.lhs().letters(), r.rhs().letters());
  }
  return out;
}

bool occurs_at(Word const& big, std::size_t pos, Word const& small) {
  return pos + small.size() <= big.size()
         && std::equal(small.begin(), small.end(),
                       big.begin() + static_cast<std::ptrdiff_t>(pos));
}

// Counts ambiguities by searching words instead of splitting rules: an
// intersection is a word w with lhs(f) a proper prefix and lhs(g) a proper
// suffix that overlap; an inclusion is lhs(g) occurring inside lhs(f).
std::size_t brute_force_ambiguity_count(RewriteSystem const& sys,
                                        std::size_t n) {
  std::size_t max_lhs = 0;
  for (auto const& r : sys.rules()) {
    max_lhs = std::max(max_lhs, r.lhs().size());
  }
  std::size_t count = 0;
  for (std::size_t len = 2; len + 1 <= 2 * max_lhs; ++len) {
    for (auto const& word : all_words(n, len)) {
      for (auto const& f : sys.rules()) {
        auto const& L = f.lhs();
        if (L.size() >= len || !occurs_at(word, 0, L)) {
          continue;
        }
        for (auto const& g : sys.rules()) {
          auto const& R = g.lhs();
          if (R.size() >= len || L.size() + R.size() <= len) {
            continue;
          }
          if (occurs_at(word, len - R.size(), R)) {
            ++count;
          }
        }
      }
    }
  }
  for (std::size_t fi = 0; fi < sys.size(); ++fi) {
    for (std::size_t gi = 0; gi < sys.size(); ++gi) {
      auto const& L = sys.rules()[fi].lhs();
      auto const& R = sys.rules()[gi].lhs();
      for (std::size_t pos = 0; pos + R.size() <= L.size(); ++pos) {
        if ((fi != gi || pos != 0) && occurs_at(L, pos, R)) {
          ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST(Ambiguities, NoneWithoutRules) {
  EXPECT_TRUE(enumerate_ambiguities(chinese_rules(Alphabet(1))).empty());
}

TEST(Ambiguities, CountMatchesBruteForceSearch) {
  for (std::size_t n : {2u, 3u, 4u}) {
    auto const sys = chinese_rules(Alphabet(n));
    EXPECT_EQ(enumerate_ambiguities(sys).size(),
              brute_force_ambiguity_count(sys, n))
        << "n = " << n;
  }
}

TEST(Ambiguities, CountMatchesBruteForceWithInclusions) {
  Alphabet const a(3);
  RewriteSystem const sys(a, {Rule(w("cbc", 3), w("bcc", 3)),
                              Rule(w("cb", 3), w("bc", 3)),
                              Rule(w("cc", 3), w("a", 3)),
                              Rule(w("ccbc", 3), w("ab", 3))});
  EXPECT_EQ(enumerate_ambiguities(sys).size(),
            brute_force_ambiguity_count(sys, 3));
}

TEST(Ambiguities, InvariantsHold) {
  auto const sys = chinese_rules(Alphabet(4));
  for (auto const& amb : enumerate_ambiguities(sys)) {
    auto const& L = amb.left_rule.lhs();
    auto const& R = amb.right_rule.lhs();
    auto const& o = amb.overlap_word;
    ASSERT_GT(amb.a_len, 0u);
    ASSERT_GT(amb.b_len, 0u);
    ASSERT_EQ(amb.kind, AmbiguityKind::intersection);
    ASSERT_GT(L.size() + R.size(), o.size());
    ASSERT_TRUE(occurs_at(o, 0, L));
    ASSERT_TRUE(occurs_at(o, amb.a_len, R));
    ASSERT_EQ(amb.a_len + R.size(), o.size());
    ASSERT_EQ(L.size() + amb.b_len, o.size());
  }
}

TEST(Composition, IntersectionExample) {
  Alphabet const a(3);
  RewriteSystem const sys(a, {Rule(w("cba", 3), w("bca", 3)),
                              Rule(w("baa", 3), w("aba", 3))});
  auto const ambs = enumerate_ambiguities(sys);
  auto it = std::find_if(ambs.begin(), ambs.end(), [&](Ambiguity const& x) {
    return x.overlap_word == w("cbaa", 3);
  });
  ASSERT_NE(it, ambs.end());
  auto const c = composition(*it);
  EXPECT_EQ(c.p, w("bcaa", 3));
  EXPECT_EQ(c.q, w("caba", 3));
  EXPECT_TRUE(deg_lex_compare(c.p, it->overlap_word) < 0);
  EXPECT_TRUE(deg_lex_compare(c.q, it->overlap_word) < 0);
}

TEST(Composition, SelfOverlap) {
  Alphabet const a(2);
  RewriteSystem const sys(a, {Rule(w("aba", 2), w("aab", 2))});
  auto const ambs = enumerate_ambiguities(sys);
  ASSERT_EQ(ambs.size(), 1u);
  EXPECT_EQ(ambs[0].overlap_word, w("ababa", 2));
  auto const c = composition(ambs[0]);
  EXPECT_EQ(c.p, w("aabba", 2));
  EXPECT_EQ(c.q, w("abaab", 2));
}

TEST(Composition, InclusionWithEqualSidesIsTrivial) {
  Alphabet const a(3);
  RewriteSystem const sys(a, {Rule(w("cb", 3), w("ca", 3)),
                              Rule(w("b", 3), w("a", 3))});
  auto const ambs = enumerate_ambiguities(sys);
  ASSERT_EQ(ambs.size(), 1u);
  EXPECT_EQ(ambs[0].kind, AmbiguityKind::inclusion);
  auto const c = composition(ambs[0]);
  EXPECT_EQ(c.p, w("ca", 3));
  EXPECT_EQ(c.q, w("ca", 3));
  EXPECT_TRUE(is_trivial(c, sys));
}

TEST(Composition, ThreeWedgeTwoMeetsInTheClassOfJJJ1IK1) {
  Alphabet const a(4);
  auto const sys = chinese_rules(a);
  Word const overlap(a, {4, 3, 3, 1, 2});
  auto const ambs = enumerate_ambiguities(sys);
  auto it = std::find_if(ambs.begin(), ambs.end(), [&](Ambiguity const& x) {
    return x.overlap_word == overlap;
  });
  ASSERT_NE(it, ambs.end());
  EXPECT_EQ(chinese_shape_of(it->left_rule), 3);
  EXPECT_EQ(chinese_shape_of(it->right_rule), 2);
  auto const c = composition(*it);
  EXPECT_EQ(c.p, Word(a, {3, 4, 3, 1, 2}));
  EXPECT_EQ(c.q, Word(a, {4, 3, 2, 3, 1}));
  // jjj1ik1 = ccbda still contains the redex ccb; its normal form is cbcda.
  Word const displayed(a, {3, 3, 2, 4, 1});
  Word const expected(a, {3, 2, 3, 4, 1});
  EXPECT_FALSE(is_irreducible(displayed, sys));
  EXPECT_TRUE(congruent(displayed, expected));
  EXPECT_EQ(normalize(displayed, sys), expected);
  EXPECT_EQ(normalize(c.p, sys), expected);
  EXPECT_EQ(normalize(c.q, sys), expected);
  EXPECT_TRUE(is_trivial(c, sys));
}

TEST(VerifyGs, ChineseRulesAreAGroebnerShirshovBasis) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const report = verify_gs(chinese_rules(Alphabet(n)));
    EXPECT_TRUE(report.nontrivial.empty()) << "n = " << n;
    EXPECT_EQ(report.trivial + report.nontrivial.size(),
              report.total_ambiguities);
  }
}

TEST(VerifyGs, DefiningRelationsAloneAreNot) {
  Alphabet const a(3);
  RewriteSystem const t(a, chinese_defining_rules(a));
  EXPECT_EQ(t.size(), 8u);
  auto const report = verify_gs(t);
  EXPECT_FALSE(report.nontrivial.empty());
  EXPECT_EQ(report.trivial + report.nontrivial.size(), report.total_ambiguities);
  for (auto const& nt : report.nontrivial) {
    EXPECT_TRUE(congruent(nt.p_normal, nt.q_normal));
  }
}

TEST(InterReduce, ChineseRulesAreAlreadyReduced) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const sys = chinese_rules(Alphabet(n));
    EXPECT_EQ(as_set(inter_reduce(sys).rules()), as_set(sys.rules()));
  }
}

TEST(InterReduce, Duplicates) {
  Alphabet const a(3);
  Rule const r(w("cba", 3), w("bca", 3));
  auto const out = inter_reduce(a, {r, r});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.rules()[0], r);
}

TEST(InterReduce, ReducibleLhsAndRhs) {
  Alphabet const a(3);
  auto const out = inter_reduce(
      a, {Rule(w("bba", 3), w("bab", 3)), Rule(w("bbba", 3), w("bbab", 3)),
          Rule(w("ccc", 3), w("cba", 3)), Rule(w("cba", 3), w("a", 3))});
  std::set<RulePair> const expected{
      {w("bba", 3).letters(), w("bab", 3).letters()},
      {w("cba", 3).letters(), w("a", 3).letters()},
      {w("ccc", 3).letters(), w("a", 3).letters()},
  };
  EXPECT_EQ(as_set(out.rules()), expected);
}

TEST(InterReduce, SharedLhsBecomesANewRelation) {
  Alphabet const a(3);
  auto const out = inter_reduce(
      a, {Rule(w("cc", 3), w("b", 3)), Rule(w("cc", 3), w("a", 3))});
  std::set<RulePair> const expected{
      {w("cc", 3).letters(), w("a", 3).letters()},
      {w("b", 3).letters(), w("a", 3).letters()},
  };
  EXPECT_EQ(as_set(out.rules()), expected);
}

TEST(Complete, ChineseRulesConvergeImmediately) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const s = chinese_rules(Alphabet(n));
    auto const result = complete(s);
    EXPECT_TRUE(result.converged);
    EXPECT_EQ(result.iterations, 1u);
    EXPECT_TRUE(result.adjoined.empty());
    EXPECT_EQ(as_set(result.result.rules()), as_set(s.rules()));
  }
}

TEST(Complete, EmptyInput) {
  auto const result = complete(Alphabet(3), {});
  EXPECT_TRUE(result.converged);
  EXPECT_EQ(result.result.size(), 0u);
}

TEST(Complete, RediscoversShapeFiveFromDefiningRelations) {
  Alphabet const a(3);
  auto const result = complete(a, chinese_defining_rules(a));
  ASSERT_TRUE(result.converged);
  EXPECT_EQ(as_set(result.result.rules()), as_set(chinese_rules(a).rules()));
  EXPECT_TRUE(result.result.find_rule(w("cbca", 3).view()));
  // Soundness: everything adjoined is a consequence of the relations.
  for (auto const& r : result.adjoined) {
    EXPECT_TRUE(congruent(r.lhs(), r.rhs())) << format_rule(r);
  }
  for (auto const& r : result.result.rules()) {
    EXPECT_TRUE(congruent(r.lhs(), r.rhs())) << format_rule(r);
  }
}

TEST(Complete, BoundsStopNonTerminatingCompletion) {
  // aba = bab has no finite complete system under deg-lex.
  Alphabet const a(2);
  CompletionBounds bounds;
  bounds.max_iterations = 4;
  auto const result = complete(a, {Rule(w("bab", 2), w("aba", 2))}, bounds);
  EXPECT_FALSE(result.converged);
  EXPECT_EQ(result.stop, CompletionStop::max_iterations);
  EXPECT_EQ(result.iterations, 4u);

  bounds.max_iterations = 100;
  bounds.max_word_len = 5;
  auto const short_words = complete(a, {Rule(w("bab", 2), w("aba", 2))}, bounds);
  EXPECT_FALSE(short_words.converged);
  EXPECT_EQ(short_words.stop, CompletionStop::max_word_len);

  bounds.max_word_len = 12;
  bounds.max_rules = 2;
  auto const few_rules = complete(a, {Rule(w("bab", 2), w("aba", 2))}, bounds);
  EXPECT_FALSE(few_rules.converged);
  EXPECT_EQ(few_rules.stop, CompletionStop::max_rules);
}
