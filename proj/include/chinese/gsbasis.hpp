// Ambiguities, compositions and the Groebner-Shirshov criterion for
// semigroup presentations, plus inter-reduction and bounded completion.
//
// Every relation is a difference u - v of two words, so a polynomial is kept
// as an ordered pair of words and a rule u -> v with u > v in deg-lex.
//
// A composition (p, q) over an ambiguity w is trivial modulo (S, w) exactly
// when p and q rewrite to the same normal form: each rewrite replaces a
// factor by a strictly smaller word, so every word met while reducing p and q
// stays below w, and the two reduction chains assemble into a sum of
// a_i s_i b_i with a_i lead(s_i) b_i < w.

#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chinese/rewriting.hpp"
#include "chinese/word.hpp"

namespace chinese {

enum class AmbiguityKind { intersection, inclusion };

inline char const* to_string(AmbiguityKind k) {
  return k == AmbiguityKind::intersection ? "intersection" : "inclusion";
}

// Intersection: overlap = lhs(left) * b = a * lhs(right), a and b nonempty.
// Inclusion:    overlap = lhs(left) = a * lhs(right) * b.
struct Ambiguity {
  std::size_t left_index;
  std::size_t right_index;
  Rule left_rule;
  Rule right_rule;
  Word overlap_word;
  AmbiguityKind kind;
  std::size_t a_len;
  std::size_t b_len;
};

struct Composition {
  Ambiguity ambiguity;
  Word p;
  Word q;
};

struct NontrivialComposition {
  Ambiguity ambiguity;
  Word p_normal;
  Word q_normal;
};

struct VerificationReport {
  std::size_t total_ambiguities = 0;
  std::size_t trivial = 0;
  std::vector<NontrivialComposition> nontrivial;

  bool is_groebner_shirshov() const noexcept { return nontrivial.empty(); }
};

// Ambiguities of the ordered pair (left, right), intersections by increasing
// a_len, then inclusions by position.
inline void ambiguities_of_pair(RewriteSystem const& sys, std::size_t li,
                                std::size_t ri, std::vector<Ambiguity>& out) {
  Rule const& f = sys.rules()[li];
  Rule const& g = sys.rules()[ri];
  auto const L = f.lhs().view();
  auto const R = g.lhs().view();
  for (std::size_t a_len = 1; a_len < L.size(); ++a_len) {
    std::size_t const overlap = L.size() - a_len;
    if (overlap >= R.size()) {
      continue;
    }
    if (!std::equal(L.begin() + static_cast<std::ptrdiff_t>(a_len), L.end(),
                    R.begin())) {
      continue;
    }
    std::size_t const b_len = R.size() - overlap;
    Word w = f.lhs() * g.lhs().factor(overlap, b_len);
    out.push_back(
        {li, ri, f, g, std::move(w), AmbiguityKind::intersection, a_len, b_len});
  }
  if (R.size() > L.size()) {
    return;
  }
  for (std::size_t pos = 0; pos + R.size() <= L.size(); ++pos) {
    if (li == ri && pos == 0) {
      continue;
    }
    if (std::equal(R.begin(), R.end(),
                   L.begin() + static_cast<std::ptrdiff_t>(pos))) {
      out.push_back({li, ri, f, g, f.lhs(), AmbiguityKind::inclusion, pos,
                     L.size() - pos - R.size()});
    }
  }
}

inline std::vector<Ambiguity> enumerate_ambiguities(RewriteSystem const& sys) {
  if (sys.matches_by_shape()) {
    throw std::logic_error("ambiguities need an explicit rule list");
  }
  std::vector<Ambiguity> out;
  for (std::size_t li = 0; li < sys.size(); ++li) {
    for (std::size_t ri = 0; ri < sys.size(); ++ri) {
      ambiguities_of_pair(sys, li, ri, out);
    }
  }
  return out;
}

inline Composition composition(Ambiguity const& amb) {
  Word const a = amb.overlap_word.factor(0, amb.a_len);
  Word const b = amb.overlap_word.factor(
      amb.overlap_word.size() - amb.b_len, amb.b_len);
  if (amb.kind == AmbiguityKind::intersection) {
    return {amb, amb.left_rule.rhs() * b, a * amb.right_rule.rhs()};
  }
  return {amb, amb.left_rule.rhs(), a * amb.right_rule.rhs() * b};
}

inline bool is_trivial(Composition const& c, RewriteSystem const& sys) {
  return normalize(c.p, sys) == normalize(c.q, sys);
}

inline VerificationReport verify_gs(RewriteSystem const& sys) {
  VerificationReport report;
  for (auto& amb : enumerate_ambiguities(sys)) {
    ++report.total_ambiguities;
    Composition c = composition(amb);
    Word p = normalize(c.p, sys);
    Word q = normalize(c.q, sys);
    if (p == q) {
      ++report.trivial;
    } else {
      report.nontrivial.push_back({std::move(amb), std::move(p), std::move(q)});
    }
  }
  return report;
}

namespace detail {

  // True if some rule other than `self` has its lhs as a factor of w.
  inline bool reducible_by_others(Word const& w, RewriteSystem const& sys,
                                  std::size_t self) {
    auto const v = w.view();
    for (std::size_t pos = 0; pos < v.size(); ++pos) {
      for (std::size_t len = 1; pos + len <= v.size(); ++len) {
        auto hit = sys.find_rule(v.subspan(pos, len));
        if (hit && *hit != self) {
          return true;
        }
      }
    }
    return false;
  }

}  // namespace detail

// Inter-reduces a list of relations (duplicates and shared left-hand sides
// allowed): afterwards no lhs contains another lhs as a factor and every rhs
// is irreducible. A rule whose lhs becomes reducible is not simply dropped;
// its two sides are normalised and re-added if still distinct, so the
// congruence presented is unchanged. Rules come back sorted by RuleLess.
inline RewriteSystem inter_reduce(Alphabet alphabet,
                                  std::vector<Rule> const& input) {
  std::deque<std::pair<Word, Word>> pending;
  for (auto const& r : input) {
    pending.emplace_back(r.lhs(), r.rhs());
  }
  std::vector<Rule> rules;
  while (true) {
    while (!pending.empty()) {
      auto [u, v] = std::move(pending.front());
      pending.pop_front();
      RewriteSystem sys(alphabet, rules);
      auto r = Rule::oriented(normalize(u, sys), normalize(v, sys));
      if (r) {
        rules.push_back(std::move(*r));
      }
    }
    RewriteSystem sys(alphabet, rules);
    std::vector<Rule> kept;
    for (std::size_t idx = 0; idx < rules.size(); ++idx) {
      if (detail::reducible_by_others(rules[idx].lhs(), sys, idx)) {
        pending.emplace_back(rules[idx].lhs(), rules[idx].rhs());
      } else {
        kept.push_back(rules[idx]);
      }
    }
    rules = std::move(kept);
    if (pending.empty()) {
      break;
    }
  }
  RewriteSystem sys(alphabet, rules);
  std::vector<Rule> out;
  out.reserve(rules.size());
  for (auto const& r : rules) {
    out.emplace_back(r.lhs(), normalize(r.rhs(), sys));
  }
  std::sort(out.begin(), out.end(), RuleLess{});
  return RewriteSystem(alphabet, std::move(out));
}

inline RewriteSystem inter_reduce(RewriteSystem const& sys) {
  return inter_reduce(sys.alphabet(), sys.rules());
}

struct CompletionBounds {
  std::size_t max_rules = 10000;
  std::size_t max_word_len = 12;
  std::size_t max_iterations = 100;
};

enum class CompletionStop { converged, max_iterations, max_rules, max_word_len };

inline char const* to_string(CompletionStop s) {
  switch (s) {
    case CompletionStop::converged:
      return "converged";
    case CompletionStop::max_iterations:
      return "iteration bound reached";
    case CompletionStop::max_rules:
      return "rule bound reached";
    case CompletionStop::max_word_len:
      return "word length bound reached";
  }
  return "unknown";
}

struct CompletionResult {
  RewriteSystem result;
  bool converged = false;
  CompletionStop stop = CompletionStop::max_iterations;
  std::size_t iterations = 0;
  // Rules adjoined from nontrivial compositions, in discovery order (before
  // the final inter-reduction, so some may have been simplified away).
  std::vector<Rule> adjoined;
};

// Shirshov completion. Each pass enumerates every ambiguity of the current
// (inter-reduced) set in rule-index order, adjoins each nontrivial
// composition as a rule oriented by deg-lex, then inter-reduces. Passes
// visit every pair of live rules, so the procedure is fair. Stops when a pass
// finds nothing new (converged) or a bound is hit.
inline CompletionResult complete(Alphabet alphabet,
                                 std::vector<Rule> const& initial,
                                 CompletionBounds const& bounds = {}) {
  CompletionResult out{inter_reduce(alphabet, initial), false,
                       CompletionStop::max_iterations, 0, {}};
  while (out.iterations < bounds.max_iterations) {
    ++out.iterations;
    RewriteSystem const& sys = out.result;
    std::vector<Rule> next = sys.rules();
    std::size_t const before = next.size();
    bool oversized = false;
    for (auto const& amb : enumerate_ambiguities(sys)) {
      Composition c = composition(amb);
      auto r = Rule::oriented(normalize(c.p, sys), normalize(c.q, sys));
      if (!r) {
        continue;
      }
      if (r->lhs().size() > bounds.max_word_len) {
        oversized = true;
        continue;
      }
      out.adjoined.push_back(*r);
      next.push_back(std::move(*r));
    }
    if (next.size() == before) {
      if (oversized) {
        out.stop = CompletionStop::max_word_len;
        return out;
      }
      out.converged = true;
      out.stop = CompletionStop::converged;
      return out;
    }
    out.result = inter_reduce(alphabet, next);
    if (out.result.size() > bounds.max_rules) {
      out.stop = CompletionStop::max_rules;
      return out;
    }
  }
  out.stop = CompletionStop::max_iterations;
  return out;
}

inline CompletionResult complete(RewriteSystem const& initial,
                                 CompletionBounds const& bounds = {}) {
  return complete(initial.alphabet(), initial.rules(), bounds);
}

// The defining relations of the Chinese monoid, each oriented by deg-lex:
// ijk -> jik, ikj -> jik, ijj -> jij, iij -> iji for i > j > k.
inline std::vector<Rule> chinese_defining_rules(Alphabet alphabet) {
  std::vector<Rule> out;
  auto const all = chinese_rules(alphabet);
  for (auto const& r : all.rules()) {
    if (chinese_shape_of(r) != 5) {
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace chinese
