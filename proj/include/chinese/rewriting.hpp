// String rewriting over deg-lex oriented rules, and the Chinese rule set.
//
// A RewriteSystem either stores its rules explicitly (indexed by lhs) or, for
// the Chinese monoid over a large alphabet, matches the five rule shapes
// directly without materialising the O(n^3) instances.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chinese/word.hpp"

namespace chinese {

class Rule {
 public:
  // Requires lhs > rhs in deg-lex (so lhs is nonempty).
  Rule(Word lhs, Word rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    if (deg_lex_compare(lhs_, rhs_) <= 0) {
      throw std::invalid_argument("rule " + format_word(lhs_) + " -> "
                                  + format_word(rhs_)
                                  + " is not deg-lex decreasing");
    }
  }

  // Orients the relation u = v as a rule; nullopt if u == v.
  static std::optional<Rule> oriented(Word u, Word v) {
    auto const cmp = deg_lex_compare(u, v);
    if (cmp == 0) {
      return std::nullopt;
    }
    if (cmp > 0) {
      return Rule(std::move(u), std::move(v));
    }
    return Rule(std::move(v), std::move(u));
  }

  Word const& lhs() const noexcept { return lhs_; }
  Word const& rhs() const noexcept { return rhs_; }
  Alphabet alphabet() const noexcept { return lhs_.alphabet(); }

  friend bool operator==(Rule const&, Rule const&) = default;

 private:
  Word lhs_;
  Word rhs_;
};

inline std::string format_rule(Rule const& r) {
  return format_word(r.lhs()) + " -> " + format_word(r.rhs());
}

// Rule ordering used for canonical listings: by lhs, then rhs, in deg-lex.
struct RuleLess {
  bool operator()(Rule const& a, Rule const& b) const {
    auto const c = deg_lex_compare(a.lhs(), b.lhs());
    if (c != 0) {
      return c < 0;
    }
    return deg_lex_compare(a.rhs(), b.rhs()) < 0;
  }
};

struct Redex {
  std::size_t position;
  Rule rule;
};

namespace detail {

  // Lexicographic comparison between stored lhs vectors and letter spans, so
  // the lhs index can be probed without copying.
  struct SpanLess {
    using is_transparent = void;
    template <typename A, typename B>
    bool operator()(A const& a, B const& b) const {
      return std::lexicographical_compare(std::begin(a), std::end(a),
                                          std::begin(b), std::end(b));
    }
  };

  // A match found while scanning: the lhs occupies [position, position +
  // length) and is to be replaced by `replacement`.
  struct Match {
    std::size_t position;
    std::size_t length;
    std::span<Letter const> replacement;
  };

  // Chinese rule shapes, with i > j > k:
  //   (1) ijk -> jik  (2) ikj -> jik  (3) ijj -> jij  (4) iij -> iji
  //   (5) ijik -> ikij
  // At most one shape matches at a given position.
  inline std::optional<std::size_t> chinese_shape_at(
      std::span<Letter const> w, std::size_t pos,
      std::array<Letter, 4>& out) {
    if (pos + 3 > w.size()) {
      return std::nullopt;
    }
    Letter const x = w[pos], y = w[pos + 1], z = w[pos + 2];
    if (x > y && y > z) {
      out = {y, x, z, 0};
      return 3;
    }
    if (x > z && z > y) {
      out = {z, x, y, 0};
      return 3;
    }
    if (x > y && y == z) {
      out = {y, x, y, 0};
      return 3;
    }
    if (x == y && y > z) {
      out = {x, z, x, 0};
      return 3;
    }
    if (pos + 4 <= w.size() && z == x && x > y && y > w[pos + 3]) {
      out = {x, w[pos + 3], x, y};
      return 4;
    }
    return std::nullopt;
  }

}  // namespace detail

class RewriteSystem {
 public:
  explicit RewriteSystem(Alphabet alphabet) : alphabet_(alphabet) {}

  // Exact duplicates are dropped; two different rhs for one lhs throw.
  RewriteSystem(Alphabet alphabet, std::vector<Rule> rules)
      : alphabet_(alphabet) {
    for (auto& r : rules) {
      add(std::move(r));
    }
  }

  // The Chinese system matched by shape; rules() is empty. Suitable for very
  // large alphabets where instantiating every rule is impractical.
  static RewriteSystem chinese_by_shape(Alphabet alphabet) {
    RewriteSystem sys(alphabet);
    sys.by_shape_ = true;
    sys.max_lhs_ = 4;
    sys.lhs_lengths_ = {3, 4};
    return sys;
  }

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::vector<Rule> const& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }
  bool matches_by_shape() const noexcept { return by_shape_; }
  std::size_t max_lhs_length() const noexcept { return max_lhs_; }

  // Returns false if an identical rule was already present.
  bool add(Rule rule) {
    if (rule.alphabet() != alphabet_) {
      throw std::invalid_argument("rule over a different alphabet");
    }
    if (by_shape_) {
      throw std::logic_error("cannot add rules to a shape-matched system");
    }
    auto it = index_.find(rule.lhs().letters());
    if (it != index_.end()) {
      if (rules_[it->second].rhs() == rule.rhs()) {
        return false;
      }
      throw std::invalid_argument("two rules share the lhs "
                                  + format_word(rule.lhs()));
    }
    index_.emplace(rule.lhs().letters(), rules_.size());
    lhs_lengths_.insert(rule.lhs().size());
    max_lhs_ = std::max(max_lhs_, rule.lhs().size());
    rules_.push_back(std::move(rule));
    return true;
  }

  std::optional<std::size_t> find_rule(std::span<Letter const> lhs) const {
    auto it = index_.find(lhs);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool is_lhs(std::span<Letter const> w) const {
    if (by_shape_) {
      std::array<Letter, 4> scratch{};
      auto len = detail::chinese_shape_at(w, 0, scratch);
      return len && *len == w.size();
    }
    return index_.find(w) != index_.end();
  }

  // Shortest lhs occurring at `pos`, if any. `scratch` backs the replacement
  // for shape matching and must outlive the returned match.
  std::optional<detail::Match> match_at(std::span<Letter const> w,
                                        std::size_t pos,
                                        std::array<Letter, 4>& scratch) const {
    if (by_shape_) {
      if (auto len = detail::chinese_shape_at(w, pos, scratch)) {
        return detail::Match{pos, *len, std::span<Letter const>(scratch.data(), *len)};
      }
      return std::nullopt;
    }
    for (std::size_t len : lhs_lengths_) {
      if (pos + len > w.size()) {
        break;
      }
      auto it = index_.find(w.subspan(pos, len));
      if (it != index_.end()) {
        return detail::Match{pos, len, rules_[it->second].rhs().view()};
      }
    }
    return std::nullopt;
  }

  // Every (position, lhs length) at which some lhs occurs.
  std::vector<detail::Match> all_matches(
      std::span<Letter const> w,
      std::vector<std::array<Letter, 4>>& scratch) const {
    std::vector<detail::Match> out;
    scratch.clear();
    scratch.reserve(w.size());
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (by_shape_) {
        std::array<Letter, 4> buf{};
        if (auto len = detail::chinese_shape_at(w, pos, buf)) {
          scratch.push_back(buf);
          out.push_back({pos, *len,
                         std::span<Letter const>(scratch.back().data(), *len)});
        }
        continue;
      }
      for (std::size_t len : lhs_lengths_) {
        if (pos + len > w.size()) {
          break;
        }
        auto it = index_.find(w.subspan(pos, len));
        if (it != index_.end()) {
          out.push_back({pos, len, rules_[it->second].rhs().view()});
        }
      }
    }
    return out;
  }

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::map<std::vector<Letter>, std::size_t, detail::SpanLess> index_;
  std::set<std::size_t> lhs_lengths_;
  std::size_t max_lhs_ = 0;
  bool by_shape_ = false;
};

// All instances over 1..n of the five Chinese rule shapes (see
// detail::chinese_shape_at), listed shape by shape.
inline RewriteSystem chinese_rules(Alphabet alphabet) {
  auto const n = static_cast<Letter>(alphabet.size());
  std::vector<Rule> rules;
  auto word = [&](std::initializer_list<Letter> xs) {
    return Word(alphabet, xs);
  };
  for (Letter i = 1; i <= n; ++i) {
    for (Letter j = 1; j < i; ++j) {
      for (Letter k = 1; k < j; ++k) {
        rules.emplace_back(word({i, j, k}), word({j, i, k}));
      }
    }
  }
  for (Letter i = 1; i <= n; ++i) {
    for (Letter j = 1; j < i; ++j) {
      for (Letter k = 1; k < j; ++k) {
        rules.emplace_back(word({i, k, j}), word({j, i, k}));
      }
    }
  }
  for (Letter i = 1; i <= n; ++i) {
    for (Letter j = 1; j < i; ++j) {
      rules.emplace_back(word({i, j, j}), word({j, i, j}));
    }
  }
  for (Letter i = 1; i <= n; ++i) {
    for (Letter j = 1; j < i; ++j) {
      rules.emplace_back(word({i, i, j}), word({i, j, i}));
    }
  }
  for (Letter i = 1; i <= n; ++i) {
    for (Letter j = 1; j < i; ++j) {
      for (Letter k = 1; k < j; ++k) {
        rules.emplace_back(word({i, j, i, k}), word({i, k, i, j}));
      }
    }
  }
  return RewriteSystem(alphabet, std::move(rules));
}

// Shape number 1..5 of a Chinese rule instance, if it is one.
inline std::optional<int> chinese_shape_of(Rule const& r) {
  auto const& l = r.lhs();
  std::array<Letter, 4> rhs{};
  auto len = detail::chinese_shape_at(l.view(), 0, rhs);
  if (!len || *len != l.size()
      || !std::equal(r.rhs().begin(), r.rhs().end(), rhs.begin(),
                     rhs.begin() + *len)
      || r.rhs().size() != *len) {
    return std::nullopt;
  }
  if (l.size() == 4) {
    return 5;
  }
  if (l[0] > l[1] && l[1] > l[2]) {
    return 1;
  }
  if (l[0] > l[2] && l[2] > l[1]) {
    return 2;
  }
  if (l[1] == l[2]) {
    return 3;
  }
  return 4;
}

inline std::optional<Redex> find_redex(Word const& w, RewriteSystem const& sys) {
  w.require_same_alphabet(Word(sys.alphabet()));
  std::array<Letter, 4> scratch{};
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (auto m = sys.match_at(w.view(), pos, scratch)) {
      Word lhs = w.factor(pos, m->length);
      Word rhs(sys.alphabet(), m->replacement);
      return Redex{pos, Rule(std::move(lhs), std::move(rhs))};
    }
  }
  return std::nullopt;
}

inline bool is_irreducible(Word const& w, RewriteSystem const& sys) {
  std::array<Letter, 4> scratch{};
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (sys.match_at(w.view(), pos, scratch)) {
      return false;
    }
  }
  return true;
}

struct Normalized {
  Word word;
  std::size_t steps = 0;
};

// Leftmost-redex normalisation (shortest lhs on ties). After a rewrite at p
// only redexes starting at or after p - (max lhs - 1) can be new, so the
// cursor backs up that far instead of restarting.
inline Normalized normalize_counted(Word const& w, RewriteSystem const& sys) {
  w.require_same_alphabet(Word(sys.alphabet()));
  std::vector<Letter> buf = w.letters();
  std::array<Letter, 4> scratch{};
  std::size_t const backtrack =
      sys.max_lhs_length() > 0 ? sys.max_lhs_length() - 1 : 0;
  std::size_t steps = 0;
  std::size_t pos = 0;
  while (pos < buf.size()) {
    auto m = sys.match_at(buf, pos, scratch);
    if (!m) {
      ++pos;
      continue;
    }
    ++steps;
    if (m->length == m->replacement.size()) {
      std::copy(m->replacement.begin(), m->replacement.end(),
                buf.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      std::vector<Letter> rhs(m->replacement.begin(), m->replacement.end());
      auto first = buf.begin() + static_cast<std::ptrdiff_t>(pos);
      buf.erase(first, first + static_cast<std::ptrdiff_t>(m->length));
      buf.insert(buf.begin() + static_cast<std::ptrdiff_t>(pos), rhs.begin(),
                 rhs.end());
    }
    pos = pos > backtrack ? pos - backtrack : 0;
  }
  return {Word(sys.alphabet(), std::move(buf)), steps};
}

inline Word normalize(Word const& w, RewriteSystem const& sys) {
  return normalize_counted(w, sys).word;
}

// Applies the lhs match occupying [pos, pos + len) of w.
inline Word rewrite_at(Word const& w, detail::Match const& m) {
  std::vector<Letter> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m.position));
  out.insert(out.end(), m.replacement.begin(), m.replacement.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(m.position + m.length),
             w.end());
  return Word(w.alphabet(), std::move(out));
}

// Normalises with a caller-chosen redex at every step; `choose` receives the
// number of available redexes (> 0) and returns an index below it. `on_step`
// sees each (before, after) pair.
inline Word normalize_with(
    Word w, RewriteSystem const& sys,
    std::function<std::size_t(std::size_t)> const& choose,
    std::function<void(Word const&, Word const&)> const& on_step = {}) {
  std::vector<std::array<Letter, 4>> scratch;
  while (true) {
    auto matches = sys.all_matches(w.view(), scratch);
    if (matches.empty()) {
      return w;
    }
    std::size_t const pick = choose(matches.size());
    if (pick >= matches.size()) {
      throw std::out_of_range("redex choice out of range");
    }
    Word next = rewrite_at(w, matches[pick]);
    if (on_step) {
      on_step(w, next);
    }
    w = std::move(next);
  }
}

}  // namespace chinese
