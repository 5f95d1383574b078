// Brute-force decision of the Chinese congruence, independent of the rule
// set S and of staircase insertion.
//
// The defining relations, for letters i > j > k:
//   ijk = ikj = jik,   ijj = jij,   iij = iji.
// Each relation is an undirected clique of words; a congruence class is the
// closure of a word under replacing any factor by another member of its
// clique. All relations are length-preserving, so classes are finite.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "chinese/word.hpp"

namespace chinese {

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CongruenceClass {
  Word representative;
  // Sorted in deg-lex.
  std::vector<Word> members;

  bool contains(Word const& w) const {
    return std::binary_search(members.begin(), members.end(), w, DegLexLess{});
  }
};

struct OracleLimits {
  std::size_t max_word_length = 10;
  std::uint64_t max_enumeration = 10'000'000;
};

namespace detail {

  // Calls f(v) for every word v obtained from w by one relation step.
  template <typename F>
  void for_each_relation_neighbour(std::span<Letter const> w, F&& f) {
    std::vector<Letter> buf(w.begin(), w.end());
    auto emit = [&](std::size_t pos, std::array<Letter, 3> const& repl) {
      std::array<Letter, 3> saved{buf[pos], buf[pos + 1], buf[pos + 2]};
      if (saved == repl) {
        return;
      }
      std::copy(repl.begin(), repl.end(), buf.begin() + static_cast<std::ptrdiff_t>(pos));
      f(std::span<Letter const>(buf));
      std::copy(saved.begin(), saved.end(), buf.begin() + static_cast<std::ptrdiff_t>(pos));
    };
    for (std::size_t pos = 0; pos + 3 <= w.size(); ++pos) {
      Letter const a = w[pos], b = w[pos + 1], c = w[pos + 2];
      // Identify which clique, if any, the factor abc belongs to, and recover
      // its letters (hi > mid > lo, or hi > lo for the two-letter cliques).
      std::array<Letter, 3> sorted{a, b, c};
      std::sort(sorted.begin(), sorted.end());
      Letter const lo = sorted[0], mid = sorted[1], hi = sorted[2];
      if (lo < mid && mid < hi) {
        // {i j k, i k j, j i k} with i = hi, j = mid, k = lo.
        std::array<std::array<Letter, 3>, 3> const clique{
            {{hi, mid, lo}, {hi, lo, mid}, {mid, hi, lo}}};
        if (std::find(clique.begin(), clique.end(), std::array<Letter, 3>{a, b, c})
            != clique.end()) {
          for (auto const& r : clique) {
            emit(pos, r);
          }
        }
      } else if (lo < hi) {
        Letter const other = (mid == lo) ? lo : hi;  // the repeated letter
        if (other == lo) {
          // {i j j, j i j} with i = hi, j = lo.
          std::array<std::array<Letter, 3>, 2> const clique{
              {{hi, lo, lo}, {lo, hi, lo}}};
          if (std::find(clique.begin(), clique.end(), std::array<Letter, 3>{a, b, c})
              != clique.end()) {
            for (auto const& r : clique) {
              emit(pos, r);
            }
          }
        } else {
          // {i i j, i j i} with i = hi, j = lo.
          std::array<std::array<Letter, 3>, 2> const clique{
              {{hi, hi, lo}, {hi, lo, hi}}};
          if (std::find(clique.begin(), clique.end(), std::array<Letter, 3>{a, b, c})
              != clique.end()) {
            for (auto const& r : clique) {
              emit(pos, r);
            }
          }
        }
      }
    }
  }

}  // namespace detail

// Breadth-first closure of {w}. Throws OracleLimitError above the length
// limit.
inline CongruenceClass congruence_class(Word const& w,
                                        OracleLimits const& limits = {}) {
  if (w.size() > limits.max_word_length) {
    throw OracleLimitError("congruence class of a word of length "
                           + std::to_string(w.size())
                           + " refused: limit is "
                           + std::to_string(limits.max_word_length));
  }
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    detail::for_each_relation_neighbour(u.view(), [&](std::span<Letter const> v) {
      if (v.size() != u.size()) {
        throw std::logic_error("defining relation changed word length");
      }
      Word next(w.alphabet(), v);
      if (seen.insert(next).second) {
        queue.push_back(std::move(next));
      }
    });
  }
  std::vector<Word> members(seen.begin(), seen.end());
  std::sort(members.begin(), members.end(), DegLexLess{});
  return {w, std::move(members)};
}

inline bool congruent(Word const& u, Word const& v,
                      OracleLimits const& limits = {}) {
  u.require_same_alphabet(v);
  if (u.size() != v.size()) {
    return false;
  }
  return congruence_class(u, limits).contains(v);
}

namespace detail {

  inline std::uint64_t checked_power(std::uint64_t base, std::size_t exp,
                                     std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t e = 0; e < exp; ++e) {
      if (r > cap / base) {
        return cap + 1;
      }
      r *= base;
    }
    return r;
  }

  // Words of length len over 1..n indexed in base n, most significant letter
  // first. Index order coincides with deg-lex order within one length.
  inline std::vector<Letter> decode_index(std::uint64_t index, std::size_t n,
                                          std::size_t len) {
    std::vector<Letter> w(len);
    for (std::size_t p = len; p-- > 0;) {
      w[p] = static_cast<Letter>(index % n) + 1;
      index /= n;
    }
    return w;
  }

  inline std::uint64_t encode_index(std::span<Letter const> w, std::size_t n) {
    std::uint64_t index = 0;
    for (Letter x : w) {
      index = index * n + (x - 1);
    }
    return index;
  }

}  // namespace detail

// Partition of all words of one length into congruence classes, computed by
// union-find over single relation steps.
class ClassPartition {
 public:
  ClassPartition(Alphabet alphabet, std::size_t length,
                 OracleLimits const& limits = {})
      : alphabet_(alphabet), length_(length) {
    std::uint64_t const total = detail::checked_power(
        alphabet.size(), length, limits.max_enumeration);
    if (total > limits.max_enumeration) {
      throw OracleLimitError("enumerating " + std::to_string(alphabet.size())
                             + "^" + std::to_string(length)
                             + " words exceeds the budget of "
                             + std::to_string(limits.max_enumeration));
    }
    parent_.resize(total);
    std::iota(parent_.begin(), parent_.end(), std::uint64_t{0});
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      auto w = detail::decode_index(idx, alphabet.size(), length);
      detail::for_each_relation_neighbour(w, [&](std::span<Letter const> v) {
        unite(idx, detail::encode_index(v, alphabet.size()));
      });
    }
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (find(idx) == idx) {
        ++classes_;
      }
    }
  }

  std::size_t class_count() const noexcept { return classes_; }
  std::uint64_t word_count() const noexcept { return parent_.size(); }

  // Class id of the word with the given base-n index (its root index).
  std::uint64_t class_of_index(std::uint64_t idx) const {
    while (parent_[idx] != idx) {
      idx = parent_[idx];
    }
    return idx;
  }

  std::uint64_t class_of(Word const& w) const {
    if (w.size() != length_ || w.alphabet() != alphabet_) {
      throw std::invalid_argument("word not in this partition");
    }
    return class_of_index(detail::encode_index(w.view(), alphabet_.size()));
  }

  Word word_at(std::uint64_t idx) const {
    return Word(alphabet_, detail::decode_index(idx, alphabet_.size(), length_));
  }

 private:
  std::uint64_t find(std::uint64_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller index becomes the root, so roots are deg-lex least members
  // and the result is independent of visiting order.
  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (b < a) {
      std::swap(a, b);
    }
    parent_[b] = a;
  }

  Alphabet alphabet_;
  std::size_t length_;
  std::vector<std::uint64_t> parent_;
  std::size_t classes_ = 0;
};

inline std::size_t count_classes(std::size_t n, std::size_t length,
                                 OracleLimits const& limits = {}) {
  return ClassPartition(Alphabet(n), length, limits).class_count();
}

}  // namespace chinese
