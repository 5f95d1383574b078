// Staircase normal forms and the insertion algorithm.
//
// A staircase over a chain x_1 < ... < x_n has rows
//   w_k = (x_k x_1)^t[k][1] ... (x_k x_{k-1})^t[k][k-1] x_k^t[k][k]
// and spells w_1 w_2 ... w_n. Inserting a letter on the right keeps the
// staircase shape and agrees with right multiplication in the Chinese monoid,
// so folding insertion over a word yields its normal form without rewriting.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chinese/word.hpp"

namespace chinese {

using Exponent = std::uint64_t;

class Staircase {
 public:
  explicit Staircase(Alphabet alphabet) : alphabet_(alphabet) {}

  // rows[k] holds t[k][0..k]. Throws unless the chain is strictly increasing
  // and the row shapes are triangular. The result is canonicalised.
  Staircase(Alphabet alphabet, std::vector<Letter> chain,
            std::vector<std::vector<Exponent>> rows)
      : alphabet_(alphabet), chain_(std::move(chain)), rows_(std::move(rows)) {
    if (chain_.size() != rows_.size()) {
      throw std::invalid_argument("staircase needs one row per chain letter");
    }
    for (std::size_t k = 0; k < chain_.size(); ++k) {
      if (!alphabet_.contains(chain_[k])) {
        throw std::out_of_range("chain letter outside alphabet");
      }
      if (k > 0 && chain_[k - 1] >= chain_[k]) {
        throw std::invalid_argument("staircase chain must be strictly increasing");
      }
      if (rows_[k].size() != k + 1) {
        throw std::invalid_argument("staircase row " + std::to_string(k)
                                    + " must have " + std::to_string(k + 1)
                                    + " exponents");
      }
    }
    canonicalize();
  }

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::vector<Letter> const& chain() const noexcept { return chain_; }
  std::vector<std::vector<Exponent>> const& rows() const noexcept {
    return rows_;
  }
  std::size_t height() const noexcept { return chain_.size(); }
  bool empty() const noexcept { return chain_.empty(); }

  // Length of the spelled word: sum over rows of t[k][k] + 2 * sum t[k][i<k].
  std::size_t spelled_length() const noexcept {
    std::size_t len = 0;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        len += 2 * rows_[k][i];
      }
      len += rows_[k][k];
    }
    return len;
  }

  // Right-multiplies by x. Returns the number of rows visited, a proxy for
  // the work done.
  std::size_t insert(Letter x) {
    if (!alphabet_.contains(x)) {
      throw std::out_of_range("letter " + std::to_string(x)
                              + " outside alphabet");
    }
    std::size_t const visited = insert_raw(x);
    canonicalize();
    return visited;
  }

  friend bool operator==(Staircase const&, Staircase const&) = default;

 private:
  std::size_t position_of(Letter x) const {
    return static_cast<std::size_t>(
        std::lower_bound(chain_.begin(), chain_.end(), x) - chain_.begin());
  }

  // Adds a chain letter with an all-zero row at its sorted position, widening
  // every later row by one zero column.
  std::size_t add_zero_row(Letter x) {
    std::size_t const k = position_of(x);
    chain_.insert(chain_.begin() + static_cast<std::ptrdiff_t>(k), x);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k),
                 std::vector<Exponent>(k + 1, 0));
    for (std::size_t r = k + 1; r < rows_.size(); ++r) {
      rows_[r].insert(rows_[r].begin() + static_cast<std::ptrdiff_t>(k), 0);
    }
    return k;
  }

  std::size_t insert_raw(Letter x) {
    // x above the chain: new top row x^1.
    if (chain_.empty() || x > chain_.back()) {
      chain_.push_back(x);
      rows_.emplace_back(chain_.size(), 0);
      rows_.back().back() = 1;
      return 1;
    }
    std::size_t k = position_of(x);
    if (k == chain_.size() || chain_[k] != x) {
      // Below the chain, or strictly between two chain letters: give x a
      // zero row so that it becomes some x_k.
      k = add_zero_row(x);
    }
    // Walk down from the top row. Invariant: k <= top.
    std::size_t top = chain_.size() - 1;
    std::size_t visited = 0;
    while (true) {
      ++visited;
      auto& row = rows_[top];
      if (k == top) {
        ++row[top];
        return visited;
      }
      // Greatest index with a nonzero exponent in the top row, diagonal
      // included; k if the row is all zero.
      std::size_t i = k;
      for (std::size_t c = top + 1; c-- > 0;) {
        if (row[c] != 0) {
          i = c;
          break;
        }
      }
      if (k >= i) {
        // x commutes past the whole top row.
        --top;
        continue;
      }
      if (i == top) {
        --row[top];
        ++row[k];
        return visited;
      }
      // (x_top x_i) becomes (x_top x_k); x_i moves on into the rows below.
      --row[i];
      ++row[k];
      k = i;
      --top;
    }
  }

  // Drops chain letters that no longer occur in the spelled word.
  void canonicalize() {
    std::size_t k = chain_.size();
    while (k-- > 0) {
      bool used = std::any_of(rows_[k].begin(), rows_[k].end(),
                              [](Exponent t) { return t != 0; });
      for (std::size_t r = k + 1; r < rows_.size() && !used; ++r) {
        used = rows_[r][k] != 0;
      }
      if (used) {
        continue;
      }
      chain_.erase(chain_.begin() + static_cast<std::ptrdiff_t>(k));
      rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(k));
      for (std::size_t r = k; r < rows_.size(); ++r) {
        rows_[r].erase(rows_[r].begin() + static_cast<std::ptrdiff_t>(k));
      }
    }
  }

  Alphabet alphabet_;
  std::vector<Letter> chain_;
  std::vector<std::vector<Exponent>> rows_;
};

inline Word staircase_to_word(Staircase const& s) {
  std::vector<Letter> out;
  out.reserve(s.spelled_length());
  auto const& chain = s.chain();
  for (std::size_t k = 0; k < chain.size(); ++k) {
    auto const& row = s.rows()[k];
    for (std::size_t i = 0; i < k; ++i) {
      for (Exponent t = 0; t < row[i]; ++t) {
        out.push_back(chain[k]);
        out.push_back(chain[i]);
      }
    }
    out.insert(out.end(), row[k], chain[k]);
  }
  return Word(s.alphabet(), std::move(out));
}

inline Staircase insert(Staircase s, Letter x) {
  s.insert(x);
  return s;
}

inline Staircase word_to_staircase(Word const& w,
                                   std::size_t* rows_visited = nullptr) {
  Staircase s(w.alphabet());
  std::size_t visited = 0;
  for (Letter x : w) {
    visited += s.insert(x);
  }
  if (rows_visited != nullptr) {
    *rows_visited = visited;
  }
  return s;
}

// Reads w as a staircase word, if it is one. Each row is a block opened by
// its dominant letter d: pairs (d a) with a < d and a non-decreasing, then a
// run of d. Dominant letters strictly increase from block to block.
inline std::optional<Staircase> parse_staircase(Word const& w) {
  struct Block {
    Letter dominant;
    std::vector<Letter> pair_letters;
    Exponent diagonal = 0;
  };
  std::vector<Block> blocks;
  std::size_t p = 0;
  while (p < w.size()) {
    Letter const d = w[p];
    if (!blocks.empty() && d <= blocks.back().dominant) {
      return std::nullopt;
    }
    Block b{d, {}, 0};
    while (p + 1 < w.size() && w[p] == d && w[p + 1] < d
           && (b.pair_letters.empty() || w[p + 1] >= b.pair_letters.back())) {
      b.pair_letters.push_back(w[p + 1]);
      p += 2;
    }
    while (p < w.size() && w[p] == d) {
      ++b.diagonal;
      ++p;
    }
    if (b.pair_letters.empty() && b.diagonal == 0) {
      return std::nullopt;
    }
    blocks.push_back(std::move(b));
  }
  std::vector<Letter> chain;
  for (auto const& b : blocks) {
    chain.push_back(b.dominant);
    chain.insert(chain.end(), b.pair_letters.begin(), b.pair_letters.end());
  }
  std::sort(chain.begin(), chain.end());
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
  std::vector<std::vector<Exponent>> rows;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    rows.emplace_back(k + 1, 0);
  }
  auto index = [&](Letter x) {
    return static_cast<std::size_t>(
        std::lower_bound(chain.begin(), chain.end(), x) - chain.begin());
  };
  for (auto const& b : blocks) {
    auto& row = rows[index(b.dominant)];
    for (Letter a : b.pair_letters) {
      ++row[index(a)];
    }
    row.back() = b.diagonal;
  }
  return Staircase(w.alphabet(), std::move(chain), std::move(rows));
}

inline bool is_staircase_word(Word const& w) {
  return parse_staircase(w).has_value();
}

// One line per chain letter: "<letter>: t1 t2 ... tk".
inline std::string format_staircase_table(Staircase const& s) {
  std::string out;
  for (std::size_t k = 0; k < s.height(); ++k) {
    out += format_word(Word(s.alphabet(), {s.chain()[k]}));
    out += ':';
    for (Exponent t : s.rows()[k]) {
      out += ' ';
      out += std::to_string(t);
    }
    out += '\n';
  }
  return out;
}

}  // namespace chinese
