// Ordered alphabets, words over them, the deg-lex order and the text codec.
//
// Letters are dense integers 1..n ordered by value; letter 1 is least. Words
// with n <= 26 are written with lowercase letters (a = 1), otherwise as
// whitespace-separated integers.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chinese {

using Letter = std::uint32_t;

class Alphabet {
 public:
  explicit constexpr Alphabet(std::size_t size) : size_(size) {
    if (size == 0) {
      throw std::invalid_argument("alphabet size must be at least 1");
    }
  }

  constexpr std::size_t size() const noexcept { return size_; }
  constexpr bool contains(Letter x) const noexcept {
    return x >= 1 && x <= size_;
  }
  // Letter codec (a, b, c, ...) is used up to this size.
  constexpr bool uses_letter_codec() const noexcept { return size_ <= 26; }

  friend constexpr bool operator==(Alphabet, Alphabet) = default;

 private:
  std::size_t size_;
};

// Thrown for malformed word or rule text; carries the offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position)
                           + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}

  Word(Alphabet alphabet, std::vector<Letter> letters)
      : alphabet_(alphabet), letters_(std::move(letters)) {
    validate();
  }

  Word(Alphabet alphabet, std::initializer_list<Letter> letters)
      : Word(alphabet, std::vector<Letter>(letters)) {}

  Word(Alphabet alphabet, std::span<Letter const> letters)
      : Word(alphabet, std::vector<Letter>(letters.begin(), letters.end())) {}

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::span<Letter const> view() const noexcept { return letters_; }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Subword [pos, pos + len).
  Word factor(std::size_t pos, std::size_t len) const {
    return Word(alphabet_, view().subspan(pos, len));
  }

  Word& append(Word const& other) {
    require_same_alphabet(other);
    letters_.insert(letters_.end(), other.letters_.begin(),
                    other.letters_.end());
    return *this;
  }

  Word& push_back(Letter x) {
    if (!alphabet_.contains(x)) {
      throw std::out_of_range("letter " + std::to_string(x)
                              + " outside alphabet of size "
                              + std::to_string(alphabet_.size()));
    }
    letters_.push_back(x);
    return *this;
  }

  friend Word operator*(Word lhs, Word const& rhs) {
    lhs.append(rhs);
    return lhs;
  }

  friend bool operator==(Word const&, Word const&) = default;

  void require_same_alphabet(Word const& other) const {
    if (alphabet_ != other.alphabet_) {
      throw std::invalid_argument("words over different alphabets ("
                                  + std::to_string(alphabet_.size()) + " vs "
                                  + std::to_string(other.alphabet_.size())
                                  + ")");
    }
  }

 private:
  void validate() const {
    for (Letter x : letters_) {
      if (!alphabet_.contains(x)) {
        throw std::out_of_range("letter " + std::to_string(x)
                                + " outside alphabet of size "
                                + std::to_string(alphabet_.size()));
      }
    }
  }

  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

// Deg-lex on raw letter sequences: shorter is smaller, then the first
// differing letter decides.
inline std::strong_ordering deg_lex_compare(std::span<Letter const> u,
                                            std::span<Letter const> v) {
  if (u.size() != v.size()) {
    return u.size() <=> v.size();
  }
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(),
                                                v.end());
}

// Throws std::invalid_argument if the words live over different alphabets.
inline std::strong_ordering deg_lex_compare(Word const& u, Word const& v) {
  u.require_same_alphabet(v);
  return deg_lex_compare(u.view(), v.view());
}

// Strict weak ordering for ordered containers of words.
struct DegLexLess {
  bool operator()(Word const& u, Word const& v) const {
    return deg_lex_compare(u, v) < 0;
  }
};

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept {
    std::size_t h = w.size();
    for (Letter x : w) {
      h ^= std::hash<Letter>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline Word parse_word(std::string_view text, Alphabet alphabet) {
  std::vector<Letter> letters;
  bool const has_digit = std::any_of(text.begin(), text.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
  if (!has_digit) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char const c = text[i];
      if (c == ' ' || c == '\t') {
        continue;
      }
      if (c < 'a' || c > 'z') {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      if (!alphabet.uses_letter_codec()) {
        throw ParseError("letter form needs an alphabet of at most 26 letters",
                         i);
      }
      Letter const x = static_cast<Letter>(c - 'a' + 1);
      if (!alphabet.contains(x)) {
        throw ParseError(std::string("letter '") + c
                             + "' outside alphabet of size "
                             + std::to_string(alphabet.size()),
                         i);
      }
      letters.push_back(x);
    }
    return Word(alphabet, std::move(letters));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    char const c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c < '0' || c > '9') {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    std::size_t const start = i;
    std::uint64_t value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (value > alphabet.size()) {
        break;
      }
      ++i;
    }
    if (value == 0 || value > alphabet.size()) {
      throw ParseError("letter index " + std::to_string(value)
                           + " outside alphabet of size "
                           + std::to_string(alphabet.size()),
                       start);
    }
    letters.push_back(static_cast<Letter>(value));
  }
  return Word(alphabet, std::move(letters));
}

inline std::string format_word(Word const& w) {
  std::string out;
  if (w.alphabet().uses_letter_codec()) {
    out.reserve(w.size());
    for (Letter x : w) {
      out.push_back(static_cast<char>('a' + x - 1));
    }
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) {
      out.push_back(' ');
    }
    out += std::to_string(w[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, Word const& w) {
  return os << '"' << format_word(w) << '"';
}

}  // namespace chinese
