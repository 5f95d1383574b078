// Rule-set text format: one `lhs -> rhs` per line, words in the word codec,
// `#` starts a comment. Relations are oriented by deg-lex on load; a line
// whose two sides are equal contributes nothing.

#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chinese/rewriting.hpp"
#include "chinese/word.hpp"

namespace chinese {

class RuleFileError : public std::runtime_error {
 public:
  RuleFileError(std::string const& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

  inline std::string_view strip_comment_and_space(std::string_view s) {
    if (auto hash = s.find('#'); hash != std::string_view::npos) {
      s = s.substr(0, hash);
    }
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      return {};
    }
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  }

  struct RawRule {
    std::string lhs;
    std::string rhs;
    std::size_t line;
  };

  inline std::vector<RawRule> split_rule_lines(std::istream& in) {
    std::vector<RawRule> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      auto body = strip_comment_and_space(line);
      if (body.empty()) {
        continue;
      }
      auto const arrow = body.find("->");
      if (arrow == std::string_view::npos) {
        throw RuleFileError("expected `lhs -> rhs`", number);
      }
      out.push_back({std::string(strip_comment_and_space(body.substr(0, arrow))),
                     std::string(strip_comment_and_space(body.substr(arrow + 2))),
                     number});
      if (body.find("->", arrow + 2) != std::string_view::npos) {
        throw RuleFileError("more than one `->`", number);
      }
    }
    return out;
  }

  inline std::size_t largest_letter(std::string_view text) {
    bool const integer_form = std::any_of(
        text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
    std::size_t best = 0;
    if (!integer_form) {
      for (char c : text) {
        if (c >= 'a' && c <= 'z') {
          best = std::max<std::size_t>(best, static_cast<std::size_t>(c - 'a' + 1));
        }
      }
      return best;
    }
    std::istringstream is{std::string(text)};
    std::size_t v = 0;
    while (is >> v) {
      best = std::max(best, v);
    }
    return best;
  }

}  // namespace detail

inline std::vector<Rule> read_rules(std::istream& in, Alphabet alphabet) {
  std::vector<Rule> out;
  for (auto const& raw : detail::split_rule_lines(in)) {
    try {
      auto r = Rule::oriented(parse_word(raw.lhs, alphabet),
                              parse_word(raw.rhs, alphabet));
      if (r) {
        out.push_back(std::move(*r));
      }
    } catch (ParseError const& e) {
      throw RuleFileError(e.what(), raw.line);
    }
  }
  return out;
}

// Smallest alphabet size that covers every letter in the rule text.
inline std::size_t infer_alphabet_size(std::istream& in) {
  std::size_t best = 1;
  for (auto const& raw : detail::split_rule_lines(in)) {
    best = std::max({best, detail::largest_letter(raw.lhs),
                     detail::largest_letter(raw.rhs)});
  }
  return best;
}

inline std::string format_rules(std::vector<Rule> const& rules) {
  std::string out;
  for (auto const& r : rules) {
    out += format_rule(r);
    out += '\n';
  }
  return out;
}

}  // namespace chinese
