// Command-line front end. `run` is kept free of process state so that tests
// can drive it with argument vectors and string streams.
//
// Exit codes: 0 success / positive answer, 1 negative answer (not congruent,
// not a GS basis, completion did not converge), 2 two independent routes
// disagreed, 64 usage or input error.

#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chinese/gsbasis.hpp"
#include "chinese/oracle.hpp"
#include "chinese/rewriting.hpp"
#include "chinese/rule_file.hpp"
#include "chinese/staircase.hpp"
#include "chinese/word.hpp"

namespace chinese::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_disagreement = 2;
inline constexpr int exit_usage = 64;

// Instantiated rules for small alphabets, shape matching beyond that.
inline RewriteSystem chinese_system(Alphabet alphabet) {
  if (alphabet.size() <= 32) {
    return chinese_rules(alphabet);
  }
  return RewriteSystem::chinese_by_shape(alphabet);
}

namespace detail {

  class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  inline std::vector<Rule> load_rules(std::string const& path,
                                      Alphabet alphabet) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open rule file " + path);
    }
    return read_rules(in, alphabet);
  }

  inline std::size_t alphabet_for_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open rule file " + path);
    }
    return infer_alphabet_size(in);
  }

  // Enumerates irreducible words of length `len` in increasing order. Only
  // the redexes ending at the newest letter need checking when extending an
  // irreducible prefix.
  template <typename F>
  void for_each_irreducible(RewriteSystem const& sys, std::size_t len, F&& f) {
    auto const n = static_cast<Letter>(sys.alphabet().size());
    std::vector<Letter> buf;
    buf.reserve(len);
    auto ends_in_redex = [&] {
      std::span<Letter const> const w(buf);
      std::size_t const back = std::min(w.size(), sys.max_lhs_length());
      for (std::size_t pos = w.size() - back; pos < w.size(); ++pos) {
        if (sys.is_lhs(w.subspan(pos))) {
          return true;
        }
      }
      return false;
    };
    auto rec = [&](auto&& self) -> void {
      if (buf.size() == len) {
        f(std::span<Letter const>(buf));
        return;
      }
      for (Letter x = 1; x <= n; ++x) {
        buf.push_back(x);
        if (!ends_in_redex()) {
          self(self);
        }
        buf.pop_back();
      }
    };
    rec(rec);
  }

  struct Options {
    std::size_t n = 0;
    std::vector<std::string> words;
    std::string via = "rewriting";
    bool oracle = false;
    std::size_t limit = 10;
    std::size_t len = 0;
    bool count = false;
    bool check = false;
    bool machine = false;
    std::string rules;
    CompletionBounds bounds;
    std::size_t bench_count = 1000;
    std::uint64_t seed = 1;
    std::uint64_t budget = 10'000'000;
  };

  inline int cmd_normalize(Options const& o, std::ostream& out,
                           std::ostream& err) {
    Alphabet const alphabet(o.n);
    Word const w = parse_word(o.words.at(0), alphabet);
    std::optional<Word> by_rewriting;
    std::optional<Word> by_insertion;
    if (o.via == "rewriting" || o.via == "both") {
      by_rewriting = normalize(w, chinese_system(alphabet));
    }
    if (o.via == "insertion" || o.via == "both") {
      by_insertion = staircase_to_word(word_to_staircase(w));
    }
    if (by_rewriting && by_insertion && *by_rewriting != *by_insertion) {
      err << "disagreement: rewriting gives " << format_word(*by_rewriting)
          << ", insertion gives " << format_word(*by_insertion) << '\n';
      return exit_disagreement;
    }
    out << format_word(by_rewriting ? *by_rewriting : *by_insertion) << '\n';
    return exit_ok;
  }

  inline int cmd_staircase(Options const& o, std::ostream& out) {
    Alphabet const alphabet(o.n);
    Staircase const s = word_to_staircase(parse_word(o.words.at(0), alphabet));
    out << format_staircase_table(s) << format_word(staircase_to_word(s))
        << '\n';
    return exit_ok;
  }

  inline int cmd_equal(Options const& o, std::ostream& out) {
    Alphabet const alphabet(o.n);
    Word const u = parse_word(o.words.at(0), alphabet);
    Word const v = parse_word(o.words.at(1), alphabet);
    bool same = false;
    if (o.oracle) {
      OracleLimits limits;
      limits.max_word_length = o.limit;
      same = congruent(u, v, limits);
    } else {
      auto const sys = chinese_system(alphabet);
      same = normalize(u, sys) == normalize(v, sys);
    }
    out << (same ? "true" : "false") << '\n';
    return same ? exit_ok : exit_negative;
  }

  inline int cmd_irr(Options const& o, std::ostream& out) {
    Alphabet const alphabet(o.n);
    auto const sys = chinese_system(alphabet);
    std::uint64_t total = 0;
    for_each_irreducible(sys, o.len, [&](std::span<Letter const> w) {
      ++total;
      if (!o.count) {
        out << format_word(Word(alphabet, w)) << '\n';
      }
    });
    if (o.count) {
      out << total << '\n';
    }
    return exit_ok;
  }

  inline void print_report(VerificationReport const& report,
                           bool machine, std::ostream& out) {
    out << report.nontrivial.size() << " nontrivial / "
        << report.total_ambiguities << " ambiguities\n";
    for (auto const& nt : report.nontrivial) {
      bool const letters = nt.p_normal.alphabet().uses_letter_codec();
      if (machine) {
        char const sep = letters ? ' ' : '\t';
        out << "NONTRIVIAL" << sep << format_word(nt.ambiguity.overlap_word)
            << sep << format_word(nt.p_normal) << sep
            << format_word(nt.q_normal) << '\n';
      } else {
        out << "  " << to_string(nt.ambiguity.kind) << " of "
            << format_rule(nt.ambiguity.left_rule) << " and "
            << format_rule(nt.ambiguity.right_rule) << " at "
            << format_word(nt.ambiguity.overlap_word) << ": "
            << format_word(nt.p_normal) << " != "
            << format_word(nt.q_normal) << '\n';
      }
    }
  }

  inline int cmd_verify(Options const& o, std::ostream& out) {
    Alphabet const alphabet(o.n);
    RewriteSystem sys = o.rules.empty()
                            ? chinese_rules(alphabet)
                            : RewriteSystem(alphabet, load_rules(o.rules, alphabet));
    auto const report = verify_gs(sys);
    print_report(report, o.machine, out);
    return report.is_groebner_shirshov() ? exit_ok : exit_negative;
  }

  inline int cmd_complete(Options const& o, std::ostream& out,
                          std::ostream& err) {
    Alphabet const alphabet(o.n != 0 ? o.n : alphabet_for_file(o.rules));
    auto const initial = load_rules(o.rules, alphabet);
    auto const result = complete(alphabet, initial, o.bounds);
    out << format_rules(result.result.rules());
    err << to_string(result.stop) << " after " << result.iterations
        << " iteration(s): " << result.result.size() << " rules\n";
    return result.converged ? exit_ok : exit_negative;
  }

  inline int cmd_classes(Options const& o, std::ostream& out,
                         std::ostream& err) {
    Alphabet const alphabet(o.n);
    OracleLimits limits;
    limits.max_enumeration = o.budget;
    ClassPartition const partition(alphabet, o.len, limits);
    out << partition.class_count() << '\n';
    if (!o.check) {
      return exit_ok;
    }
    // Each class must hold exactly one irreducible word, and it must be the
    // normal form of every member.
    auto const sys = chinese_system(alphabet);
    std::vector<std::uint64_t> irreducible_per_class(partition.word_count(), 0);
    std::vector<std::optional<Word>> normal_of_class(partition.word_count());
    bool ok = true;
    for (std::uint64_t idx = 0; idx < partition.word_count() && ok; ++idx) {
      Word const w = partition.word_at(idx);
      std::uint64_t const cls = partition.class_of_index(idx);
      if (is_irreducible(w, sys)) {
        ++irreducible_per_class[cls];
      }
      Word nf = normalize(w, sys);
      if (!normal_of_class[cls]) {
        normal_of_class[cls] = std::move(nf);
      } else if (*normal_of_class[cls] != nf) {
        err << "class of " << format_word(w) << " has two normal forms\n";
        ok = false;
      }
    }
    for (std::uint64_t idx = 0; idx < partition.word_count() && ok; ++idx) {
      if (partition.class_of_index(idx) == idx
          && irreducible_per_class[idx] != 1) {
        err << "class of " << format_word(partition.word_at(idx)) << " has "
            << irreducible_per_class[idx] << " irreducible words\n";
        ok = false;
      }
    }
    out << "transversal " << (ok ? "ok" : "FAILED") << '\n';
    return ok ? exit_ok : exit_disagreement;
  }

  inline int cmd_bench(Options const& o, std::ostream& out, std::ostream& err) {
    Alphabet const alphabet(o.n);
    auto const sys = chinese_system(alphabet);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<Letter> letter(1, static_cast<Letter>(o.n));
    std::vector<Word> words;
    words.reserve(o.bench_count);
    for (std::size_t c = 0; c < o.bench_count; ++c) {
      std::vector<Letter> w(o.len);
      for (auto& x : w) {
        x = letter(rng);
      }
      words.emplace_back(alphabet, std::move(w));
    }
    using clock = std::chrono::steady_clock;
    std::vector<Word> via_rewriting;
    std::size_t rewrite_steps = 0;
    auto t0 = clock::now();
    for (auto const& w : words) {
      auto r = normalize_counted(w, sys);
      rewrite_steps += r.steps;
      via_rewriting.push_back(std::move(r.word));
    }
    auto t1 = clock::now();
    std::vector<Word> via_insertion;
    std::size_t insert_steps = 0;
    for (auto const& w : words) {
      std::size_t visited = 0;
      via_insertion.push_back(staircase_to_word(word_to_staircase(w, &visited)));
      insert_steps += visited;
    }
    auto t2 = clock::now();
    if (via_rewriting != via_insertion) {
      err << "disagreement between rewriting and insertion\n";
      return exit_disagreement;
    }
    auto rate = [&](clock::duration d) {
      double const secs = std::chrono::duration<double>(d).count();
      return secs > 0 ? static_cast<double>(words.size()) / secs : 0.0;
    };
    auto mean = [&](std::size_t steps) {
      return words.empty() ? 0.0
                           : static_cast<double>(steps)
                                 / static_cast<double>(words.size());
    };
    out << std::left << std::setw(10) << "method" << std::right
        << std::setw(16) << "words/sec" << std::setw(14) << "mean steps"
        << '\n';
    out << std::fixed << std::setprecision(1);
    out << std::left << std::setw(10) << "rewriting" << std::right
        << std::setw(16) << rate(t1 - t0) << std::setw(14)
        << mean(rewrite_steps) << '\n';
    out << std::left << std::setw(10) << "insertion" << std::right
        << std::setw(16) << rate(t2 - t1) << std::setw(14)
        << mean(insert_steps) << '\n';
    return exit_ok;
  }

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Normal forms and Groebner-Shirshov bases for the Chinese monoid",
               "chinese"};
  app.require_subcommand(1);
  detail::Options o;

  auto add_n = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("-n,--alphabet", o.n, "alphabet size")
                    ->check(CLI::PositiveNumber);
    if (required) {
      opt->required();
    }
  };

  auto* normalize_cmd = app.add_subcommand("normalize", "print the normal form of a word");
  add_n(normalize_cmd);
  normalize_cmd->add_option("word", o.words, "word")->required()->expected(1);
  normalize_cmd->add_option("--via", o.via, "rewriting, insertion or both")
      ->check(CLI::IsMember({"rewriting", "insertion", "both"}));

  auto* staircase_cmd = app.add_subcommand("staircase", "print the staircase of a word");
  add_n(staircase_cmd);
  staircase_cmd->add_option("word", o.words, "word")->required()->expected(1);

  auto* equal_cmd = app.add_subcommand("equal", "decide whether two words are equal in the monoid");
  add_n(equal_cmd);
  equal_cmd->add_option("words", o.words, "two words")->required()->expected(2);
  equal_cmd->add_flag("--oracle", o.oracle, "decide by breadth-first closure");
  equal_cmd->add_option("--limit", o.limit, "oracle word length limit");

  auto* irr_cmd = app.add_subcommand("irr", "list irreducible words of a given length");
  add_n(irr_cmd);
  irr_cmd->add_option("--len", o.len, "word length")->required();
  irr_cmd->add_flag("--count", o.count, "print only the number of words");

  auto* verify_cmd = app.add_subcommand("verify", "check that every composition is trivial");
  add_n(verify_cmd);
  verify_cmd->add_option("--rules", o.rules, "rule file (default: built-in rules)");
  verify_cmd->add_flag("--machine", o.machine, "emit NONTRIVIAL lines");

  auto* complete_cmd = app.add_subcommand("complete", "run bounded completion on a rule file");
  add_n(complete_cmd, false);
  complete_cmd->add_option("--rules", o.rules, "rule file")->required();
  complete_cmd->add_option("--max-rules", o.bounds.max_rules, "rule bound");
  complete_cmd->add_option("--max-len", o.bounds.max_word_len, "lhs length bound");
  complete_cmd->add_option("--max-iters", o.bounds.max_iterations, "pass bound");

  auto* classes_cmd = app.add_subcommand("classes", "count congruence classes by enumeration");
  add_n(classes_cmd);
  classes_cmd->add_option("--len", o.len, "word length")->required();
  classes_cmd->add_flag("--check", o.check, "also check the normal-form transversal");
  classes_cmd->add_option("--budget", o.budget, "maximum number of words to enumerate");

  auto* bench_cmd = app.add_subcommand("bench", "time rewriting against insertion");
  add_n(bench_cmd);
  bench_cmd->add_option("--len", o.len, "word length")->required();
  bench_cmd->add_option("--count", o.bench_count, "number of random words");
  bench_cmd->add_option("--seed", o.seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (normalize_cmd->parsed()) {
      return detail::cmd_normalize(o, out, err);
    }
    if (staircase_cmd->parsed()) {
      return detail::cmd_staircase(o, out);
    }
    if (equal_cmd->parsed()) {
      return detail::cmd_equal(o, out);
    }
    if (irr_cmd->parsed()) {
      return detail::cmd_irr(o, out);
    }
    if (verify_cmd->parsed()) {
      return detail::cmd_verify(o, out);
    }
    if (complete_cmd->parsed()) {
      return detail::cmd_complete(o, out, err);
    }
    if (classes_cmd->parsed()) {
      return detail::cmd_classes(o, out, err);
    }
    if (bench_cmd->parsed()) {
      return detail::cmd_bench(o, out, err);
    }
  } catch (ParseError const& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (RuleFileError const& e) {
    err << "rule file: " << e.what() << '\n';
    return exit_usage;
  } catch (OracleLimitError const& e) {
    err << e.what() << '\n';
    return exit_usage;
  } catch (detail::UsageError const& e) {
    err << e.what() << '\n';
    return exit_usage;
  } catch (std::invalid_argument const& e) {
    err << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace chinese::cli
