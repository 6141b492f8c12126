#include <algorithm>
#include <numeric>
#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "synmon/errors.hpp"
#include "synmon/langcore.hpp"

using namespace synmon;

namespace {

  Alphabet const ab("ab");

  Dfa dfa(std::string const& re) {
    return min_dfa(re, ab);
  }

}  // namespace

TEST_CASE("alphabet rejects reserved and duplicate letters", "[langcore]") {
  CHECK_THROWS_AS(Alphabet(""), ParseError);
  CHECK_THROWS_AS(Alphabet("aa"), ParseError);
  CHECK_THROWS_AS(Alphabet("a*"), ParseError);
  CHECK(Alphabet("xyz").index_of('z') == 2u);
  CHECK_FALSE(Alphabet("xy").contains('a'));
}

TEST_CASE("words are enumerated in shortlex order", "[langcore]") {
  auto const ws = words_up_to(ab, 2);
  CHECK(ws == std::vector<Word>{"", "a", "b", "aa", "ab", "ba", "bb"});
  CHECK(shortlex_less(ab, "b", "aa"));
  CHECK_FALSE(shortlex_less(ab, "ab", "aa"));
  CHECK(reversed("aab") == "baa");
}

TEST_CASE("malformed regexes raise parse errors", "[langcore]") {
  for (char const* bad : {"((", "a)", "|", "a|", "*", "c", "(a", "ab**)"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_regex(bad, ab), ParseError);
  }
  CHECK_NOTHROW(parse_regex("ε|∅", ab));
  CHECK_NOTHROW(parse_regex("a**", ab));
}

TEST_CASE("minimal DFA agrees with naive matching on random regexes", "[langcore][property]") {
  std::mt19937_64 rng(20261015);
  auto const      ws = oracle::words("ab", 7);
  for (int trial = 0; trial < 150; ++trial) {
    std::string const text = oracle::random_regex(rng, 4);
    INFO(text);
    Regex const r = parse_regex(text, ab);
    Dfa const   m = regex_to_min_dfa(r, ab);
    CHECK(m.is_minimal());
    for (auto const& w : ws) {
      REQUIRE(membership(m, w) == oracle::matches(r, w));
    }
    // Myhill-Nerode: with n states every state is reached by a word shorter
    // than n and separated by a suffix shorter than n.
    std::size_t const residuals = oracle::residual_count(r, "ab", 6);
    if (m.number_of_states() <= 7) {
      CHECK(m.number_of_states() == residuals);
    } else {
      CHECK(residuals <= m.number_of_states());
    }
    // Printing and reparsing gives the same language.
    CHECK(language_equal(m, regex_to_min_dfa(parse_regex(to_string(r), ab), ab)));
  }
}

TEST_CASE("derivatives, reversal and complement", "[langcore][property]") {
  std::mt19937_64 rng(99);
  auto const      ws = oracle::words("ab", 6);
  for (int trial = 0; trial < 80; ++trial) {
    std::string const text = oracle::random_regex(rng, 4);
    INFO(text);
    Regex const r    = parse_regex(text, ab);
    Dfa const   m    = regex_to_min_dfa(r, ab);
    Dfa const   la   = left_derivative(m, 'a');
    Dfa const   rb   = right_derivative(m, 'b');
    Dfa const   rev  = reverse_language(m);
    Dfa const   comp = complement(m);
    for (auto const& w : ws) {
      CHECK(membership(la, w) == oracle::matches(r, "a" + w));
      CHECK(membership(rb, w) == oracle::matches(r, w + "b"));
      CHECK(membership(rev, w) == oracle::matches(r, reversed(w)));
      CHECK(membership(comp, w) != oracle::matches(r, w));
    }
  }
}

TEST_CASE("language comparisons and witnesses", "[langcore]") {
  CHECK(language_equal(dfa("(a|b)*"), dfa("(a*b*)*")));
  CHECK(language_included(dfa("(ab)*"), dfa("(a|b)*")));
  CHECK_FALSE(language_included(dfa("(a|b)*"), dfa("(ab)*")));
  auto w = distinguishing_word(dfa("a*"), dfa("(aa)*"));
  REQUIRE(w.has_value());
  CHECK(w == "a");
  CHECK_FALSE(distinguishing_word(dfa("a|b"), dfa("b|a")).has_value());
  CHECK_THROWS_AS(language_equal(dfa("a"), min_dfa("a", Alphabet("abc"))), AlphabetMismatch);
  CHECK(canonical_key(dfa("(ab)*")) == canonical_key(dfa("ε|a(ba)*b")));
  CHECK(canonical_key(dfa("a")) != canonical_key(dfa("b")));
}

TEST_CASE("state languages", "[langcore]") {
  Dfa const m = dfa("(ab)*");
  // residuals of (ab)*: itself, b(ab)*, and the empty language
  std::vector<std::string> found;
  for (State q = 0; q < m.number_of_states(); ++q) {
    found.push_back(canonical_key(state_language(m, q)));
  }
  for (char const* re : {"(ab)*", "b(ab)*", "∅"}) {
    CHECK(std::count(found.begin(), found.end(), canonical_key(dfa(re))) == 1);
  }
  std::vector<State> all(m.number_of_states());
  std::iota(all.begin(), all.end(), 0);
  CHECK(language_equal(state_set_language(m, all), dfa("(ab)*|b(ab)*")));
}

TEST_CASE("DFA JSON round trip", "[langcore]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Dfa const m    = dfa(oracle::random_regex(rng, 3));
    Dfa const back = dfa_from_json(dfa_to_json(m));
    CHECK(language_equal(m, back));
    CHECK(back.number_of_states() == m.number_of_states());
  }
  CHECK_THROWS_AS(dfa_from_json("{"), ParseError);
  CHECK_THROWS_AS(dfa_from_json(R"({"alphabet":["a"],"states":1})"), ParseError);
}

TEST_CASE("explicit DFAs are minimized", "[langcore]") {
  // two copies of the same accepting loop
  Dfa const d(ab, 3, 0, {1, 2}, {{1, 2}, {1, 2}, {1, 2}});
  CHECK_FALSE(d.is_minimal());
  Dfa const m = minimize(d);
  CHECK(m.number_of_states() == 2);
  CHECK(language_equal(m, dfa("(a|b)(a|b)*")));
  CHECK(d.run(0, "ab") == State(2));
  CHECK_THROWS_AS(Dfa(ab, 1, 1, {}, {{0, 0}}), std::invalid_argument);
}
