// Randomized end-to-end checks: every generated language goes through the
// full per-variety suite and both duality checks.

#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "synmon/checks.hpp"
#include "synmon/corpus.hpp"

using namespace synmon;

TEST_CASE("random languages pass every suite", "[property]") {
  Alphabet const  ab("ab");
  std::mt19937_64 rng(0x5eed);
  int             run = 0;
  for (int trial = 0; trial < 80 && run < 30; ++trial) {
    std::string const text = oracle::random_regex(rng, 4);
    Dfa const         m    = min_dfa(text, ab);
    if (m.number_of_states() > 5) {
      continue;
    }
    ++run;
    INFO(text);
    for (VarietyTag tag : all_varieties(trial % 2 ? 2 : 3)) {
      INFO(to_string(tag));
      for (auto const& r : check_variety(tag, m, static_cast<std::uint64_t>(trial))) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
      }
    }
    for (auto const& r : check_duality(m)) {
      INFO(r.name << ": " << r.detail);
      CHECK(r.passed);
    }
  }
  CHECK(run >= 20);
}

TEST_CASE("three-letter alphabets", "[property]") {
  Alphabet const abc("abc");
  for (char const* re : {"(abc)*", "(a|b)*c", "a*b*c*", "(ab|c)*"}) {
    INFO(re);
    Dfa const m = min_dfa(re, abc);
    for (VarietyTag tag : {make_tag(Variety::set), make_tag(Variety::inv),
                           make_tag(Variety::vect, 5)}) {
      CHECK(all_passed(check_variety(tag, m, 1)));
    }
    CHECK(all_passed(check_duality(m)));
  }
}

TEST_CASE("corpus regexes parse and stay small", "[property]") {
  Alphabet const ab(corpus_alphabet);
  for (auto const& e : corpus) {
    INFO(e.name);
    Dfa const m = min_dfa(e.regex, ab);
    CHECK(m.number_of_states() <= 8);
  }
}
