#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "synmon/errors.hpp"
#include "synmon/oracle.hpp"

using namespace synmon;

namespace {

  Alphabet const ab("ab");

  Dfa dfa(std::string const& re) {
    return min_dfa(re, ab);
  }

  FreeElem w(VarietyTag tag, Word x) {
    return FreeElem::word(tag, std::move(x));
  }

}  // namespace

TEST_CASE("set: hand-checked congruences of (ab)*", "[oracle]") {
  VarietyTag const    set = make_tag(Variety::set);
  ContextOracle const o(set, dfa("(ab)*"));
  // contexts are the words shorter than the number of states
  CHECK(o.bound() == 2);
  CHECK(o.contexts().size() == 7);
  CHECK(o.congruent(w(set, "aa"), w(set, "bb")));
  CHECK(o.congruent(w(set, "aba"), w(set, "a")));
  CHECK_FALSE(o.congruent(w(set, "ab"), w(set, "")));
  auto const x = o.witness(w(set, "ab"), w(set, ""));
  REQUIRE(x.has_value());
  CHECK(x->x == "a");
  CHECK(x->y == "b");
  CHECK(x->left.value == 0);
  CHECK(x->right.value == 1);
  CHECK_FALSE(o.witness(w(set, "aa"), w(set, "bb")).has_value());
}

TEST_CASE("jsl: {ab} and {ab, aabb} are congruent for (ab)*", "[oracle]") {
  VarietyTag const    jsl = make_tag(Variety::jsl);
  ContextOracle const o(jsl, dfa("(ab)*"));
  CHECK(o.congruent(FreeElem::word_set({"ab"}), FreeElem::word_set({"ab", "aabb"})));
  CHECK_FALSE(o.congruent(FreeElem::word_set({"ab"}), FreeElem::word_set({"ab", "a"})));
  CHECK(o.congruent(FreeElem::word_set({}), FreeElem::word_set({"aa", "bb"})));
}

TEST_CASE("pos: contains-an-a orders the empty word below a", "[oracle]") {
  VarietyTag const    pos = make_tag(Variety::pos);
  ContextOracle const o(pos, dfa("(a|b)*a(a|b)*"));
  CHECK(o.leq(w(pos, ""), w(pos, "a")));
  CHECK_FALSE(o.leq(w(pos, "a"), w(pos, "")));
  auto const x = o.witness(w(pos, "a"), w(pos, ""), true);
  REQUIRE(x.has_value());
  CHECK(x->x.empty());
  CHECK(x->y.empty());
}

TEST_CASE("bound guards", "[oracle]") {
  // more than 20 states
  Dfa const m = dfa("(aaaaaaaaaaaaaaaaaaaaaa)*");
  REQUIRE(m.number_of_states() > 20);
  CHECK_THROWS_AS(ContextOracle(make_tag(Variety::jsl), m), CapacityError);
  // 2^22 contexts give too many pairs
  CHECK_THROWS_AS(ContextOracle(make_tag(Variety::set), m), CapacityError);
  CHECK_NOTHROW(ContextOracle(make_tag(Variety::set), dfa("(aaaaaaa)*")));
}

TEST_CASE("set oracle agrees with naive context enumeration", "[oracle][property]") {
  std::mt19937_64 rng(31);
  VarietyTag const set = make_tag(Variety::set);
  for (int trial = 0; trial < 30; ++trial) {
    std::string const text = oracle::random_regex(rng, 3);
    INFO(text);
    Regex const r = parse_regex(text, ab);
    Dfa const   m = regex_to_min_dfa(r, ab);
    if (m.number_of_states() > 5) {
      continue;
    }
    ContextOracle const o(set, m);
    auto const          ws = oracle::words("ab", 3);
    for (auto const& u : ws) {
      for (auto const& v : ws) {
        bool const naive = oracle::context_profile(r, "ab", u, 5)
                           == oracle::context_profile(r, "ab", v, 5);
        CHECK(o.congruent(w(set, u), w(set, v)) == naive);
      }
    }
  }
}

TEST_CASE("quotient route matches the transition route", "[oracle][property]") {
  for (char const* re : {"(ab)*", "(b*ab*a)*b*", "a*", "(a|b)*a(a|b)*", "∅", "(a|b)*"}) {
    INFO(re);
    Dfa const m = dfa(re);
    for (VarietyTag tag : all_varieties(3)) {
      INFO(to_string(tag));
      SynAlgebra const s = syntactic_algebra(tag, m);
      SynAlgebra const q = congruence_quotient(tag, m);
      CHECK(s.size() == q.size());
      CHECK(iso_as_quotients(s, q));
      ContextOracle const o(tag, m);
      auto const          r = compare_with_oracle(s, o, small_elements(tag, ab, 3));
      CHECK(r.mismatches == 0);
      CHECK(r.elements > 0);
    }
  }
}

TEST_CASE("small elements cover the requested shapes", "[oracle]") {
  CHECK(small_elements(make_tag(Variety::set), ab, 2).size() == 7);
  auto const pset = small_elements(make_tag(Variety::pset), ab, 2);
  CHECK(std::count_if(pset.begin(), pset.end(), [](FreeElem const& e) { return e.is_bottom(); })
        == 1);
  CHECK(small_elements(make_tag(Variety::inv), ab, 2).size() == 14);
}
