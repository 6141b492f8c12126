#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "synmon/errors.hpp"
#include "synmon/synalg.hpp"

using namespace synmon;

namespace {

  Alphabet const ab("ab");

  Dfa dfa(std::string const& re) {
    return min_dfa(re, ab);
  }

  SynAlgebra syn(Variety v, std::string const& re, std::uint32_t p = 2) {
    return syntactic_algebra(make_tag(v, p), dfa(re));
  }

  Index cls(SynAlgebra const& s, Word const& w) {
    return class_of(s, FreeElem::word(s.tag, w));
  }

  std::string const even_a = "(b*ab*a)*b*";

}  // namespace

TEST_CASE("trivial languages have trivial monoids", "[synalg]") {
  for (Variety v : {Variety::set, Variety::pos}) {
    CHECK(syn(v, "∅").size() == 1);
    CHECK(syn(v, "(a|b)*").size() == 1);
  }
  CHECK(syn(Variety::vect, "∅").size() == 0);
}

TEST_CASE("(ab)* in set: six elements with a zero", "[synalg]") {
  SynAlgebra const s = syn(Variety::set, "(ab)*");
  REQUIRE(s.size() == 6);
  std::set<Index> classes;
  for (Word w : {"", "a", "b", "ab", "ba", "aa"}) {
    classes.insert(cls(s, w));
  }
  CHECK(classes.size() == 6);
  auto const z = multiplicative_zero(s);
  REQUIRE(z.has_value());
  CHECK(*z == cls(s, "aa"));
  CHECK(cls(s, "bb") == *z);
  CHECK(cls(s, "aba") == cls(s, "a"));
  CHECK(s.unit == cls(s, ""));
  std::set<std::string> reps;
  for (auto const& e : s.elements) {
    reps.insert(to_string(e.representative));
  }
  CHECK(reps == std::set<std::string>{"ε", "a", "b", "aa", "ab", "ba"});
}

TEST_CASE("even-a is the group of order two", "[synalg]") {
  SynAlgebra const s = syn(Variety::set, even_a);
  REQUIRE(s.size() == 2);
  Index const e = cls(s, ""), a = cls(s, "a");
  CHECK(e != a);
  CHECK(s.mult[a][a] == e);
  CHECK(s.mult[e][a] == a);
  CHECK(cls(s, "b") == e);
}

TEST_CASE("pos: contains-an-a orders the unit below a", "[synalg]") {
  SynAlgebra const s = syn(Variety::pos, "(a|b)*a(a|b)*");
  REQUIRE(s.size() == 2);
  Index const e = cls(s, ""), a = cls(s, "a");
  CHECK(s.leq[e][a]);
  CHECK_FALSE(s.leq[a][e]);
}

TEST_CASE("pset: bottom merges with the zero of (ab)*", "[synalg]") {
  SynAlgebra const s = syn(Variety::pset, "(ab)*");
  CHECK(s.size() == 6);
  CHECK(class_of(s, FreeElem::bottom()) == cls(s, "aa"));
  CHECK(s.zero == cls(s, "aa"));
  CHECK(s.output[s.zero].value == 0);
}

TEST_CASE("inv: (ab)* has twelve elements and complements flip the output", "[synalg]") {
  SynAlgebra const s = syn(Variety::inv, "(ab)*");
  CHECK(s.size() == 12);
  for (Index i = 0; i < s.size(); ++i) {
    CHECK(s.involution[i] != i);
    CHECK(s.output[s.involution[i]].value == 1 - s.output[i].value);
  }
}

TEST_CASE("jsl: a* has two elements", "[synalg]") {
  SynAlgebra const s = syn(Variety::jsl, "a*");
  CHECK(s.size() == 2);
  CHECK(class_of(s, FreeElem::word_set({})) == s.zero);
  CHECK(class_of(s, FreeElem::word_set({"b"})) == s.zero);
  CHECK(class_of(s, FreeElem::word_set({"", "b"})) == s.unit);
}

TEST_CASE("vect: even-a over F_2 is spanned by I and swap", "[synalg]") {
  SynAlgebra const s = syn(Variety::vect, even_a);
  REQUIRE(s.size() == 2);
  std::set<fp::Vector> mats;
  for (auto const& e : s.elements) {
    mats.insert(e.matrix.flat());
  }
  CHECK(mats == std::set<fp::Vector>{{1, 0, 0, 1}, {0, 1, 1, 0}});
  // a + a*a is the all-ones matrix, which is not zero
  auto const x = coordinates_of(s, FreeElem::polynomial(2, {{"a", 1}, {"aa", 1}}));
  CHECK_FALSE(fp::is_zero(x));
  CHECK(fp::is_zero(coordinates_of(s, FreeElem::polynomial(2, {{"aa", 1}, {"b", 1}}))));
}

TEST_CASE("sizes agree with the brute-force context oracle", "[synalg][property]") {
  std::mt19937_64 rng(4242);
  int             compared = 0;
  for (int trial = 0; trial < 60 && compared < 25; ++trial) {
    std::string const text = oracle::random_regex(rng, 3);
    Regex const       r    = parse_regex(text, ab);
    Dfa const         m    = regex_to_min_dfa(r, ab);
    if (m.number_of_states() > 6) {
      continue;
    }
    SynAlgebra const set = syntactic_algebra(make_tag(Variety::set), m);
    std::size_t      longest = 0;
    for (auto const& e : set.elements) {
      longest = std::max(longest, e.representative.single_word().size());
    }
    if (longest > 5) {
      continue;
    }
    ++compared;
    INFO(text);
    // classes of words of length <= 5, separated by contexts of length <= 5
    std::set<std::vector<bool>> profiles;
    for (auto const& u : oracle::words("ab", 5)) {
      profiles.insert(oracle::context_profile(r, "ab", u, 5));
    }
    std::size_t const width = profiles.begin()->size();

    CHECK(set.size() == profiles.size());
    CHECK(syntactic_algebra(make_tag(Variety::pos), m).size() == profiles.size());

    auto with_zero = profiles;
    with_zero.insert(std::vector<bool>(width, false));
    CHECK(syntactic_algebra(make_tag(Variety::pset), m).size() == with_zero.size());

    auto signed_profiles = profiles;
    for (auto p : profiles) {
      p.flip();
      signed_profiles.insert(p);
    }
    CHECK(syntactic_algebra(make_tag(Variety::inv), m).size() == signed_profiles.size());

    if (profiles.size() <= 16) {
      CHECK(syntactic_algebra(make_tag(Variety::jsl), m).size() == oracle::union_count(profiles));
    }

    for (std::uint32_t p : {2u, 3u}) {
      std::vector<fp::Vector> vs;
      for (auto const& row : profiles) {
        vs.emplace_back(row.begin(), row.end());
      }
      CHECK(syntactic_algebra(make_tag(Variety::vect, p), m).size()
            == fp::rank(fp::Field(p), vs, width));
    }
  }
  CHECK(compared >= 10);
}

TEST_CASE("every corrupted multiplication entry is detected", "[synalg][mutation]") {
  SynAlgebra const s = syn(Variety::set, "(ab)*");
  Dfa const        m = dfa("(ab)*");
  REQUIRE(verify_recognition(s, m).passed);
  REQUIRE(algebra_law_violations(s).empty());
  for (Index i = 0; i < s.size(); ++i) {
    for (Index j = 0; j < s.size(); ++j) {
      for (Index k = 0; k < s.size(); ++k) {
        if (k == s.mult[i][j]) {
          continue;
        }
        SynAlgebra t = s;
        t.mult[i][j] = k;
        auto const r = verify_recognition(t, m);
        CHECK_FALSE(r.passed);
        CHECK_FALSE(r.counterexamples.empty());
      }
    }
  }
}

TEST_CASE("corrupted structure in other varieties is detected", "[synalg][mutation]") {
  Dfa const m = dfa("(ab)*");
  {
    SynAlgebra s = syntactic_algebra(make_tag(Variety::inv), m);
    std::swap(s.involution[0], s.involution[1]);
    CHECK_FALSE(verify_recognition(s, m).passed);
  }
  {
    SynAlgebra s = syntactic_algebra(make_tag(Variety::jsl), m);
    s.add[1][2]  = s.add[1][2] == 0 ? 1 : 0;
    CHECK_FALSE(verify_recognition(s, m).passed);
  }
  {
    SynAlgebra s = syntactic_algebra(make_tag(Variety::pos), dfa("(a|b)*a(a|b)*"));
    s.leq[1][0]  = s.leq[0][1] = true;
    CHECK_FALSE(algebra_law_violations(s).empty());
  }
  {
    SynAlgebra s = syntactic_algebra(make_tag(Variety::vect, 2), m);
    s.linear.product[1][1][0] ^= 1;
    CHECK_FALSE(verify_recognition(s, m).passed);
  }
  {
    SynAlgebra s = syntactic_algebra(make_tag(Variety::set), m);
    s.output[s.unit].value ^= 1;
    CHECK_FALSE(verify_recognition(s, m).passed);
  }
}

TEST_CASE("isomorphism as generated quotients", "[synalg]") {
  SynAlgebra const x = syn(Variety::set, "(ab)*");
  SynAlgebra const y = syn(Variety::set, even_a);
  CHECK(iso_as_quotients(x, x));
  CHECK_FALSE(iso_as_quotients(x, y));
  // starts-with-a and ends-with-a are anti-isomorphic over the same generators
  SynAlgebra const starts = syn(Variety::set, "a(a|b)*");
  SynAlgebra const ends   = syn(Variety::set, "(a|b)*a");
  CHECK_FALSE(iso_as_quotients(starts, ends));
  CHECK(iso_as_quotients(opposite(starts), ends));
  CHECK(iso_as_quotients(syn(Variety::set, "(ba)*"), x));
  CHECK_THROWS_AS(iso_as_quotients(x, syn(Variety::pos, "(ab)*")), TagMismatch);
}

TEST_CASE("laws and recognition hold on random languages", "[synalg][property]") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    std::string const text = oracle::random_regex(rng, 3);
    INFO(text);
    Dfa const m = dfa(text);
    if (m.number_of_states() > 5) {
      continue;
    }
    for (VarietyTag tag : all_varieties(3)) {
      INFO(to_string(tag));
      SynAlgebra const s = syntactic_algebra(tag, m);
      auto const       v = algebra_law_violations(s);
      CHECK(v.empty());
      CHECK(verify_recognition(s, m, static_cast<std::uint64_t>(trial), 200).passed);
    }
  }
}

TEST_CASE("renderings", "[synalg]") {
  SynAlgebra const s     = syn(Variety::set, "(ab)*");
  std::string const table = to_table(s);
  CHECK(table.find("unit") != std::string::npos);
  CHECK(table.find("zero") != std::string::npos);
  CHECK(to_json(s) == to_json(syn(Variety::set, "(ab)*")));
  CHECK(to_csv(s).find(',') != std::string::npos);
  CHECK(to_dot(s).rfind("digraph", 0) == 0);
}
