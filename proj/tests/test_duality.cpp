#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "synmon/duality.hpp"
#include "synmon/synalg.hpp"

using namespace synmon;

namespace {

  Alphabet const ab("ab");

  Dfa dfa(std::string const& re) {
    return min_dfa(re, ab);
  }

  // Words w grouped by [u w v in L^rev] over contexts u, v of length <= k.
  std::size_t naive_atoms(oracle::Regex const& r, std::size_t n, std::size_t k) {
    auto const                  ctx = oracle::words("ab", k);
    std::set<std::vector<bool>> seen;
    for (auto const& w : oracle::words("ab", n)) {
      std::vector<bool> p;
      for (auto const& u : ctx) {
        for (auto const& v : ctx) {
          p.push_back(oracle::matches(r, reversed(u + w + v)));
        }
      }
      seen.insert(p);
    }
    return seen.size();
  }

  // Words w grouped by [u w in L^rev] over u of length <= k.
  std::size_t naive_left_atoms(oracle::Regex const& r, std::size_t n, std::size_t k) {
    std::set<std::vector<bool>> seen;
    for (auto const& w : oracle::words("ab", n)) {
      std::vector<bool> p;
      for (auto const& u : oracle::words("ab", k)) {
        p.push_back(oracle::matches(r, reversed(u + w)));
      }
      seen.insert(p);
    }
    return seen.size();
  }

}  // namespace

TEST_CASE("derivatives of the reverse of (ab)*", "[duality]") {
  DerivativeSystem const d = build_derivative_system(dfa("(ab)*"));
  CHECK(language_equal(d.base, dfa("(ba)*")));
  // b^-1 (ba)* a^-1 contains the empty word, so it is (ab)* rather than (ab)+
  for (char const* re : {"(ba)*", "a(ba)*", "(ba)*b", "(ab)*", "∅"}) {
    INFO(re);
    Dfa const target = dfa(re);
    CHECK(std::any_of(d.languages.begin(), d.languages.end(),
                      [&](Dfa const& l) { return language_equal(l, target); }));
  }
  // exactly the naive two-sided derivatives, compared on words of length <= 5
  Regex const                 r = parse_regex("(ab)*", ab);
  std::set<std::vector<bool>> naive, found;
  for (auto const& u : oracle::words("ab", 3)) {
    for (auto const& v : oracle::words("ab", 3)) {
      std::vector<bool> p;
      for (auto const& w : oracle::words("ab", 5)) {
        p.push_back(oracle::matches(r, reversed(u + w + v)));
      }
      naive.insert(p);
    }
  }
  for (auto const& l : d.languages) {
    std::vector<bool> p;
    for (auto const& w : oracle::words("ab", 5)) {
      p.push_back(membership(l, w));
    }
    found.insert(p);
  }
  CHECK(naive == found);
  CHECK(d.languages.size() == 5);
  // no duplicates
  std::set<std::string> keys;
  for (auto const& l : d.languages) {
    keys.insert(canonical_key(l));
  }
  CHECK(keys.size() == d.languages.size());

  CHECK(build_derivative_system(dfa("∅")).languages.size() == 1);
  auto const full = build_derivative_system(dfa("(a|b)*"));
  REQUIRE(full.languages.size() == 1);
  CHECK(language_equal(full.languages[0], dfa("(a|b)*")));
}

TEST_CASE("atom counts", "[duality]") {
  CHECK(compute_atoms(build_derivative_system(dfa("(ab)*"))).atoms.size() == 6);
  CHECK(compute_atoms(build_derivative_system(dfa("(a|b)*"))).atoms.size() == 1);
  CHECK(compute_atoms(build_derivative_system(dfa("(b*ab*a)*b*"))).atoms.size() == 2);
  CHECK(compute_atoms(build_derivative_system(dfa("∅"))).atoms.size() == 1);
}

TEST_CASE("dual monoid of even-a is Z2", "[duality]") {
  AtomSystem const a = compute_atoms(build_derivative_system(dfa("(b*ab*a)*b*")));
  SynAlgebra const m = dual_monoid(a);
  REQUIRE(m.size() == 2);
  Index const e = m.unit;
  Index const x = m.gen[0];
  CHECK(x != e);
  CHECK(m.mult[x][x] == e);
  CHECK(m.gen[1] == e);
  CHECK(algebra_law_violations(m).empty());
}

TEST_CASE("atoms are words with equal derivative profiles", "[duality]") {
  AtomSystem const a = compute_atoms(build_derivative_system(dfa("(ab)*")));
  CHECK(atom_of_word(a, "") == a.initial);
  CHECK(atom_of_word(a, "aa") == atom_of_word(a, "bb"));
  CHECK(atom_of_word(a, "aba") == atom_of_word(a, "a"));
  CHECK(atom_of_word(a, "ab") != atom_of_word(a, "ba"));
  // the atom languages partition all words
  for (auto const& w : oracle::words("ab", 5)) {
    int hits = 0;
    for (Index z = 0; z < a.atoms.size(); ++z) {
      hits += membership(atom_language(a, z), w) ? 1 : 0;
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("duality checks on explicit languages", "[duality]") {
  for (char const* re : {"(ab)*", "(a|b)*a", "∅", "(a|b)*", "(b*ab*a)*b*"}) {
    INFO(re);
    Dfa const  m = dfa(re);
    auto const r = verify_syntactic_duality(m);
    CHECK(r.passed());
    CHECK(r.atoms == syntactic_algebra(make_tag(Variety::set), m).size());
    auto const mr = verify_minimal_duality(m);
    CHECK(mr.passed());
    CHECK(mr.states == m.number_of_states());
  }
  CHECK(verify_minimal_duality(dfa("(ab)*")).atoms == 3);
  CHECK(verify_minimal_duality(dfa("(b*ab*a)*b*")).atoms == 2);
  CHECK(verify_minimal_duality(dfa("(a|b)*")).atoms == 1);
}

TEST_CASE("atom counts agree with naive derivative profiles", "[duality][property]") {
  std::mt19937_64 rng(808);
  int             compared = 0;
  for (int trial = 0; trial < 60 && compared < 20; ++trial) {
    std::string const text = oracle::random_regex(rng, 3);
    oracle::Regex const r  = parse_regex(text, ab);
    Dfa const           m  = regex_to_min_dfa(r, ab);
    SynAlgebra const    s  = syntactic_algebra(make_tag(Variety::set), m);
    std::size_t         longest = 0;
    for (auto const& e : s.elements) {
      longest = std::max(longest, e.representative.single_word().size());
    }
    if (m.number_of_states() > 5 || longest > 5) {
      continue;
    }
    ++compared;
    INFO(text);
    auto const atoms = compute_atoms(build_derivative_system(m)).atoms.size();
    CHECK(atoms == naive_atoms(r, 5, 4));
    CHECK(verify_minimal_duality(m).atoms == naive_left_atoms(r, 5, 4));
  }
  CHECK(compared >= 10);
}

TEST_CASE("reports render", "[duality]") {
  Dfa const  m = dfa("(ab)*");
  auto const j = to_json(verify_syntactic_duality(m));
  CHECK(j.find("\"atoms\":6") != std::string::npos);
  CHECK(j.find("\"isomorphic\":true") != std::string::npos);
  CHECK(to_dot(compute_atoms(build_derivative_system(m))).rfind("digraph", 0) == 0);
}
