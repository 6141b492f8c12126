#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "synmon/errors.hpp"
#include "synmon/freemon.hpp"

using namespace synmon;

namespace {

  Alphabet const ab("ab");

  Word random_word(std::mt19937_64& rng, std::size_t max_len) {
    std::size_t const n = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    Word              w;
    for (std::size_t i = 0; i < n; ++i) {
      w += "ab"[rng() % 2];
    }
    return w;
  }

  FreeElem random_elem(VarietyTag tag, std::mt19937_64& rng) {
    switch (tag.variety) {
      case Variety::set:
      case Variety::pos:
        return FreeElem::word(tag, random_word(rng, 3));
      case Variety::pset:
        return rng() % 5 == 0 ? FreeElem::bottom() : FreeElem::word(tag, random_word(rng, 3));
      case Variety::inv:
        return rng() % 2 ? FreeElem::complemented(random_word(rng, 3))
                         : FreeElem::word(tag, random_word(rng, 3));
      case Variety::jsl: {
        std::vector<Word> ws(rng() % 4);
        for (auto& w : ws) {
          w = random_word(rng, 3);
        }
        return FreeElem::word_set(ws);
      }
      case Variety::vect: {
        std::vector<std::pair<Word, std::int64_t>> ts(rng() % 4);
        for (auto& [w, c] : ts) {
          w = random_word(rng, 3);
          c = static_cast<std::int64_t>(rng() % 7) - 3;
        }
        return FreeElem::polynomial(tag.prime, ts);
      }
    }
    throw std::logic_error("unreachable");
  }

}  // namespace

TEST_CASE("variety names", "[freemon]") {
  CHECK(parse_variety("jsl").variety == Variety::jsl);
  CHECK(parse_variety("vect", 3).prime == 3);
  CHECK_THROWS_AS(parse_variety("vect", 4), std::invalid_argument);
  CHECK_THROWS(parse_variety("SET"));
  CHECK(all_varieties().size() == 6);
  CHECK(make_tag(Variety::set, 2) == make_tag(Variety::set, 3));
  CHECK_FALSE(make_tag(Variety::vect, 2) == make_tag(Variety::vect, 3));
}

TEST_CASE("free monoid laws", "[freemon][property]") {
  std::mt19937_64 rng(1);
  for (VarietyTag tag : all_varieties(3)) {
    INFO(to_string(tag));
    FreeElem const e = FreeElem::unit(tag);
    for (int trial = 0; trial < 200; ++trial) {
      FreeElem const x = random_elem(tag, rng);
      FreeElem const y = random_elem(tag, rng);
      FreeElem const z = random_elem(tag, rng);
      CHECK(free_mul(tag, free_mul(tag, x, y), z) == free_mul(tag, x, free_mul(tag, y, z)));
      CHECK(free_mul(tag, e, x) == x);
      CHECK(free_mul(tag, x, e) == x);
      // reversal is an anti-homomorphism
      CHECK(free_reverse(free_mul(tag, x, y))
            == free_mul(tag, free_reverse(y), free_reverse(x)));
      if (tag.variety == Variety::jsl || tag.variety == Variety::vect) {
        // multiplication distributes over the additive structure
        CHECK(free_mul(tag, x, free_add(y, z))
              == free_add(free_mul(tag, x, y), free_mul(tag, x, z)));
        CHECK(free_mul(tag, free_add(x, y), z)
              == free_add(free_mul(tag, x, z), free_mul(tag, y, z)));
        CHECK(free_add(x, y) == free_add(y, x));
      }
      if (tag.variety == Variety::jsl) {
        CHECK(free_add(x, x) == x);
      }
      if (tag.variety == Variety::inv) {
        CHECK(free_complement(free_complement(x)) == x);
        CHECK(free_mul(tag, free_complement(x), y) == free_complement(free_mul(tag, x, y)));
        CHECK(free_mul(tag, x, free_complement(y)) == free_complement(free_mul(tag, x, y)));
      }
      if (tag.variety == Variety::pset) {
        CHECK(free_mul(tag, FreeElem::bottom(), x).is_bottom());
        CHECK(free_mul(tag, x, FreeElem::bottom()).is_bottom());
      }
    }
  }
}

TEST_CASE("language morphism respects the structure", "[freemon][property]") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    std::string const text = oracle::random_regex(rng, 3);
    INFO(text);
    Regex const r = parse_regex(text, ab);
    Dfa const   m = regex_to_min_dfa(r, ab);

    VarietyTag const jsl = make_tag(Variety::jsl);
    VarietyTag const vect = make_tag(Variety::vect, 3);
    VarietyTag const inv = make_tag(Variety::inv);
    for (int k = 0; k < 20; ++k) {
      FreeElem const x = random_elem(jsl, rng);
      FreeElem const y = random_elem(jsl, rng);
      // L preserves joins
      CHECK(eval_language(jsl, m, free_add(x, y)).value
            == (eval_language(jsl, m, x).value | eval_language(jsl, m, y).value));
      bool any = false;
      for (auto const& [w, _] : x.terms()) {
        any = any || oracle::matches(r, w);
      }
      CHECK(eval_language(jsl, m, x).value == (any ? 1u : 0u));

      FreeElem const p = random_elem(vect, rng);
      FreeElem const q = random_elem(vect, rng);
      // L is additive
      CHECK(eval_language(vect, m, free_add(p, q)).value
            == (eval_language(vect, m, p).value + eval_language(vect, m, q).value) % 3);

      FreeElem const u = random_elem(inv, rng);
      CHECK(eval_language(inv, m, free_complement(u)).value
            == 1 - eval_language(inv, m, u).value);
    }
    CHECK(eval_language(make_tag(Variety::pset), m, FreeElem::bottom()).value == 0);
    CHECK(eval_language(jsl, m, FreeElem::word_set({})).value == 0);
  }
}

TEST_CASE("canonical storage", "[freemon]") {
  VarietyTag const vect = make_tag(Variety::vect, 3);
  CHECK(FreeElem::polynomial(3, {{"ab", 2}, {"ab", 1}}) == FreeElem::polynomial(3, {}));
  CHECK(FreeElem::polynomial(3, {{"a", -1}}) == FreeElem::polynomial(3, {{"a", 2}}));
  CHECK(FreeElem::word_set({"b", "a", "b"}) == FreeElem::word_set({"a", "b"}));
  CHECK(FreeElem::word(vect, "ab").terms().at("ab") == 1);
  CHECK_THROWS_AS(free_mul(vect, FreeElem::word(make_tag(Variety::set), "a"),
                           FreeElem::word(vect, "a")),
                  TagMismatch);
  CHECK_THROWS_AS(free_add(FreeElem::word(make_tag(Variety::set), "a"),
                           FreeElem::word(make_tag(Variety::set), "b")),
                  TagMismatch);
}

TEST_CASE("textual forms round trip", "[freemon][property]") {
  std::mt19937_64 rng(3);
  for (VarietyTag tag : all_varieties(5)) {
    for (int trial = 0; trial < 50; ++trial) {
      FreeElem const x = random_elem(tag, rng);
      INFO(to_string(x));
      CHECK(parse_free_elem(tag, to_string(x), ab) == x);
    }
  }
  VarietyTag const vect = make_tag(Variety::vect, 5);
  CHECK(parse_free_elem(vect, "ab+2*ba", ab)
        == FreeElem::polynomial(5, {{"ab", 1}, {"ba", 2}}));
  CHECK(parse_free_elem(make_tag(Variety::inv), "~ab", ab) == FreeElem::complemented("ab"));
  CHECK(parse_free_elem(make_tag(Variety::pset), "_|_", ab).is_bottom());
  CHECK(parse_free_elem(make_tag(Variety::jsl), "{}", ab) == FreeElem::word_set({}));
  CHECK(parse_free_elem(make_tag(Variety::set), "ε", ab) == FreeElem::unit(make_tag(Variety::set)));
  CHECK_THROWS_AS(parse_free_elem(make_tag(Variety::set), "ac", ab), ParseError);
  CHECK_THROWS_AS(parse_free_elem(make_tag(Variety::jsl), "{a", ab), ParseError);
  CHECK_THROWS_AS(parse_free_elem(make_tag(Variety::set), "aaaa", ab, 3), ParseError);
}
