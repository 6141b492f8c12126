#pragma once

// Regular languages over {a, b} used by the `corpus` command and the
// acceptance suite. Minimal DFAs have at most 8 states.

#include <array>
#include <string_view>

namespace synmon {

  struct CorpusEntry {
    std::string_view name;
    std::string_view regex;
  };

  inline constexpr std::string_view corpus_alphabet = "ab";

  inline constexpr std::array<CorpusEntry, 30> corpus{{
      {"empty", "∅"},
      {"epsilon", "ε"},
      {"all", "(a|b)*"},
      {"a", "a"},
      {"(ab)*", "(ab)*"},
      {"even-a", "(b*ab*a)*b*"},
      {"contains-a", "(a|b)*a(a|b)*"},
      {"a*", "a*"},
      {"starts-a", "a(a|b)*"},
      {"ends-a", "(a|b)*a"},
      {"factor-ab", "(a|b)*ab(a|b)*"},
      {"factor-aa", "(a|b)*aa(a|b)*"},
      {"(ba)*", "(ba)*"},
      {"second-last-a", "(a|b)*a(a|b)"},
      {"third-last-a", "(a|b)*a(a|b)(a|b)"},
      {"a*b*", "a*b*"},
      {"(aa)*", "(aa)*"},
      {"(aaa)*", "(aaa)*"},
      {"(a|ba)*", "(a|ba)*"},
      {"factor-bb", "(a|b)*bb(a|b)*"},
      {"one-a", "b*ab*"},
      {"(ab|ba)*", "(ab|ba)*"},
      {"length-2", "(a|b)(a|b)"},
      {"even-length", "((a|b)(a|b))*"},
      {"two-b", "a*ba*ba*"},
      {"(ab)*a", "(ab)*a"},
      {"(aab)*", "(aab)*"},
      {"ab|ba", "ab|ba"},
      {"ends-abb", "(a|b)*abb"},
      {"no-aa", "(b|ab)*(a|ε)"},
  }};

}  // namespace synmon
