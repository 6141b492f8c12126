#pragma once

// Regular expressions and canonical deterministic automata over an explicit
// ordered alphabet. Every other part of the library starts from a Dfa.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace synmon {

  using Letter = char;
  // A word over the alphabet; the empty string is the empty word.
  using Word  = std::string;
  using State = std::uint32_t;

  // Ordered list of single-character letters. The order fixes canonical state
  // numbering, length-lexicographic enumeration and table layouts.
  class Alphabet {
   public:
    Alphabet() = default;
    // Throws ParseError on an empty list, duplicates, or reserved characters.
    explicit Alphabet(std::string_view letters);

    std::size_t size() const noexcept {
      return _letters.size();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    std::optional<std::size_t> index_of(Letter a) const noexcept;
    bool                       contains(Letter a) const noexcept {
      return index_of(a).has_value();
    }
    std::string const& letters() const noexcept {
      return _letters;
    }

    bool operator==(Alphabet const&) const = default;

   private:
    std::string _letters;
  };

  // Characters with a syntactic role in regexes or free-element notation.
  bool is_reserved_character(char c) noexcept;

  // All words of length <= max_length in length-lexicographic order.
  std::vector<Word> words_up_to(Alphabet const& alphabet, std::size_t max_length);
  // Length-lexicographic comparison using the alphabet order.
  bool shortlex_less(Alphabet const& alphabet, std::string_view u, std::string_view v);
  Word reversed(std::string_view w);

  struct Regex {
    enum class Kind { empty, epsilon, literal, alternation, concatenation, star };

    Kind               kind   = Kind::empty;
    Letter             letter = 0;
    std::vector<Regex> children;

    static Regex empty() {
      return {};
    }
    static Regex epsilon() {
      return {Kind::epsilon, 0, {}};
    }
    static Regex literal(Letter a) {
      return {Kind::literal, a, {}};
    }
    static Regex alternation(Regex l, Regex r) {
      return {Kind::alternation, 0, {std::move(l), std::move(r)}};
    }
    static Regex concatenation(Regex l, Regex r) {
      return {Kind::concatenation, 0, {std::move(l), std::move(r)}};
    }
    static Regex star(Regex r) {
      return {Kind::star, 0, {std::move(r)}};
    }

    bool operator==(Regex const&) const = default;
  };

  // Grammar: e ::= e|e | ee | e* | (e) | a | ε | ∅, with '#' accepted for ∅ and
  // "()" for ε. Whitespace is ignored. Union and concatenation associate to
  // the left.
  Regex       parse_regex(std::string_view text, Alphabet const& alphabet);
  std::string to_string(Regex const& r);

  // A total deterministic automaton. Transitions are stored per state in
  // alphabet order.
  class Dfa {
   public:
    Dfa() = default;
    // Validates totality and ranges; throws std::invalid_argument otherwise.
    Dfa(Alphabet                         alphabet,
        std::size_t                      states,
        State                            initial,
        std::vector<State> const&        finals,
        std::vector<std::vector<State>> const& transitions);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::size_t number_of_states() const noexcept {
      return _final.size();
    }
    State initial() const noexcept {
      return _initial;
    }
    bool is_final(State q) const {
      return _final[q];
    }
    std::vector<State> finals() const;
    State              next(State q, std::size_t letter) const {
      return _trans[q * _alphabet.size() + letter];
    }
    // nullopt if the word contains a letter outside the alphabet.
    std::optional<State> run(State from, std::string_view word) const;
    // True only for the output of minimize(): canonical BFS numbering and a
    // discrete Moore partition.
    bool is_minimal() const noexcept {
      return _minimal;
    }

    Dfa with_initial(State q) const;
    Dfa with_finals(std::vector<bool> finals) const;

    bool operator==(Dfa const&) const = default;

   private:
    friend Dfa minimize(Dfa const&);

    Alphabet           _alphabet;
    State              _initial = 0;
    std::vector<bool>  _final;
    std::vector<State> _trans;
    bool               _minimal = false;
  };

  // Trims unreachable states, merges equivalent ones by Moore refinement and
  // renumbers breadth-first from the initial state (letters in alphabet
  // order). Two minimal DFAs accept the same language iff they are equal.
  Dfa minimize(Dfa const& d);

  Dfa regex_to_min_dfa(Regex const& r, Alphabet const& alphabet);
  // Convenience: parse then minimize.
  Dfa min_dfa(std::string_view regex, Alphabet const& alphabet);

  bool membership(Dfa const& d, std::string_view w);

  // a^{-1}L
  Dfa left_derivative(Dfa const& d, Letter a);
  // L a^{-1}
  Dfa right_derivative(Dfa const& d, Letter a);
  Dfa reverse_language(Dfa const& d);
  Dfa complement(Dfa const& d);
  // Minimal DFA of the language accepted from state q.
  Dfa state_language(Dfa const& d, State q);
  // Minimal DFA of the union of the languages accepted from the given states.
  Dfa state_set_language(Dfa const& d, std::span<State const> states);

  // Throw AlphabetMismatch when the alphabets differ.
  bool language_equal(Dfa const& d1, Dfa const& d2);
  bool language_included(Dfa const& d1, Dfa const& d2);
  // Shortest (then length-lex least) word in the symmetric difference.
  std::optional<Word> distinguishing_word(Dfa const& d1, Dfa const& d2);

  // Serialization: {"alphabet": [...], "states": N, "initial": q,
  // "finals": [...], "trans": [[...], ...]}.
  std::string dfa_to_json(Dfa const& d);
  Dfa         dfa_from_json(std::string_view text);
  std::string to_dot(Dfa const& d, std::string_view name = "dfa");
  // Compact string identifying the minimized language; equal iff languages equal.
  std::string canonical_key(Dfa const& d);

}  // namespace synmon
