#pragma once

// The syntactic congruence decided directly from the language, by
// quantifying over bounded word contexts. Independent of the automaton
// constructions in dautomata / synalg, which it is used to cross-check.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "synmon/freemon.hpp"
#include "synmon/langcore.hpp"
#include "synmon/limits.hpp"
#include "synmon/synalg.hpp"

namespace synmon {

  struct ContextWitness {
    Word        x;
    Word        y;
    OutputValue left;   // L(x u y)
    OutputValue right;  // L(x v y)
  };

  // u ~ v iff L(x u y) = L(x v y) for all words x, y.
  //
  // Contexts x, y range over words of length < n, n the number of states of
  // the minimal DFA: x of length < n reaches every state and y of length < n
  // separates any two states. For jsl the y side is decided exactly by
  // comparing the languages of the unions of states reached. Throws
  // CapacityError when n > 20 for jsl or the number of contexts exceeds
  // limits.max_contexts.
  class ContextOracle {
   public:
    ContextOracle(VarietyTag tag, Dfa const& l0, Limits const& limits = {});

    VarietyTag tag() const noexcept {
      return _tag;
    }
    Dfa const& language() const noexcept {
      return _dfa;
    }
    // Longest context word considered, on either side.
    std::size_t bound() const noexcept {
      return _bound;
    }
    std::vector<Word> const& contexts() const noexcept {
      return _contexts;
    }

    // Values of L(x u y) over all contexts, x outer. For jsl each entry is an
    // identifier of the language y -> L(x u y), one per x.
    std::vector<std::uint32_t> values(FreeElem const& u) const;
    // values(u) packed into bytes (bits for the two-valued varieties); equal
    // profiles iff congruent.
    std::string profile(FreeElem const& u) const;

    bool congruent(FreeElem const& u, FreeElem const& v) const;
    // pos: L(x u y) <= L(x v y) for all contexts. Other varieties: congruent.
    bool leq(FreeElem const& u, FreeElem const& v) const;
    // First context (x, then y, length-lexicographically) on which u and v
    // differ (or, for pos with `ordered`, on which u <= v fails).
    std::optional<ContextWitness> witness(FreeElem const& u,
                                          FreeElem const& v,
                                          bool            ordered = false) const;

   private:
    State              after(std::size_t x, Word const& w) const;
    std::uint64_t      union_mask(std::size_t x, FreeElem const& u) const;
    std::uint32_t      union_id(std::uint64_t mask) const;
    Dfa                union_dfa(std::uint64_t mask) const;

    VarietyTag        _tag;
    Dfa               _dfa;
    std::size_t       _bound = 0;
    std::vector<Word> _contexts;
    // _reach[x] = state after context x; _accept[q][y] = [q y in F].
    std::vector<State>                      _reach;
    std::vector<std::vector<std::uint8_t>>  _accept;

    mutable std::mutex                           _mutex;
    mutable std::map<std::uint64_t, std::uint32_t> _union_ids;
    mutable std::map<std::string, std::uint32_t>   _languages;
  };

  // Route 1: Syn L as the quotient of X* by the oracle congruence, built by
  // closure over representatives. Classes are identified by oracle profiles.
  SynAlgebra congruence_quotient(VarietyTag tag, Dfa const& l0, Limits const& limits = {});

  // Elements of X* built from words of length <= max_length: words (and ~w,
  // bottom for inv, pset), sets of at most two words for jsl, sums of at
  // most two monomials for vect.
  std::vector<FreeElem> small_elements(VarietyTag tag, Alphabet const& alphabet,
                                       std::size_t max_length = 4);

  struct EquivalenceReport {
    std::size_t              elements   = 0;
    std::size_t              mismatches = 0;
    std::vector<std::string> witnesses;
  };

  // Class equality in s coincides with oracle congruence on `elements` (and,
  // for pos, the order on s with the oracle preorder).
  EquivalenceReport compare_with_oracle(SynAlgebra const&            s,
                                        ContextOracle const&         oracle,
                                        std::vector<FreeElem> const& elements);

}  // namespace synmon
