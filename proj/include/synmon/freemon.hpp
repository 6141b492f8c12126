#pragma once

// Elements of the free D-monoid X* = Psi(X0*) for the six supported varieties,
// and the language morphism L : X* -> Y induced by a classical language.
//
//   set, pos : words
//   pset     : words plus an absorbing bottom element
//   inv      : words and complemented words w~
//   jsl      : finite sets of words (union and elementwise concatenation)
//   vect(p)  : polynomials over F_p in non-commuting letters

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synmon/langcore.hpp"

namespace synmon {

  enum class Variety { set, pos, pset, inv, jsl, vect };

  struct VarietyTag {
    Variety       variety = Variety::set;
    std::uint32_t prime   = 2;  // meaningful for vect only

    bool operator==(VarietyTag const& other) const noexcept {
      return variety == other.variety
             && (variety != Variety::vect || prime == other.prime);
    }
  };

  // Throws std::invalid_argument if the variety is vect and p is not prime.
  VarietyTag       make_tag(Variety v, std::uint32_t prime = 2);
  // Accepts set, pos, pset, inv, jsl, vect (case-sensitive).
  VarietyTag       parse_variety(std::string_view name, std::uint32_t prime = 2);
  std::string_view variety_name(Variety v) noexcept;
  std::string      to_string(VarietyTag tag);
  std::vector<VarietyTag> all_varieties(std::uint32_t prime = 2);

  // Words ordered by length, then bytewise; used only for canonical storage.
  struct ShortLex {
    bool operator()(Word const& u, Word const& v) const noexcept {
      return u.size() != v.size() ? u.size() < v.size() : u < v;
    }
  };

  class FreeElem {
   public:
    using Terms = std::map<Word, std::uint32_t, ShortLex>;

    // The image of a plain word: w, {w} or 1*w depending on the variety.
    static FreeElem word(VarietyTag tag, Word w);
    static FreeElem unit(VarietyTag tag);
    // pset only.
    static FreeElem bottom();
    // inv only.
    static FreeElem complemented(Word w);
    // jsl; duplicates are removed and the empty set is allowed.
    static FreeElem word_set(std::vector<Word> words);
    // vect(p); coefficients are reduced mod p and zero terms dropped.
    static FreeElem polynomial(std::uint32_t                                   prime,
                               std::vector<std::pair<Word, std::int64_t>> const& terms);

    VarietyTag tag() const noexcept {
      return _tag;
    }
    bool is_bottom() const noexcept {
      return _bottom;
    }
    bool is_complemented() const noexcept {
      return _complemented;
    }
    // jsl: every coefficient is 1. set/pos/inv/pset (non-bottom): exactly one term.
    Terms const& terms() const noexcept {
      return _terms;
    }
    // The word of a set/pos/inv/pset (non-bottom) element.
    Word const& single_word() const;

    bool operator==(FreeElem const&) const = default;

   private:
    FreeElem() = default;

    VarietyTag _tag;
    Terms      _terms;
    bool       _bottom       = false;
    bool       _complemented = false;
  };

  // The monoid product of X*; throws TagMismatch if u, v or tag disagree.
  FreeElem free_mul(VarietyTag tag, FreeElem const& u, FreeElem const& v);
  // Semilattice join (jsl) or vector sum (vect).
  FreeElem free_add(FreeElem const& u, FreeElem const& v);
  // inv: w <-> w~.
  FreeElem free_complement(FreeElem const& u);
  // Reversal of every word (the D-morphism extending word reversal).
  FreeElem free_reverse(FreeElem const& u);

  // An element of the output object Y: a bit for set/pos/inv/jsl, bottom (0)
  // or 1 for pset, a scalar of F_p for vect.
  struct OutputValue {
    std::uint32_t value = 0;
    auto operator<=>(OutputValue const&) const = default;
  };

  // L(u) for the language L induced by the classical language of l0.
  OutputValue eval_language(VarietyTag tag, Dfa const& l0, FreeElem const& u);

  std::string to_string(OutputValue y, VarietyTag tag);
  // Textual forms: set/pos "ab"; pset "ab" or "_|_"; inv "ab" or "~ab";
  // jsl "{ab,ba}"; vect "ab+2*ba". The empty word is written ε (or nothing).
  FreeElem    parse_free_elem(VarietyTag       tag,
                              std::string_view text,
                              Alphabet const&  alphabet,
                              std::size_t      max_word_length = 64);
  std::string to_string(FreeElem const& u);

}  // namespace synmon
