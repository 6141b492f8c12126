#pragma once

// Boolean-algebra / set duality for a single language: the local variety of
// languages generated by L^rev, its atoms, and the monoid they carry.
//
// A word w lies in the atom whose membership profile over all two-sided
// derivatives of L^rev matches w. Atom transitions read letters by
// prefixing (z -> z' with a.z contained in z'), so the atom reached from the
// atom of the empty word on input u is the atom of reverse(u). Under
// e(u) = that atom, the atoms form a monoid isomorphic to Syn L with the
// identity correspondence on letters; multiplying member words instead
// gives Syn(L^rev), the opposite of Syn L under word reversal.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "synmon/langcore.hpp"
#include "synmon/limits.hpp"
#include "synmon/synalg.hpp"

namespace synmon {

  struct DerivativeSystem {
    Dfa base;  // minimal DFA of L^rev
    // (q, G) denotes {w : delta(q, w) in G}; one pair per distinct language.
    std::vector<std::pair<State, std::vector<bool>>> pairs;
    std::vector<Dfa>                                 languages;  // minimal DFA per pair
  };

  DerivativeSystem build_derivative_system(Dfa const& l0);

  struct Atom {
    // Transition maps of the base automaton whose words form the atom.
    std::vector<Transformation> members;
    // Shortest, then length-lexicographically least, word of the atom.
    Word                      member_word;
    std::vector<std::uint8_t> profile;
    bool                      in_reverse_language = false;
  };

  struct AtomSystem {
    Alphabet          alphabet;
    std::vector<Atom> atoms;
    Index             initial = 0;  // the atom of the empty word
    Table             transitions;  // [atom][letter]
    // Base transition map -> atom.
    std::map<Transformation, Index> atom_of_map;
    Dfa                             base;
  };

  // Throws std::logic_error if an atom transition is ambiguous, and
  // CapacityError if the base transition monoid exceeds limits.max_elements.
  AtomSystem compute_atoms(DerivativeSystem const& d, Limits const& limits = {});

  // The atom containing the word w.
  Index atom_of_word(AtomSystem const& a, std::string_view w);
  // Atom language as a DFA over the base transition monoid.
  Dfa atom_language(AtomSystem const& a, Index z);

  // Monoid on the atoms, e(u) = atom of reverse(u), e-representatives are the
  // reversed member words. f(z) = [z inside L^rev] = L(e-representative).
  SynAlgebra dual_monoid(AtomSystem const& a);
  // Monoid on the atoms with e(u) = atom of u (the syntactic monoid of L^rev).
  SynAlgebra member_monoid(AtomSystem const& a);

  struct DualityReport {
    std::size_t derivatives = 0;
    std::size_t atoms       = 0;
    std::size_t syn_size    = 0;
    // dual_monoid ~ Syn L via e(u) -> [u].
    bool isomorphic = false;
    // member_monoid ~ opposite(Syn L) via atom(u) -> [reverse(u)].
    bool opposite_isomorphic = false;
    // Products agree when computed from second-shortest member words.
    bool well_defined = false;
    // The dual monoid recognizes L through e and f.
    bool recognizes = false;
    // z is contained in a^{-1} z' for every atom transition, as languages.
    bool transitions_verified = false;
    std::vector<std::string> witnesses;

    bool passed() const noexcept {
      return atoms == syn_size && isomorphic && opposite_isomorphic && well_defined
             && recognizes && transitions_verified;
    }
  };

  DualityReport verify_syntactic_duality(Dfa const& l0, Limits const& limits = {});

  struct MinimalDualityReport {
    std::size_t atoms  = 0;
    std::size_t states = 0;
    // The automaton on the left-derivative atoms accepts L.
    bool                     language_equal = false;
    std::vector<std::string> witnesses;

    bool passed() const noexcept {
      return atoms == states && language_equal;
    }
  };

  // Atoms of the boolean algebra generated by the left derivatives of L^rev.
  MinimalDualityReport verify_minimal_duality(Dfa const& l0, Limits const& limits = {});

  std::string to_json(DualityReport const& r);
  std::string to_json(MinimalDualityReport const& r);
  // The dual automaton on atoms: prefix transitions, atoms inside L^rev doubled.
  std::string to_dot(AtomSystem const& a);

}  // namespace synmon
