#pragma once

// Minimal D-automata, obtained from the classical minimal DFA of a language.
//
// A DAutomaton has a finite carrier for every variety except vect, where the
// state space is F_p^d and transitions are d x d matrices acting on row
// vectors (x -> x * M_a), so that the word a_1...a_n acts by M_{a_1}...M_{a_n}.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "synmon/fp_linear.hpp"
#include "synmon/freemon.hpp"
#include "synmon/langcore.hpp"
#include "synmon/limits.hpp"

namespace synmon {

  // Self-map of a finite carrier: image of every element, by index.
  using Transformation = std::vector<State>;

  struct LinearAutomaton {
    std::uint32_t          prime     = 2;
    std::size_t            dimension = 0;
    std::vector<fp::Matrix> transitions;  // one per letter
    fp::Vector             initial;      // row vector
    fp::Vector             output;       // column vector
  };

  struct DAutomaton {
    VarietyTag tag;
    Alphabet   alphabet;

    // Finite carriers (every variety but vect).
    std::size_t                 size = 0;
    std::vector<Transformation> delta;  // one per letter
    State                       initial = 0;
    std::vector<std::uint8_t>   output;  // f(q) in {0,1}; for pset 0 is bottom
    std::vector<std::string>    labels;

    // pos: leq[p][q] iff p <= q.
    std::vector<std::vector<bool>> leq;
    // pset: the basepoint, a non-final sink.
    State bottom = 0;
    // inv: q -> q~.
    Transformation involution;
    // jsl: join table and least element.
    std::vector<std::vector<State>> join;
    State                           zero = 0;

    // vect
    LinearAutomaton linear;

    bool is_linear() const noexcept {
      return tag.variety == Variety::vect;
    }
  };

  // Min(L) in the given variety, where L is the encoding of the language of l0.
  //   set  : l0 itself
  //   pos  : states ordered by inclusion of their languages
  //   pset : the empty-language state is the basepoint (adjoined if absent)
  //   inv  : Q + Q~ with q~ identified with any state of complementary language
  //   jsl  : join-closed subsets of Q modulo equality of union languages
  //   vect : the 0/1 linear lifting, forward- then backward-reduced
  // Throws CapacityError when the jsl closure or the vect dimension exceeds
  // the limits.
  DAutomaton minimal_dautomaton(VarietyTag tag, Dfa const& l0, Limits const& limits = {});

  // The unreduced join-semilattice automaton: all unions of reachable states,
  // with union as join.
  DAutomaton powerset_lifting(Dfa const& l0, Limits const& limits = {});
  // The unreduced linear automaton on F_p^Q.
  DAutomaton linear_lifting(Dfa const& d, std::uint32_t prime, Limits const& limits = {});
  // Forward reduction (span of reachable vectors) then backward reduction
  // (quotient by the unobservable subspace). Bases are built from words in
  // length-lexicographic order.
  DAutomaton reduce_linear(DAutomaton const& a);

  struct ReachSimpleReport {
    bool                     reachable = true;
    bool                     simple    = true;
    std::vector<std::string> violations;
  };

  // Reachable: every carrier element is generated from the initial state by
  // transitions and the variety operations. Simple: distinct carrier elements
  // have distinct behaviours w -> f(delta_w(q)).
  ReachSimpleReport check_reachable_simple(DAutomaton const& a);

  // Checks that transitions and output are morphisms of the variety (monotone,
  // basepoint-preserving, involution-commuting, join-preserving, prime upset).
  std::vector<std::string> structure_violations(DAutomaton const& a);

  // The accepted language L_Q evaluated on an element of X*.
  OutputValue accepts(DAutomaton const& a, FreeElem const& u);

  std::string to_table(DAutomaton const& a);
  std::string to_json(DAutomaton const& a);
  std::string to_dot(DAutomaton const& a);

}  // namespace synmon
