#pragma once

// Transition and syntactic D-monoids.
//
// Multiplication is diagrammatic: mult(u, v) acts as "first u, then v", i.e.
// delta_{uv} = delta_v o delta_u, so that w -> [w] is a monoid morphism from
// words. For vect the algebra is stored by a basis of matrices M_w (row-vector
// convention, M_{uv} = M_u M_v) and structure constants.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "synmon/dautomata.hpp"
#include "synmon/fp_linear.hpp"
#include "synmon/freemon.hpp"
#include "synmon/langcore.hpp"
#include "synmon/limits.hpp"

namespace synmon {

  using Index = std::size_t;
  using Table = std::vector<std::vector<Index>>;

  struct TransitionElem {
    // Endomap of the carrier of Min(L) (empty for algebras given by tables).
    Transformation map;
    // vect: the basis matrix.
    fp::Matrix matrix;
    // Shortest, then length-lexicographically least, witness.
    FreeElem representative = FreeElem::unit(VarietyTag{});
  };

  struct LinearStructure {
    std::uint32_t prime     = 2;
    std::size_t   dimension = 0;
    // product[i][j] = coordinates of b_i * b_j.
    std::vector<std::vector<fp::Vector>> product;
    fp::Vector                           unit;
    std::vector<fp::Vector>              generators;  // one per letter
    fp::Vector                           output;      // f_L on the basis
  };

  struct SynAlgebra {
    VarietyTag                  tag;
    Alphabet                    alphabet;
    std::vector<TransitionElem> elements;  // vect: the basis

    // finite varieties
    Index              unit = 0;
    Table              mult;
    std::vector<Index> gen;  // letter -> element
    std::vector<OutputValue> output;
    std::vector<std::vector<bool>> leq;         // pos
    Index                          zero = 0;    // pset: absorbing; jsl: additive
    std::vector<Index>             involution;  // inv
    Table                          add;         // jsl

    LinearStructure linear;  // vect

    // Independent evaluation of e_L (from endomaps, oracle profiles, ...).
    // When empty, e_L is computed by folding the tables over the element.
    std::function<Index(FreeElem const&)>      classify;
    std::function<fp::Vector(FreeElem const&)> coordinates;

    bool is_linear() const noexcept {
      return tag.variety == Variety::vect;
    }
    // Number of elements, or the dimension for vect.
    std::size_t size() const noexcept {
      return is_linear() ? linear.dimension : elements.size();
    }
  };

  // Closure of the extended transitions of a D-automaton under composition
  // and the variety operations. Throws CapacityError past limits.max_elements.
  SynAlgebra transition_monoid(DAutomaton const& a, Limits const& limits = {});
  // transition_monoid(minimal_dautomaton(tag, l0)) with f_L read off the
  // language of l0.
  SynAlgebra syntactic_algebra(VarietyTag tag, Dfa const& l0, Limits const& limits = {});

  // e_L(u): through classify when present, otherwise through the tables.
  Index      class_of(SynAlgebra const& s, FreeElem const& u);
  fp::Vector coordinates_of(SynAlgebra const& s, FreeElem const& u);
  // e_L(u) folded through the tables only.
  Index      table_class_of(SynAlgebra const& s, FreeElem const& u);
  fp::Vector table_coordinates_of(SynAlgebra const& s, FreeElem const& u);
  // Product of two coordinate vectors of a vect algebra.
  fp::Vector linear_mult(SynAlgebra const& s, fp::Vector const& x, fp::Vector const& y);
  // f_L(e_L(u)).
  OutputValue algebra_output(SynAlgebra const& s, FreeElem const& u);

  // An element z with z*m = m*z = z for every m.
  std::optional<Index> multiplicative_zero(SynAlgebra const& s);

  struct RecognitionReport {
    bool                     passed  = true;
    std::size_t              checked = 0;
    std::vector<std::string> counterexamples;
  };

  // (i) the tables agree with e_L on representatives (products, generators
  // and the variety operations); (ii) f_L(e_L(u)) = L(u) on every
  // representative and on `samples` random elements drawn with `seed`.
  RecognitionReport verify_recognition(SynAlgebra const& s,
                                       Dfa const&        l0,
                                       std::uint64_t     seed    = 0,
                                       std::size_t       samples = 1000);

  // Random element of X*: word length 0..max_length, plus variety extras.
  FreeElem random_free_elem(VarietyTag       tag,
                            Alphabet const&  alphabet,
                            std::mt19937_64& rng,
                            std::size_t      max_length = 12);

  // Axioms of the variety and of monoids, checked on the full tables, plus
  // generation of every element from the generators.
  std::vector<std::string> algebra_law_violations(SynAlgebra const& s);

  // True iff e1(u) -> e2(u) is a well-defined bijection. Throws TagMismatch
  // or AlphabetMismatch.
  bool iso_as_quotients(SynAlgebra const& s1, SynAlgebra const& s2);

  // The opposite algebra, presented as an X-generated quotient through word
  // reversal: its e(u) is e_s(reverse(u)).
  SynAlgebra opposite(SynAlgebra const& s);

  // Display name of an element: its representative.
  std::string element_name(SynAlgebra const& s, Index i);

  std::string to_table(SynAlgebra const& s);
  std::string to_json(SynAlgebra const& s);
  std::string to_csv(SynAlgebra const& s);
  // Right Cayley graph over the generators.
  std::string to_dot(SynAlgebra const& s);

}  // namespace synmon
