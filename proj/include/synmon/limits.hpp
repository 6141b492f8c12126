#pragma once

#include <cstddef>

namespace synmon {

  // Capacity guards shared by the constructions. Exceeding any of them raises
  // CapacityError with the offending size.
  struct Limits {
    // Generated elements of the powerset lifting (join-semilattice automata).
    std::size_t max_jsl_states = std::size_t(1) << 20;
    // Dimension of linear automata over F_p.
    std::size_t max_dim = 4096;
    // Elements of a transition / syntactic algebra.
    std::size_t max_elements = 4096;
    // Context pairs (x, y) examined by the bounded-context oracle.
    std::size_t max_contexts = std::size_t(1) << 20;
    // Word length accepted by the textual free-element parser.
    std::size_t max_word_length = 64;
  };

}  // namespace synmon
