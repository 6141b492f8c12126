#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synmon {

  // Malformed textual input: regexes, free elements, DFA files, flags.
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // A closure or construction grew past a configured limit.
  class CapacityError : public std::runtime_error {
   public:
    CapacityError(std::string const& what, std::size_t size)
        : std::runtime_error(what + " (size " + std::to_string(size) + ")"),
          _size(size) {}

    std::size_t size() const noexcept {
      return _size;
    }

   private:
    std::size_t _size;
  };

  class AlphabetMismatch : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  class TagMismatch : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

}  // namespace synmon
