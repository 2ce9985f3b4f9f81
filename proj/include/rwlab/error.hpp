#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rwlab {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed presentation text.  Carries the 1-based line number.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

}  // namespace rwlab
