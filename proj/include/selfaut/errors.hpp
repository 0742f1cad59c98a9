#ifndef SELFAUT_ERRORS_HPP_
#define SELFAUT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace selfaut {

  // Base class for every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class NotAssociative : public Error {
   public:
    NotAssociative(std::size_t i, std::size_t j, std::size_t k);

    std::size_t i, j, k;
  };

  class BadIndex : public Error {
   public:
    using Error::Error;
  };

  class DuplicateName : public Error {
   public:
    using Error::Error;
  };

  // Empty names, or names containing whitespace or '#'.
  class InvalidName : public Error {
   public:
    using Error::Error;
  };

  class UnknownSymbol : public Error {
   public:
    using Error::Error;
  };

  class BadParam : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& reason);

    std::size_t line;
  };

  // Raised when two independent routes to the same fact disagree. Always a
  // bug in this library, never a property of the input.
  class InternalDisagreement : public Error {
   public:
    using Error::Error;
  };

}  // namespace selfaut

#endif  // SELFAUT_ERRORS_HPP_
