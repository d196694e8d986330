// Exception types thrown by the invmon library.

#ifndef INVMON_ERRORS_HPP_
#define INVMON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace invmon {

  //! Base class of every exception thrown by invmon.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed text, JSON, CSV, or an ill-formed letter name.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  //! idempotent_word was given an empty tuple.
  class EmptyList : public Error {
   public:
    using Error::Error;
  };

  //! A bounded search or closure outgrew its guard.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  //! A word mentions a letter outside the alphabet it is used against.
  class UnknownLetter : public Error {
   public:
    using Error::Error;
  };

  //! A word or subset mentions a letter that is not a vertex of the graph.
  class UnknownVertex : public UnknownLetter {
   public:
    using UnknownLetter::UnknownLetter;
  };

  //! The stable letter of a construction already occurs in the alphabet.
  class StableLetterClash : public Error {
   public:
    using Error::Error;
  };

  //! A presentation does not have the shape produced by build_presentation.
  class NotConstructionShape : public Error {
   public:
    using Error::Error;
  };

  //! Some relation of a presentation is not of the form r = 1.
  class NotSpecialPresentation : public Error {
   public:
    using Error::Error;
  };

  //! A group word-problem oracle was required but not supplied.
  class OracleMissing : public Error {
   public:
    using Error::Error;
  };

  //! An argument violates a documented precondition.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

}  // namespace invmon

#endif  // INVMON_ERRORS_HPP_
