#pragma once

#include <stdexcept>
#include <string>

namespace primeul {

/// Malformed input: arrangement files, family strings, polynomial text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain, e.g. a non-simplicial
/// arrangement passed to a descent-based computation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace primeul
