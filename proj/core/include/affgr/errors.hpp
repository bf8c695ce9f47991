#pragma once

#include <stdexcept>
#include <string>

namespace affgr {

/// Zero inversion, leading coefficient of zero, mismatched fields.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Generators that do not span a full-rank lattice.
class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index vectors whose entries do not sum to the rank.
class IndexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inputs outside an operation's precondition (e.g. a triple that is not close).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Operation not available for the configured base field.
class UnsupportedModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed JSON or text encodings.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace affgr
