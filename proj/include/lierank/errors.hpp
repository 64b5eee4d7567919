#pragma once

#include <stdexcept>
#include <string>

namespace lierank {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for a SimpleTypeId outside the admissible (series, rank) pairs.
class InadmissibleType : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Input root set fails negation or reflection closure.
class NotClosedSubsystem : public Error {
 public:
  using Error::Error;
};

/// An exact operation whose result leaves the half-integer lattice.
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

class NotEqualRank : public Error {
 public:
  using Error::Error;
};

/// The classifier could not place (G, H) in any case of the analysis.
class Unclassified : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lierank
