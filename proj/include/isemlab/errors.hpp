#pragma once

#include <stdexcept>
#include <string>

namespace isemlab {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Cayley table failed the associativity check. Witness indices are
/// 0-based; the message shows them 1-based to match the file format.
struct NotAssociativeError : Error {
  int x, y, z;
  NotAssociativeError(int x_, int y_, int z_)
      : Error("not associative: ((" + std::to_string(x_ + 1) + "*" +
              std::to_string(y_ + 1) + ")*" + std::to_string(z_ + 1) +
              ") != (" + std::to_string(x_ + 1) + "*(" +
              std::to_string(y_ + 1) + "*" + std::to_string(z_ + 1) + "))"),
        x(x_),
        y(y_),
        z(z_) {}
};

struct IndexOutOfRangeError : Error {
  using Error::Error;
};

struct NotInverseError : Error {
  NotInverseError() : Error("semigroup is not an inverse semigroup") {}
};

struct NotInverseOrCompletelyRegularError : Error {
  NotInverseOrCompletelyRegularError()
      : Error("inversion is defined only for inverse or completely regular "
              "semigroups") {}
};

struct NotCliffordError : Error {
  NotCliffordError() : Error("semigroup is not a Clifford semigroup") {}
};

struct NotAGroupError : Error {
  NotAGroupError() : Error("semigroup is not a group") {}
};

struct NotUniquely2DivisibleError : Error {
  NotUniquely2DivisibleError()
      : Error("squaring map is not a bijection") {}
};

struct DegreeMismatchError : Error {
  DegreeMismatchError() : Error("partial permutations have different degrees") {}
};

struct DegreeTooLargeError : Error {
  using Error::Error;
};

struct OrderTooLargeError : Error {
  using Error::Error;
};

/// Input text could not be parsed; `line` is 1-based.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace isemlab
