#pragma once

#include <stdexcept>
#include <string>

namespace pgm {

/// Failure kinds raised by the library. The CLI and the tests dispatch on
/// these rather than on message text.
enum class Errc {
  UnknownSpec,
  OrderOverflow,
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  DegreeTooLarge,
  NotASubgroup,
  ChainTooShort,
  OutOfRange,
  NotInjectiveBlock,
  NotExactCover,
  NotPrime,
  DegreeMismatch,
  NotInSubgroup,
  BadBlockIndex,
  BadShape,
  NotTransitive,
  MissingSecondarySubgroup,
  DegenerateInput,
  EvenDegree,
  BadBlockCoordinates,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace pgm
