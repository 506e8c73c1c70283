#include "pgm/errors.hpp"

namespace pgm {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnknownSpec: return "UnknownSpec";
    case Errc::OrderOverflow: return "OrderOverflow";
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::ChainTooShort: return "ChainTooShort";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotInjectiveBlock: return "NotInjectiveBlock";
    case Errc::NotExactCover: return "NotExactCover";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotInSubgroup: return "NotInSubgroup";
    case Errc::BadBlockIndex: return "BadBlockIndex";
    case Errc::BadShape: return "BadShape";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::MissingSecondarySubgroup: return "MissingSecondarySubgroup";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::EvenDegree: return "EvenDegree";
    case Errc::BadBlockCoordinates: return "BadBlockCoordinates";
    case Errc::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace pgm
