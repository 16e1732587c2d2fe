#include "stringgrass/error.hpp"

namespace stringgrass {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateEntry: return "DuplicateEntry";
    case Errc::ZeroStoredValue: return "ZeroStoredValue";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::NotMonomial: return "NotMonomial";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::MissingDegree: return "MissingDegree";
    case Errc::NotOrientableString: return "NotOrientableString";
    case Errc::TooLarge: return "TooLarge";
  }
  return "UnknownError";
}

}  // namespace stringgrass
