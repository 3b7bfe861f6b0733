#include "jshapes/error.hpp"

namespace jshapes {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kTooFewPoints: return "TOO_FEW_POINTS";
    case ErrorCode::kNotSimple: return "NOT_SIMPLE";
    case ErrorCode::kOffsetCollapse: return "OFFSET_COLLAPSE";
    case ErrorCode::kEmptySet: return "EMPTY_SET";
    case ErrorCode::kMapDiverged: return "MAP_DIVERGED";
    case ErrorCode::kBadBasepoint: return "BAD_BASEPOINT";
    case ErrorCode::kOutOfDomain: return "OUT_OF_DOMAIN";
    case ErrorCode::kAliasing: return "ALIASING";
    case ErrorCode::kNoEpsilon: return "NO_EPSILON";
    case ErrorCode::kDuplicateRoots: return "DUPLICATE_ROOTS";
    case ErrorCode::kSamplingFailure: return "SAMPLING_FAILURE";
    case ErrorCode::kNoDegreeFound: return "NO_DEGREE_FOUND";
    case ErrorCode::kIndeterminate: return "INDETERMINATE";
    case ErrorCode::kGeometryRejected: return "GEOMETRY_REJECTED";
    case ErrorCode::kNotMutuallyExterior: return "NOT_MUTUALLY_EXTERIOR";
    case ErrorCode::kMonochromeField: return "MONOCHROME_FIELD";
    case ErrorCode::kBboxTooSmall: return "BBOX_TOO_SMALL";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kIoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kTooFewPoints:
    case ErrorCode::kInvalidArgument:
      return 2;
    case ErrorCode::kNoDegreeFound:
      return 4;
    case ErrorCode::kIoError:
      return 6;
    default:
      return 3;
  }
}

}  // namespace jshapes
