#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jshapes {

enum class ErrorCode {
  kParseError,
  kTooFewPoints,
  kNotSimple,
  kOffsetCollapse,
  kEmptySet,
  kMapDiverged,
  kBadBasepoint,
  kOutOfDomain,
  kAliasing,
  kNoEpsilon,
  kDuplicateRoots,
  kSamplingFailure,
  kNoDegreeFound,
  kIndeterminate,
  kGeometryRejected,
  kNotMutuallyExterior,
  kMonochromeField,
  kBboxTooSmall,
  kInvalidArgument,
  kIoError,
};

std::string_view to_string(ErrorCode code);

// CLI exit code for an error: 2 parse, 3 geometry, 4 certification, 6 io.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jshapes
