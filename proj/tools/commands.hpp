#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jshapes/io.hpp"

namespace jshapes::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParse = 2;
inline constexpr int kGeometry = 3;
inline constexpr int kCertificationFail = 4;
inline constexpr int kVerificationFail = 5;
inline constexpr int kIo = 6;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::size_t> n;    // fixed degree, skips the search
  std::size_t n_max = 512;
  std::optional<double> epsilon;   // root-curve level override
  std::optional<double> eps_geom;  // annulus half-width
  std::size_t grid = 512;
  std::size_t max_iter = 200;
  std::optional<double> delta;
  std::uint64_t seed = 0;
  std::string out = ".";
  unsigned threads = 0;
  std::optional<Complex> basepoint;
  std::vector<std::string> curves;  // target curves for render / verify
};

Json to_json(const RunConfig& config);

// Each command writes its artifacts into config.out and returns an exit code.
// Library errors propagate as jshapes::Error.
int cmd_build(const RunConfig& config);
int cmd_render(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_rational(const RunConfig& config);
int cmd_annulus(const RunConfig& config);

// Dispatches on config.command and maps errors to exit codes, printing a
// one-line message to stderr.
int run(const RunConfig& config);

}  // namespace jshapes::cli
