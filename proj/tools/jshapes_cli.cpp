#include <cstdio>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using jshapes::cli::RunConfig;

std::optional<jshapes::Complex> parse_point(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re >> comma >> im) || comma != ',') throw CLI::ValidationError("--basepoint", "expected RE,IM");
  return jshapes::Complex(re, im);
}

struct Flags {
  std::size_t n = 0;
  double epsilon = 0.0;
  double eps_geom = 0.0;
  double delta = 0.0;
  std::string basepoint;
};

void add_common(CLI::App* cmd, RunConfig& config, Flags& flags) {
  cmd->add_option("--n", flags.n, "Fixed degree parameter n (skips the degree search)");
  cmd->add_option("--n-max", config.n_max, "Largest n tried by the search 8, 16, 32, ...")->capture_default_str();
  cmd->add_option("--epsilon", flags.epsilon, "Level of the root curve; chosen automatically when omitted");
  cmd->add_option("--eps-geom", flags.eps_geom,
                  "Annulus half-width around each curve (default delta/4, or 2.5% of the diameter)");
  cmd->add_option("--grid", config.grid, "Render resolution (pixels per side)")->capture_default_str();
  cmd->add_option("--max-iter", config.max_iter, "Iteration cap per pixel")->capture_default_str();
  cmd->add_option("--delta", flags.delta, "Hausdorff tolerance for verification");
  cmd->add_option("--seed", config.seed, "Seed for certificate sampling")->capture_default_str();
  cmd->add_option("--out", config.out, "Output directory")->capture_default_str();
  cmd->add_option("--threads", config.threads, "Render workers, 0 = all cores")->capture_default_str();
  cmd->add_option("--basepoint", flags.basepoint, "Translation point t as RE,IM");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial and rational maps whose Julia sets approximate given curves"};
  app.require_subcommand(1);
  RunConfig config;
  Flags flags;

  struct Spec {
    const char* name;
    const char* help;
    const char* inputs;
  };
  const Spec specs[] = {
      {"build", "Fit a polynomial to a curve and certify it", "Curve file"},
      {"render", "Render the escape-time field of a dumped map", "Map dump (polynomial, rational or annulus)"},
      {"verify", "Check Hausdorff bounds of a field or map against target curves",
       "Field or map dump, then one or more curve files"},
      {"rational", "Fit a rational map to several mutually exterior curves", "Curve files"},
      {"annulus", "Fit a rational map to the region between two nested curves", "Outer curve, inner curve"},
  };
  for (const Spec& s : specs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    cmd->add_option("inputs", config.inputs, s.inputs)->required();
    add_common(cmd, config, flags);
    if (std::string(s.name) == "render") {
      cmd->add_option("--curve", config.curves, "Target curve files used to size the render box");
    }
    cmd->callback([&config, name = std::string(s.name)] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
    for (CLI::App* cmd : app.get_subcommands()) {
      if (cmd->count("--n")) config.n = flags.n;
      if (cmd->count("--epsilon")) config.epsilon = flags.epsilon;
      if (cmd->count("--eps-geom")) config.eps_geom = flags.eps_geom;
      if (cmd->count("--delta")) config.delta = flags.delta;
    }
    config.basepoint = parse_point(flags.basepoint);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : jshapes::cli::kParse;
  }
  return jshapes::cli::run(config);
}
