#pragma once

// Subcommands of the `deplen` tool. Each writes its files into
// RunConfig::output_dir and returns the written paths.
//
// Pooled corpus numbers (MDD, ADL, mixed p(d), mixed fits) are never written
// without a per-length companion file next to them.

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "deplen/mixture.hpp"
#include "deplen/output.hpp"
#include "deplen/treebank_io.hpp"

namespace deplen::cli {

struct RunConfig {
  std::string input_path;
  int n_min = 3;
  io::PunctMode punct = io::PunctMode::keep;
  std::uint64_t seed = 1;
  std::int64_t samples = 100;  // null arrangements per sentence
  std::string output_dir = ".";
  output::Format format = output::Format::csv;
  int workers = 1;                     // not echoed: never changes output
  int min_sentences = 3;               // per-n rows in per_length.csv
  std::int64_t min_dependencies = 30;  // smallest sample cmd_fit accepts
};

// Throws ValidationError.
void validate(const RunConfig& cfg);

struct FitScope {
  bool mixed = true;
  int n = 0;  // when !mixed
};

// "mixed" or "per-n=N". Throws ValidationError.
FitScope parse_scope(const std::string& text);

struct MixConfig {
  mixture::MixtureSpec spec;
  int fig2_first = 2;
  int fig2_last = 100;
  nlohmann::ordered_json echo;  // effective settings, defaults filled in
};

// Flat `key = value` document; '#' starts a comment. Keys:
//   kind                 uniform | truncated_zeta | point_mass | empirical
//   n_min, n_max         support (n_min defaults to 2)
//   n                    point_mass location
//   weights              empirical weights "n:w, n:w, ..."
//   conditional_family   null | geometric
//   geometric_linkage    null_mean | fixed | log_rate
//   geometric_q, geometric_rate_first, geometric_rate_last
//   fig2_n_max           last n_max of fig2.csv (default 100)
// Throws ValidationError naming every offending key.
MixConfig parse_mix_config(std::istream& in);

std::vector<std::string> cmd_stats(const RunConfig& cfg);
std::vector<std::string> cmd_null(const RunConfig& cfg);
std::vector<std::string> cmd_mix(const std::string& config_path, const std::string& output_dir,
                                 output::Format format);
std::vector<std::string> cmd_fit(const RunConfig& cfg, const FitScope& scope);
std::vector<std::string> cmd_report(const RunConfig& cfg);

struct SynthConfig {
  std::int64_t sentences = 1000;
  mixture::LengthKind lengths = mixture::LengthKind::uniform;
  int n_min = 2;
  int n_max = 30;
  std::uint64_t seed = 1;
  std::string output_path;
};

// CoNLL-U corpus of uniform random labeled trees in uniform random
// arrangements with a uniformly chosen root; sentence i uses substream i.
std::string cmd_synth(const SynthConfig& cfg);

// 0 success, 2 usage/validation, 3 data, 4 I/O.
int exit_code(const std::exception& e);

// Full command-line entry point.
int run(int argc, const char* const* argv);

}  // namespace deplen::cli
