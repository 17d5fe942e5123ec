#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqcbench/chain_sim.hpp"
#include "pqcbench/registry.hpp"

namespace pqcb {

struct CliConfig {
  std::size_t runs = 10000;
  std::size_t warmup = 1000;
  LevelSet levels{SecurityLevel::L1, SecurityLevel::L2, SecurityLevel::L3, SecurityLevel::L5};
  std::size_t runs_simulator = 1000;
  std::set<ChainModel> models{ChainModel::Bitcoin, ChainModel::Ethereum};
  std::uint64_t seed = 42;
  std::filesystem::path output_dir = "results";
  std::optional<std::set<std::string>> families;
  std::size_t message_len = 32;
  bool skip_benchmark = false;
  bool skip_simulation = false;
  std::optional<std::filesystem::path> replay_benchmarks;
  bool dump_raw_samples = false;
  bool help = false;

  bool operator==(const CliConfig&) const = default;
};

/// Parses arguments (without the program name). Throws UsageError whose
/// message names the offending flag.
CliConfig parse_args(std::span<const std::string> args);

std::string usage(std::string_view program = "pqcinblock");

/// "config.<field>=<value>" lines describing every field of `config`.
std::vector<std::string> config_to_lines(const CliConfig& config);

/// Rebuilds a config from text containing config_to_lines() output. Lines
/// without the "config." prefix are ignored. Throws ParseError.
CliConfig config_from_text(std::string_view text);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitPartial = 2;

struct PipelineStreams {
  std::ostream& log;
  std::ostream& err;
};

/// Benchmark, simulate, synthesize. Returns kExitOk, kExitPartial when a
/// variant was skipped or nothing was selected, kExitFatal on fatal errors
/// (reported on streams.err).
int run_pipeline(const CliConfig& config, const ProviderRegistry& registry,
                 const PipelineStreams& streams);

}  // namespace pqcb
