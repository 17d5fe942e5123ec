#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "pqcbench/bench.hpp"
#include "pqcbench/chain_sim.hpp"
#include "pqcbench/registry.hpp"

namespace pqcb {

enum class Stage { Benchmark, Simulation };

std::string_view to_string(Stage stage) noexcept;
std::optional<Stage> stage_from_string(std::string_view s) noexcept;

/// Chart grouping: levels 1 and 2 share the "lower level" column.
enum class LevelGroup { Lower, L3, L5 };

std::optional<LevelGroup> level_group(SecurityLevel level) noexcept;
std::string_view label(LevelGroup group) noexcept;
/// Short form used in file names: "lower", "level3", "level5".
std::string_view slug(LevelGroup group) noexcept;

struct ReportRow {
  std::string machine;
  std::string family;
  std::string variant;
  SecurityLevel level = SecurityLevel::L1;
  Stage stage = Stage::Benchmark;
  std::optional<ChainModel> model;
  Operation operation = Operation::Verify;
  double mean_ms = 0.0;
  double std_ms = 0.0;
  std::size_t n = 0;

  bool operator==(const ReportRow&) const = default;
};

struct ReportDataset {
  std::vector<ReportRow> rows;

  /// Throws InvalidArgument if a row breaks the stage/model/operation rules.
  void validate() const;
  bool operator==(const ReportDataset&) const = default;
};

/// A simulation outcome tied to the variant and machine it was derived from.
struct SimulationEntry {
  VariantDescriptor descriptor;
  ChainModel model = ChainModel::Bitcoin;
  SimulationResult result;
  std::string machine;
};

/// Three rows per benchmark record, one verify row per simulation entry.
/// Throws DuplicateRow when two inputs yield the same identifying tuple.
ReportDataset synthesize(std::span<const BenchmarkRecord> records,
                         std::span<const SimulationEntry> simulations);

inline constexpr std::string_view kCsvHeader =
    "machine,family,variant,level,stage,model,operation,mean_ms,std_ms,n";

/// Rows in canonical order: stage, family, level, operation, then model,
/// machine and variant as tie-breakers.
std::vector<ReportRow> sorted_rows(const ReportDataset& dataset);

/// CSV text. Each comment line is emitted as "# <line>" before the header.
std::string format_csv(const ReportDataset& dataset, std::span<const std::string> comments = {});

/// Writes format_csv() to `path`; returns the byte count. Throws IoFailure.
std::size_t write_csv(const ReportDataset& dataset, const std::filesystem::path& path,
                      std::span<const std::string> comments = {});

/// Inverse of format_csv; '#' lines are skipped. Throws ParseError.
ReportDataset parse_csv(std::string_view text);
ReportDataset read_csv(const std::filesystem::path& path);

struct ChartSpec {
  std::string title;
  LevelGroup level_group = LevelGroup::Lower;
  Stage stage = Stage::Benchmark;
  std::optional<ChainModel> model;
  std::optional<std::string> machine;
  std::vector<Operation> series{Operation::Keypair, Operation::Sign, Operation::Verify};
  bool log_scale = false;
  int width = 960;
  int height = 540;
};

/// Rows of `dataset` a chart with `spec` would draw.
std::vector<ReportRow> select_rows(const ReportDataset& dataset, const ChartSpec& spec);

/// True when the largest mean exceeds 100x the smallest positive mean.
bool needs_log_scale(std::span<const ReportRow> rows);

/// Grouped bar chart (one group per variant, one bar per series operation,
/// error bars at mean ± std) as SVG 1.1. Throws EmptySelection.
std::string render_bar_chart_svg(const ReportDataset& dataset, const ChartSpec& spec);

std::size_t render_bar_chart(const ReportDataset& dataset, const ChartSpec& spec,
                             const std::filesystem::path& path);

}  // namespace pqcb
