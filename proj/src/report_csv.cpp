#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "pqcbench/errors.hpp"
#include "pqcbench/report.hpp"

namespace pqcb {

std::string_view to_string(Stage stage) noexcept {
  return stage == Stage::Benchmark ? "Benchmark" : "Simulation";
}

std::optional<Stage> stage_from_string(std::string_view s) noexcept {
  if (s == "Benchmark") return Stage::Benchmark;
  if (s == "Simulation") return Stage::Simulation;
  return std::nullopt;
}

std::optional<LevelGroup> level_group(SecurityLevel level) noexcept {
  switch (level) {
    case SecurityLevel::L1:
    case SecurityLevel::L2: return LevelGroup::Lower;
    case SecurityLevel::L3: return LevelGroup::L3;
    case SecurityLevel::L5: return LevelGroup::L5;
    case SecurityLevel::L4: break;
  }
  return std::nullopt;
}

std::string_view label(LevelGroup group) noexcept {
  switch (group) {
    case LevelGroup::Lower: return "Lower Level (1 or 2)";
    case LevelGroup::L3: return "Level 3";
    case LevelGroup::L5: break;
  }
  return "Level 5";
}

std::string_view slug(LevelGroup group) noexcept {
  switch (group) {
    case LevelGroup::Lower: return "lower";
    case LevelGroup::L3: return "level3";
    case LevelGroup::L5: break;
  }
  return "level5";
}

void ReportDataset::validate() const {
  for (const auto& r : rows) {
    if (r.stage == Stage::Simulation && (r.operation != Operation::Verify || !r.model)) {
      throw Error(ErrorCode::InvalidArgument,
                  "simulation row for " + r.variant + " must be a verify row with a model");
    }
    if (r.stage == Stage::Benchmark && r.model) {
      throw Error(ErrorCode::InvalidArgument, "benchmark row for " + r.variant + " carries a model");
    }
  }
}

namespace {

auto row_key(const ReportRow& r) {
  return std::make_tuple(r.machine, r.family, r.variant, r.level, r.stage,
                         r.model ? static_cast<int>(*r.model) : 0, r.operation);
}

using SortKey = std::tuple<Stage, const std::string&, SecurityLevel, Operation, int,
                           const std::string&, const std::string&>;

SortKey sort_key(const ReportRow& r) {
  return SortKey(r.stage, r.family, r.level, r.operation, r.model ? static_cast<int>(*r.model) : 0,
                 r.machine, r.variant);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": unterminated quote");
  }
  fields.push_back(std::move(cur));
  return fields;
}

template <typename T>
T parse_number(const std::string& field, std::string_view what, std::size_t line_no) {
  T value{};
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad " +
                                      std::string(what) + " '" + field + "'");
  }
  return value;
}

}  // namespace

ReportDataset synthesize(std::span<const BenchmarkRecord> records,
                         std::span<const SimulationEntry> simulations) {
  ReportDataset out;
  using Key = decltype(row_key(ReportRow{}));
  std::set<Key> seen;
  auto add = [&](ReportRow row) {
    if (!seen.insert(row_key(row)).second) {
      throw Error(ErrorCode::DuplicateRow,
                  "duplicate " + std::string(to_string(row.stage)) + " row for " + row.variant +
                      " (" + std::string(to_string(row.operation)) + ")");
    }
    out.rows.push_back(std::move(row));
  };

  for (const auto& rec : records) {
    for (Operation op : {Operation::Keypair, Operation::Sign, Operation::Verify}) {
      const StatSummary& s = rec.stat(op);
      add(ReportRow{rec.environment.cpu_model, rec.descriptor.family, rec.descriptor.variant,
                    rec.descriptor.level, Stage::Benchmark, std::nullopt, op, s.mean_ms, s.std_ms,
                    s.n});
    }
  }
  for (const auto& sim : simulations) {
    const StatSummary& s = sim.result.batch;
    add(ReportRow{sim.machine, sim.descriptor.family, sim.descriptor.variant, sim.descriptor.level,
                  Stage::Simulation, sim.model, Operation::Verify, s.mean_ms, s.std_ms, s.n});
  }
  return out;
}

std::vector<ReportRow> sorted_rows(const ReportDataset& dataset) {
  std::vector<ReportRow> rows = dataset.rows;
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return sort_key(a) < sort_key(b); });
  return rows;
}

std::string format_csv(const ReportDataset& dataset, std::span<const std::string> comments) {
  dataset.validate();
  std::string out;
  for (const auto& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  out += kCsvHeader;
  out += '\n';
  char num[96];
  for (const auto& r : sorted_rows(dataset)) {
    out += csv_field(r.machine) + ',' + csv_field(r.family) + ',' + csv_field(r.variant) + ',';
    out += std::to_string(to_int(r.level)) + ',';
    out += std::string(to_string(r.stage)) + ',';
    if (r.model) out += to_string(*r.model);
    out += ',';
    out += to_string(r.operation);
    std::snprintf(num, sizeof num, ",%.4f,%.4f,%zu\n", r.mean_ms, r.std_ms, r.n);
    out += num;
  }
  return out;
}

std::size_t write_csv(const ReportDataset& dataset, const std::filesystem::path& path,
                      std::span<const std::string> comments) {
  const std::string text = format_csv(dataset, comments);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
  return text.size();
}

ReportDataset parse_csv(std::string_view text) {
  ReportDataset out;
  std::set<decltype(row_key(ReportRow{}))> seen;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kCsvHeader) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": unexpected header");
      }
      header_seen = true;
      continue;
    }
    auto f = split_csv_line(line, line_no);
    if (f.size() != 10) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected 10 fields, got " +
                                        std::to_string(f.size()));
    }
    ReportRow r;
    r.machine = f[0];
    r.family = f[1];
    r.variant = f[2];
    auto level = level_from_int(parse_number<int>(f[3], "level", line_no));
    if (!level) throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad level");
    r.level = *level;
    auto stage = stage_from_string(f[4]);
    if (!stage) throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad stage");
    r.stage = *stage;
    if (!f[5].empty()) {
      r.model = chain_model_from_string(f[5]);
      if (!r.model) throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad model");
    }
    auto op = operation_from_string(f[6]);
    if (!op) throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad operation");
    r.operation = *op;
    r.mean_ms = parse_number<double>(f[7], "mean_ms", line_no);
    r.std_ms = parse_number<double>(f[8], "std_ms", line_no);
    r.n = parse_number<std::size_t>(f[9], "n", line_no);
    if (!seen.insert(row_key(r)).second) {
      throw Error(ErrorCode::DuplicateRow, "line " + std::to_string(line_no) + ": duplicate row for " + r.variant);
    }
    out.rows.push_back(std::move(r));
  }
  if (!header_seen) throw Error(ErrorCode::Parse, "missing CSV header");
  try {
    out.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return out;
}

ReportDataset read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

}  // namespace pqcb
