#include <cctype>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

#include "pqcbench/bench.hpp"
#include "pqcbench/cli.hpp"
#include "pqcbench/errors.hpp"
#include "pqcbench/report.hpp"

namespace pqcb {

namespace {

struct Skipped {
  std::string variant;
  std::string reason;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<BenchmarkRecord> replay_records(const CliConfig& config,
                                            const std::vector<VariantDescriptor>& selection,
                                            std::ostream& log) {
  const ReportDataset replay = read_csv(*config.replay_benchmarks);
  // (machine, variant) -> operation -> row
  std::map<std::pair<std::string, std::string>, std::map<Operation, const ReportRow*>> groups;
  for (const auto& row : replay.rows) {
    if (row.stage != Stage::Benchmark) continue;
    groups[{row.machine, row.variant}][row.operation] = &row;
  }

  std::vector<BenchmarkRecord> out;
  for (const auto& d : selection) {
    bool found = false;
    for (const auto& [key, ops] : groups) {
      if (key.second != d.variant) continue;
      found = true;
      if (ops.size() != 3) {
        log << "warning: replayed " << d.variant << " lacks some operations; ignored\n";
        continue;
      }
      BenchmarkRecord rec;
      rec.descriptor = d;
      rec.environment.cpu_model = key.first;
      auto stat = [&](Operation op) {
        const ReportRow* r = ops.at(op);
        return StatSummary{r->mean_ms, r->std_ms, r->n};
      };
      rec.keypair_stat = stat(Operation::Keypair);
      rec.sign_stat = stat(Operation::Sign);
      rec.verify_stat = stat(Operation::Verify);
      out.push_back(std::move(rec));
    }
    if (!found) log << "warning: " << d.variant << " not present in replayed benchmarks\n";
  }
  return out;
}

std::vector<std::string> benchmark_comments(const CliConfig& config, const EnvironmentInfo& env) {
  std::vector<std::string> c;
  if (config.replay_benchmarks) {
    c.push_back("source=replay");
    return c;
  }
  c.push_back("runs=" + std::to_string(config.runs));
  c.push_back("warmup=" + std::to_string(config.warmup));
  c.push_back("message_len=" + std::to_string(config.message_len));
  c.push_back("seed=" + std::to_string(config.seed));
  c.push_back("cpu_model=" + env.cpu_model);
  c.push_back("memory_bytes=" + std::to_string(env.memory_bytes));
  c.push_back("os=" + env.os_descriptor);
  char buf[64];
  std::snprintf(buf, sizeof buf, "timer_resolution_ns=%.6f", env.timer_resolution_ns);
  c.push_back(buf);
  return c;
}

std::vector<std::string> simulation_comments(const CliConfig& config) {
  std::vector<std::string> c;
  for (ChainModel m : config.models) {
    SimulationConfig sc = default_config(m);
    sc.runs = config.runs_simulator;
    sc.seed = config.seed;
    const std::string prefix = std::string(to_string(m)) + ".";
    const std::string kv = to_key_values(sc);
    std::size_t pos = 0;
    while (pos < kv.size()) {
      auto nl = kv.find('\n', pos);
      c.push_back(prefix + kv.substr(pos, nl - pos));
      pos = nl + 1;
    }
  }
  return c;
}

void render_charts(const ReportDataset& dataset, Stage stage, std::optional<ChainModel> model,
                   const std::filesystem::path& dir, std::ostream& log) {
  for (LevelGroup g : {LevelGroup::Lower, LevelGroup::L3, LevelGroup::L5}) {
    ChartSpec spec;
    spec.level_group = g;
    spec.stage = stage;
    spec.model = model;
    std::string file;
    if (stage == Stage::Benchmark) {
      spec.title = "Benchmark - " + std::string(label(g));
      file = "benchmark_" + std::string(slug(g)) + ".svg";
    } else {
      spec.series = {Operation::Verify};
      spec.title = std::string(to_string(*model)) + " block verification - " + std::string(label(g));
      std::string m(to_string(*model));
      for (auto& ch : m) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      file = "simulation_" + m + "_" + std::string(slug(g)) + ".svg";
    }
    if (select_rows(dataset, spec).empty()) continue;
    render_bar_chart(dataset, spec, dir / file);
    log << "wrote " << (dir / file).string() << "\n";
  }
}

}  // namespace

int run_pipeline(const CliConfig& config, const ProviderRegistry& registry,
                 const PipelineStreams& streams) {
  auto& log = streams.log;
  try {
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) {
      throw Error(ErrorCode::Io, "cannot create output directory " + config.output_dir.string() +
                                     ": " + ec.message());
    }

    std::vector<VariantDescriptor> selection = filter_by_levels(catalog(), config.levels);
    if (config.families) selection = filter_by_families(selection, *config.families);
    bool partial = false;
    if (selection.empty()) {
      log << "warning: no variants at the selected levels\n";
      partial = true;
    }

    const EnvironmentInfo env = probe_environment();
    std::vector<Skipped> skipped;

    // Stage 1: algorithm benchmarking (or replay of an earlier one).
    std::vector<BenchmarkRecord> records;
    const bool have_benchmarks = config.replay_benchmarks || !config.skip_benchmark;
    if (config.replay_benchmarks) {
      records = replay_records(config, selection, log);
    } else if (!config.skip_benchmark) {
      const RunPlan plan{config.warmup, config.runs, config.message_len};
      BenchmarkOptions options;
      options.seed = config.seed;
      options.keep_raw_samples = config.dump_raw_samples;
      std::size_t index = 0;
      for (const auto& d : selection) {
        ++index;
        log << "[" << index << "/" << selection.size() << "] " << d.variant << " ... " << std::flush;
        try {
          const SchemeInstance instance = registry.instantiate(d);
          BenchmarkRecord rec = benchmark_variant(instance, plan, env, options);
          char buf[160];
          std::snprintf(buf, sizeof buf, "keypair %.4f  sign %.4f  verify %.4f ms\n",
                        rec.keypair_stat.mean_ms, rec.sign_stat.mean_ms, rec.verify_stat.mean_ms);
          log << buf;
          if (config.dump_raw_samples) write_raw_samples(rec, config.output_dir / "raw");
          rec.raw_samples.reset();
          records.push_back(std::move(rec));
        } catch (const Error& e) {
          const auto code = e.code();
          if (code != ErrorCode::UnsupportedVariant && code != ErrorCode::CorrectnessViolation &&
              code != ErrorCode::BackendFailure) {
            throw;
          }
          log << "skipped\n";
          log << "warning: skipping " << d.variant << " (" << to_string(code) << "): " << e.what()
              << "\n";
          skipped.push_back({d.variant, std::string(to_string(code)) + ": " + e.what()});
        }
      }
    } else {
      log << "benchmark stage skipped\n";
    }

    // Stage 2: blockchain simulation fed by the verify statistics.
    std::vector<SimulationEntry> sims;
    if (!config.skip_simulation) {
      const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
      for (const auto& rec : records) {
        for (ChainModel m : config.models) {
          SimulationConfig sc = default_config(m);
          sc.runs = config.runs_simulator;
          sc.seed = config.seed;
          SimulationEntry entry{rec.descriptor, m, simulate_batch(sc, rec.verify_stat, threads),
                                rec.environment.cpu_model};
          char buf[200];
          std::snprintf(buf, sizeof buf, "simulated %s on %s: %.4f ± %.4f ms per block\n",
                        rec.descriptor.variant.c_str(), std::string(to_string(m)).c_str(),
                        entry.result.batch.mean_ms, entry.result.batch.std_ms);
          log << buf;
          sims.push_back(std::move(entry));
        }
      }
    }

    // Stage 3: synthesis.
    const ReportDataset bench_ds = synthesize(records, {});
    const ReportDataset sim_ds = synthesize({}, sims);
    if (have_benchmarks) {
      write_csv(bench_ds, config.output_dir / "benchmark.csv", benchmark_comments(config, env));
      render_charts(bench_ds, Stage::Benchmark, std::nullopt, config.output_dir, log);
    }
    if (!config.skip_simulation) {
      write_csv(sim_ds, config.output_dir / "simulation.csv", simulation_comments(config));
      for (ChainModel m : config.models) {
        render_charts(sim_ds, Stage::Simulation, m, config.output_dir, log);
      }
    }

    // Manifest.
    {
      const auto path = config.output_dir / "manifest.txt";
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string());
      for (const auto& line : config_to_lines(config)) out << line << "\n";
      out << "environment.cpu_model=" << env.cpu_model << "\n";
      out << "environment.memory_bytes=" << env.memory_bytes << "\n";
      out << "environment.os_descriptor=" << env.os_descriptor << "\n";
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", env.timer_resolution_ns);
      out << "environment.timer_resolution_ns=" << buf << "\n";
      out << "timestamp=" << utc_timestamp() << "\n";
      out << "provider_override=" << registry.override_key().value_or("") << "\n";
      out << "skipped.count=" << skipped.size() << "\n";
      for (std::size_t i = 0; i < skipped.size(); ++i) {
        out << "skipped." << i << "=" << skipped[i].variant << ": " << skipped[i].reason << "\n";
      }
      if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
    }

    if (!skipped.empty()) partial = true;
    return partial ? kExitPartial : kExitOk;
  } catch (const Error& e) {
    streams.err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitFatal;
  } catch (const std::exception& e) {
    streams.err << "error: " << e.what() << "\n";
    return kExitFatal;
  }
}

}  // namespace pqcb
