#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pqcbench/stats.hpp"

namespace pqcb {

/// CLI values 1 and 2 select these models.
enum class ChainModel { Bitcoin = 1, Ethereum = 2 };

std::string_view to_string(ChainModel model) noexcept;
std::optional<ChainModel> chain_model_from_string(std::string_view s) noexcept;
/// Throws UnknownModel for anything but 1 or 2.
ChainModel chain_model_from_int(long value);

enum class VerifySampling { MeanOnly, NormalPerBlock };

std::string_view to_string(VerifySampling sampling) noexcept;

struct SimulationConfig {
  ChainModel model = ChainModel::Bitcoin;
  double tx_per_block_mean = 1729.0;
  std::size_t blocks_per_run = 16;
  double block_interval_s = 600.0;
  std::size_t runs = 1000;
  std::uint64_t seed = 42;
  VerifySampling verify_sampling = VerifySampling::NormalPerBlock;

  void validate() const;
  bool operator==(const SimulationConfig&) const = default;
};

/// Transactions per block are the ratio of the published per-block
/// verification times to the per-signature ones: 1729 (Bitcoin), 131
/// (Ethereum). Block intervals are the networks' nominal 600 s and 13 s.
SimulationConfig default_config(ChainModel model);
SimulationConfig default_config(long model);

/// "key=value" lines, one per field, in a fixed order.
std::string to_key_values(const SimulationConfig& config);

enum class EventKind { BlockCreated, BlockVerified };

struct SimEvent {
  double timestamp_s = 0.0;
  EventKind kind = EventKind::BlockCreated;
  std::uint64_t block_id = 0;
  std::uint64_t tx_count = 0;
};

/// Min-queue on timestamp; equal timestamps leave in insertion order.
class EventQueue {
 public:
  void push(const SimEvent& event);
  SimEvent pop();
  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }

 private:
  struct Entry {
    SimEvent event;
    std::uint64_t sequence;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const noexcept {
      if (a.event.timestamp_s != b.event.timestamp_s) return a.event.timestamp_s > b.event.timestamp_s;
      return a.sequence > b.sequence;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
  std::uint64_t next_sequence_ = 0;
};

struct RunResult {
  double mean_block_verify_ms = 0.0;
  std::size_t blocks = 0;
  std::uint64_t total_tx = 0;

  bool operator==(const RunResult&) const = default;
};

struct SimulationResult {
  std::vector<RunResult> per_run;
  StatSummary batch;

  bool operator==(const SimulationResult&) const = default;
};

using SimRng = std::mt19937_64;

/// Independent stream seed for run `run_index` of a batch seeded with `seed`.
std::uint64_t derive_run_seed(std::uint64_t seed, std::uint64_t run_index) noexcept;

/// One run: blocks_per_run blocks at exponential spacing, Poisson tx counts,
/// per-block cost = tx_count x per-signature verify time.
RunResult simulate_run(const SimulationConfig& config, const StatSummary& verify_stat, SimRng& rng);

/// config.runs independent runs; `threads` > 1 splits runs across workers
/// without changing the result.
SimulationResult simulate_batch(const SimulationConfig& config, const StatSummary& verify_stat,
                                unsigned threads = 1);

}  // namespace pqcb
