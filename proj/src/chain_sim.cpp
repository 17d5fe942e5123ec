#include "pqcbench/chain_sim.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>

#include "pqcbench/errors.hpp"

namespace pqcb {

std::string_view to_string(ChainModel model) noexcept {
  return model == ChainModel::Bitcoin ? "Bitcoin" : "Ethereum";
}

std::optional<ChainModel> chain_model_from_string(std::string_view s) noexcept {
  if (s == "Bitcoin") return ChainModel::Bitcoin;
  if (s == "Ethereum") return ChainModel::Ethereum;
  return std::nullopt;
}

ChainModel chain_model_from_int(long value) {
  if (value == 1) return ChainModel::Bitcoin;
  if (value == 2) return ChainModel::Ethereum;
  throw Error(ErrorCode::UnknownModel,
              "unknown blockchain model " + std::to_string(value) + " (expected 1 or 2)");
}

std::string_view to_string(VerifySampling sampling) noexcept {
  return sampling == VerifySampling::MeanOnly ? "MeanOnly" : "NormalPerBlock";
}

void SimulationConfig::validate() const {
  if (!(tx_per_block_mean > 0.0)) throw Error(ErrorCode::InvalidArgument, "tx_per_block_mean must be > 0");
  if (blocks_per_run < 1) throw Error(ErrorCode::InvalidArgument, "blocks_per_run must be >= 1");
  if (!(block_interval_s > 0.0)) throw Error(ErrorCode::InvalidArgument, "block_interval_s must be > 0");
  if (runs < 1) throw Error(ErrorCode::InvalidArgument, "runs must be >= 1");
}

SimulationConfig default_config(ChainModel model) {
  SimulationConfig c;
  c.model = model;
  if (model == ChainModel::Bitcoin) {
    c.tx_per_block_mean = 1729.0;
    c.block_interval_s = 600.0;
  } else {
    c.tx_per_block_mean = 131.0;
    c.block_interval_s = 13.0;
  }
  c.blocks_per_run = 16;
  c.runs = 1000;
  c.verify_sampling = VerifySampling::NormalPerBlock;
  return c;
}

SimulationConfig default_config(long model) { return default_config(chain_model_from_int(model)); }

std::string to_key_values(const SimulationConfig& c) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "model=%s\ntx_per_block_mean=%.6g\nblocks_per_run=%zu\nblock_interval_s=%.6g\n"
                "runs=%zu\nseed=%llu\nverify_sampling=%s\n",
                std::string(to_string(c.model)).c_str(), c.tx_per_block_mean, c.blocks_per_run,
                c.block_interval_s, c.runs, static_cast<unsigned long long>(c.seed),
                std::string(to_string(c.verify_sampling)).c_str());
  return buf;
}

void EventQueue::push(const SimEvent& event) {
  if (event.timestamp_s < 0.0) throw Error(ErrorCode::InvalidArgument, "negative event timestamp");
  heap_.push(Entry{event, next_sequence_++});
}

SimEvent EventQueue::pop() {
  if (heap_.empty()) throw Error(ErrorCode::InvalidArgument, "pop from empty event queue");
  SimEvent e = heap_.top().event;
  heap_.pop();
  return e;
}

std::uint64_t derive_run_seed(std::uint64_t seed, std::uint64_t run_index) noexcept {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (run_index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

double draw_verify_ms(const SimulationConfig& config, const StatSummary& verify_stat, SimRng& rng) {
  if (config.verify_sampling == VerifySampling::MeanOnly || verify_stat.std_ms == 0.0) {
    return verify_stat.mean_ms;
  }
  std::normal_distribution<double> normal(verify_stat.mean_ms, verify_stat.std_ms);
  // Rejection keeps the draw on the non-negative half line.
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double t = normal(rng);
    if (t >= 0.0) return t;
  }
  return 0.0;
}

}  // namespace

RunResult simulate_run(const SimulationConfig& config, const StatSummary& verify_stat, SimRng& rng) {
  config.validate();
  if (verify_stat.mean_ms < 0.0 || verify_stat.std_ms < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "verify statistics must be non-negative");
  }

  std::exponential_distribution<double> interval(1.0 / config.block_interval_s);
  std::poisson_distribution<std::uint64_t> tx_count(config.tx_per_block_mean);

  EventQueue queue;
  queue.push(SimEvent{interval(rng), EventKind::BlockCreated, 0, 0});

  double cost_sum = 0.0;
  std::size_t created = 0;
  std::size_t verified = 0;
  std::uint64_t total_tx = 0;
  while (!queue.empty()) {
    const SimEvent event = queue.pop();
    if (event.kind == EventKind::BlockCreated) {
      const std::uint64_t txs = tx_count(rng);
      const double block_ms = static_cast<double>(txs) * draw_verify_ms(config, verify_stat, rng);
      cost_sum += block_ms;
      total_tx += txs;
      ++created;
      queue.push(SimEvent{event.timestamp_s + block_ms / 1000.0, EventKind::BlockVerified,
                          event.block_id, txs});
      if (created < config.blocks_per_run) {
        queue.push(SimEvent{event.timestamp_s + interval(rng), EventKind::BlockCreated,
                            event.block_id + 1, 0});
      }
    } else {
      ++verified;
    }
  }

  RunResult result;
  result.blocks = verified;
  result.total_tx = total_tx;
  result.mean_block_verify_ms = cost_sum / static_cast<double>(created);
  return result;
}

SimulationResult simulate_batch(const SimulationConfig& config, const StatSummary& verify_stat,
                                unsigned threads) {
  config.validate();
  if (verify_stat.mean_ms < 0.0 || verify_stat.std_ms < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "verify statistics must be non-negative");
  }
  SimulationResult result;
  result.per_run.resize(config.runs);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      SimRng rng(derive_run_seed(config.seed, i));
      result.per_run[i] = simulate_run(config, verify_stat, rng);
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, config.runs);
  if (workers == 1) {
    run_range(0, config.runs);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (config.runs + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(config.runs, begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
  }

  std::vector<double> means;
  means.reserve(result.per_run.size());
  for (const auto& r : result.per_run) means.push_back(r.mean_block_verify_ms);
  result.batch = summarize(means);
  return result;
}

}  // namespace pqcb
