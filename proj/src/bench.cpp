#include "pqcbench/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>

namespace pqcb {

namespace {

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct SignedMessage {
  Bytes message;
  Signature signature;
};

}  // namespace

std::string_view to_string(Operation op) noexcept {
  switch (op) {
    case Operation::Keypair: return "keypair";
    case Operation::Sign: return "sign";
    case Operation::Verify: return "verify";
  }
  return "unknown";
}

std::optional<Operation> operation_from_string(std::string_view s) noexcept {
  if (s == "keypair") return Operation::Keypair;
  if (s == "sign") return Operation::Sign;
  if (s == "verify") return Operation::Verify;
  return std::nullopt;
}

void RunPlan::validate() const {
  if (runs < 1) throw Error(ErrorCode::InvalidArgument, "run plan needs at least one measured run");
  if (message_len < 1) throw Error(ErrorCode::InvalidArgument, "message length must be >= 1 byte");
}

const StatSummary& BenchmarkRecord::stat(Operation op) const noexcept {
  switch (op) {
    case Operation::Keypair: return keypair_stat;
    case Operation::Sign: return sign_stat;
    case Operation::Verify: break;
  }
  return verify_stat;
}

double measure_timer_resolution(std::size_t pairs) {
  if constexpr (!BenchClock::is_steady) {
    throw Error(ErrorCode::ClockUnavailable, "no monotonic clock available");
  }
  auto best = BenchClock::duration::max();
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto a = BenchClock::now();
    const auto b = BenchClock::now();
    const auto d = b - a;
    if (d > BenchClock::duration::zero() && d < best) best = d;
  }
  if (best == BenchClock::duration::max()) {
    throw Error(ErrorCode::ClockUnavailable, "monotonic clock never advanced");
  }
  return std::chrono::duration<double, std::nano>(best).count();
}

BenchmarkRecord benchmark_variant(const SchemeInstance& instance, const RunPlan& plan,
                                  const EnvironmentInfo& environment,
                                  const BenchmarkOptions& options) {
  plan.validate();
  const auto& name = instance.descriptor().variant;
  std::mt19937_64 rng(options.seed ^ fnv1a(name));
  auto fill_random = [&rng](Bytes& buf) {
    for (auto& b : buf) b = static_cast<std::uint8_t>(rng());
  };

  auto keypair_samples = time_operation([&] { (void)instance.keypair(); }, plan);

  const KeyPair keys = instance.keypair();
  std::vector<SignedMessage> pool;
  std::size_t pool_bytes = 0;
  Bytes message(plan.message_len);
  Signature last;
  bool pending = false;
  auto stash = [&] {
    if (!pending) return;
    pending = false;
    const std::size_t cost = message.size() + last.bytes.size();
    if (pool.empty() || pool_bytes + cost <= options.verify_pool_bytes) {
      pool_bytes += cost;
      pool.push_back(SignedMessage{message, std::move(last)});
    }
  };
  auto sign_samples = time_prepared_operation(
      [&](std::size_t) {
        stash();
        fill_random(message);
      },
      [&](std::size_t) {
        last = instance.sign(keys.secret_key, message);
        pending = true;
      },
      plan);
  stash();

  bool all_valid = true;
  auto verify_samples = time_prepared_operation(
      [](std::size_t) {},
      [&](std::size_t i) {
        const auto& entry = pool[i % pool.size()];
        if (!instance.verify(keys.public_key, entry.message, entry.signature.bytes)) {
          all_valid = false;
        }
      },
      plan);
  if (!all_valid) {
    throw Error(ErrorCode::CorrectnessViolation,
                "verification of a freshly produced signature failed for " + name);
  }

  BenchmarkRecord record;
  record.descriptor = instance.descriptor();
  record.environment = environment;
  record.keypair_stat = summarize(keypair_samples);
  record.sign_stat = summarize(sign_samples);
  record.verify_stat = summarize(verify_samples);
  if (options.keep_raw_samples) {
    record.raw_samples = RawSamples{std::move(keypair_samples), std::move(sign_samples),
                                    std::move(verify_samples)};
  }
  return record;
}

std::vector<std::filesystem::path> write_raw_samples(const BenchmarkRecord& record,
                                                     const std::filesystem::path& directory) {
  if (!record.raw_samples) return {};
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + directory.string() + ": " + ec.message());

  std::string stem = record.descriptor.variant;
  std::replace_if(stem.begin(), stem.end(), [](char c) { return c == '/' || c == ' '; }, '_');

  std::vector<std::filesystem::path> written;
  const std::pair<Operation, const std::vector<double>*> lists[] = {
      {Operation::Keypair, &record.raw_samples->keypair},
      {Operation::Sign, &record.raw_samples->sign},
      {Operation::Verify, &record.raw_samples->verify},
  };
  for (const auto& [op, samples] : lists) {
    auto path = directory / (stem + "_" + std::string(to_string(op)) + ".txt");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string());
    char buf[64];
    for (double v : *samples) {
      std::snprintf(buf, sizeof buf, "%.6f\n", v);
      out << buf;
    }
    if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
    written.push_back(std::move(path));
  }
  return written;
}

}  // namespace pqcb
