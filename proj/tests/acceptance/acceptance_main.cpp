// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catalog_golden.hpp"
#include "golden_dataset.hpp"
#include "pqcbench/bench.hpp"
#include "pqcbench/chain_sim.hpp"
#include "pqcbench/cli.hpp"
#include "pqcbench/errors.hpp"
#include "pqcbench/report.hpp"
#include "pqcbench/stats.hpp"
#include "support.hpp"

using namespace pqcb;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

const ProviderRegistry& registry() {
  static const ProviderRegistry r = ProviderRegistry::with_default_providers();
  return r;
}

BenchmarkRecord bench(std::string_view variant, RunPlan plan) {
  return benchmark_variant(registry().instantiate(*find_variant(variant)), plan, {});
}

// ---- 1 ----------------------------------------------------------------------

Outcome catalog_conformance() {
  const auto t0 = Clock::now();
  const auto expected = testing::golden_descriptors();
  const auto got = catalog();
  std::map<int, int> per_level;
  for (const auto& d : got) ++per_level[to_int(d.level)];
  const bool same = std::equal(got.begin(), got.end(), expected.begin(), expected.end());
  const double dt = seconds_since(t0);
  const bool pass = same && got.size() == 46 && per_level[1] == 14 && per_level[2] == 2 &&
                    per_level[3] == 14 && per_level[4] == 0 && per_level[5] == 16 && dt < 1.0;
  return {pass, fmt("%zu variants, per level %d/%d/%d/%d/%d, table %s (%.3f s)", got.size(), per_level[1],
                    per_level[2], per_level[3], per_level[4], per_level[5], same ? "identical" : "DIFFERS", dt)};
}

// ---- 2 ----------------------------------------------------------------------

Outcome statistics_oracle() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> len(1, 10000);
  std::lognormal_distribution<double> timing(-2.0, 1.2);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> xs(len(rng));
    for (auto& x : xs) x = timing(rng);
    long double sum = 0;
    for (double x : xs) sum += x;
    const long double mean = sum / xs.size();
    long double sq = 0;
    for (double x : xs) sq += (x - mean) * (x - mean);
    const long double sd = xs.size() > 1 ? std::sqrt(sq / (xs.size() - 1)) : 0.0L;

    const auto s = summarize(xs);
    worst = std::max(worst, static_cast<double>(std::fabs((s.mean_ms - mean) / mean)));
    if (sd != 0) worst = std::max(worst, static_cast<double>(std::fabs((s.std_ms - sd) / sd)));
    else worst = std::max(worst, std::fabs(s.std_ms));
    if (s.n != xs.size()) worst = 1.0;
  }
  const double dt = seconds_since(t0);
  return {worst <= 1e-12 && dt < 10.0, fmt("1000 lists, worst relative error %.3g (%.2f s)", worst, dt)};
}

// ---- 3 ----------------------------------------------------------------------

struct SuiteCount {
  std::size_t variants = 0;
  std::size_t roundtrips = 0;
  std::size_t tampers_rejected = 0;
  std::vector<std::string> failures;
};

void correctness_for(const VariantDescriptor& d, SuiteCount& count) {
  const auto inst = registry().instantiate(d);
  std::mt19937_64 rng(std::hash<std::string>{}(d.variant));
  const std::size_t lengths[] = {32, 0, 1, 1024};
  KeyPair kp;
  std::size_t ok = 0, rejected = 0;
  for (int i = 0; i < 100; ++i) {
    if (i % 25 == 0) kp = inst.keypair();
    const auto msg = testing::random_bytes(rng, lengths[i % 4]);
    const auto sig = inst.sign(kp.secret_key, msg).bytes;
    if (inst.verify(kp.public_key, msg, sig)) ++ok;
    // Alternate between a flipped message byte and a flipped signature byte.
    if (i % 2 == 0 && !msg.empty()) {
      auto bad = msg;
      testing::tamper(bad, rng);
      if (!inst.verify(kp.public_key, bad, sig)) ++rejected;
    } else {
      auto bad = sig;
      testing::tamper(bad, rng);
      if (!inst.verify(kp.public_key, msg, bad)) ++rejected;
    }
  }
  ++count.variants;
  count.roundtrips += ok;
  count.tampers_rejected += rejected;
  if (ok != 100 || rejected != 100) {
    count.failures.push_back(d.variant + fmt(" (%zu/100 verified, %zu/100 tampers rejected)", ok, rejected));
  }
}

Outcome correctness_suite() {
  SuiteCount smoke;
  const auto t0 = Clock::now();
  for (auto name : testing::kSmokeVariants) correctness_for(*find_variant(name), smoke);
  const double smoke_dt = seconds_since(t0);

  SuiteCount full;
  std::vector<std::string> unavailable;
  const auto t1 = Clock::now();
  for (const auto& d : catalog()) {
    try {
      correctness_for(d, full);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedVariant) throw;
      unavailable.push_back(d.variant);
    }
  }
  const double full_dt = seconds_since(t1);

  const bool pass = smoke.failures.empty() && full.failures.empty() && smoke.variants == 6 &&
                    smoke_dt < 30.0 && full_dt < 600.0;
  std::string detail = fmt("smoke %zu variants %.1f s; full %zu variants, %zu roundtrips, %zu tampers rejected, %.1f s",
                           smoke.variants, smoke_dt, full.variants, full.roundtrips, full.tampers_rejected, full_dt);
  if (!unavailable.empty()) detail += fmt("; %zu not instantiable", unavailable.size());
  for (const auto& f : full.failures) detail += "; FAILED " + f;
  return {pass, detail};
}

// ---- 4 ----------------------------------------------------------------------

Outcome l5_verify_ordering() {
  const RunPlan plan{100, 1000, 32};
  const auto mldsa = bench("ML-DSA-87", plan);
  const auto ecdsa = bench("P-521", plan);
  const double factor = ecdsa.verify_stat.mean_ms / mldsa.verify_stat.mean_ms;
  return {factor >= 2.0, fmt("ML-DSA-87 verify %.4f ms, P-521 verify %.4f ms, factor %.2f (need >= 2)",
                             mldsa.verify_stat.mean_ms, ecdsa.verify_stat.mean_ms, factor)};
}

// ---- 5 ----------------------------------------------------------------------

Outcome sphincs_s_vs_f() {
  const auto t0 = Clock::now();
  const RunPlan plan{10, 200, 32};
  bool pass = true;
  std::string detail;
  for (auto [s_name, f_name] : {std::pair{"SPHINCS+-SHA2-128s-simple", "SPHINCS+-SHA2-128f-simple"},
                                std::pair{"SPHINCS+-SHAKE-128s-simple", "SPHINCS+-SHAKE-128f-simple"}}) {
    const auto s = bench(s_name, plan);
    const auto f = bench(f_name, plan);
    const double sign_ratio = s.sign_stat.mean_ms / f.sign_stat.mean_ms;
    const double verify_ratio = f.verify_stat.mean_ms / s.verify_stat.mean_ms;
    pass = pass && sign_ratio >= 5.0 && verify_ratio >= 1.5;
    if (!detail.empty()) detail += "; ";
    detail += fmt("%s: s signs %.1fx slower, verifies %.2fx faster", find_variant(s_name)->family.c_str(),
                  sign_ratio, verify_ratio);
  }
  const double dt = seconds_since(t0);
  pass = pass && dt < 300.0;
  return {pass, detail + fmt(" (%.1f s)", dt)};
}

// ---- 6 ----------------------------------------------------------------------

Outcome falcon_profile() {
  const auto r = bench("Falcon-512", RunPlan{100, 1000, 32});
  const double kp_sign = r.keypair_stat.mean_ms / r.sign_stat.mean_ms;
  const double sign_verify = r.sign_stat.mean_ms / r.verify_stat.mean_ms;
  return {kp_sign >= 20.0 && sign_verify >= 2.0,
          fmt("keypair %.4f, sign %.4f, verify %.4f ms; keypair/sign %.1f (need >= 20), sign/verify %.1f (need >= 2)",
              r.keypair_stat.mean_ms, r.sign_stat.mean_ms, r.verify_stat.mean_ms, kp_sign, sign_verify)};
}

// ---- 7 ----------------------------------------------------------------------

Outcome simulator_calibration() {
  const auto t0 = Clock::now();
  auto btc = default_config(ChainModel::Bitcoin);
  btc.verify_sampling = VerifySampling::MeanOnly;
  auto eth = default_config(ChainModel::Ethereum);
  eth.verify_sampling = VerifySampling::MeanOnly;
  const double b = simulate_batch(btc, {0.0788, 0.0029, 10000}).batch.mean_ms;
  const double e = simulate_batch(eth, {0.0529, 0.0026, 10000}).batch.mean_ms;
  const double b_err = std::fabs(b - 136.28) / 136.28;
  const double e_err = std::fabs(e - 6.94) / 6.94;
  const double dt = seconds_since(t0);
  return {b_err <= 0.02 && e_err <= 0.02 && dt < 30.0,
          fmt("Bitcoin %.4f ms vs 136.28 (%.2f%%), Ethereum %.4f ms vs 6.94 (%.2f%%) (%.2f s)", b, 100 * b_err, e,
              100 * e_err, dt)};
}

// ---- 8 ----------------------------------------------------------------------

Outcome headline_reduction() {
  const auto btc = default_config(ChainModel::Bitcoin);
  const double mldsa = simulate_batch(btc, {0.0368, 0.0014, 10000}).batch.mean_ms;
  const double ecdsa = simulate_batch(btc, {0.3977, 0.011, 10000}).batch.mean_ms;
  const double reduction = 100.0 * (1.0 - mldsa / ecdsa);
  const bool pass = reduction >= 88.0 && std::fabs(reduction - 90.7) <= 3.0;
  return {pass, fmt("ML-DSA %.2f ms vs ECDSA %.2f ms per block, reduction %.2f%% (need >= 88, within 3 of 90.7)",
                    mldsa, ecdsa, reduction)};
}

// ---- 9 ----------------------------------------------------------------------

Outcome replay_determinism() {
  testing::TempDir dir("acceptance_replay");
  // Benchmark input covering the whole catalog on two machines.
  std::vector<BenchmarkRecord> recs;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> ticks(1, 20000);
  for (const char* machine : {"Laptop ARM", "Desktop"}) {
    for (const auto& d : catalog()) {
      BenchmarkRecord r;
      r.descriptor = d;
      r.environment.cpu_model = machine;
      r.keypair_stat = {ticks(rng) / 1e4, ticks(rng) / 1e6, 10000};
      r.sign_stat = {ticks(rng) / 1e4, ticks(rng) / 1e6, 10000};
      r.verify_stat = {ticks(rng) / 1e4, ticks(rng) / 1e6, 10000};
      recs.push_back(r);
    }
  }
  const auto input = dir.path() / "benchmark.csv";
  write_csv(synthesize(recs, {}), input);

  std::vector<fs::path> outs;
  for (const char* sub : {"first", "second"}) {
    CliConfig c;
    c.replay_benchmarks = input;
    c.output_dir = dir.path() / sub;
    std::ostringstream log, err;
    const int rc = run_pipeline(c, registry(), {log, err});
    if (rc != kExitOk) return {false, "pipeline exit " + std::to_string(rc) + ": " + err.str()};
    outs.push_back(c.output_dir);
  }

  std::size_t compared = 0;
  std::vector<std::string> differing;
  for (const auto& entry : fs::directory_iterator(outs[0])) {
    const auto name = entry.path().filename().string();
    if (name.rfind("simulation", 0) != 0) continue;
    ++compared;
    if (testing::read_file(entry.path().string()) != testing::read_file((outs[1] / name).string())) {
      differing.push_back(name);
    }
  }
  std::string detail = fmt("%zu simulation artifacts compared", compared);
  for (const auto& d : differing) detail += "; DIFFERS " + d;
  // simulation.csv plus three level groups for each of two models.
  return {differing.empty() && compared == 7, detail};
}

// ---- 10 ---------------------------------------------------------------------

Outcome csv_roundtrip_and_golden() {
  std::mt19937_64 rng(99);
  const auto entries = catalog();
  const std::vector<std::string> machines{"Laptop ARM", "Desktop", "Laptop x64", "rack \"7\", slot 2"};
  std::size_t rows_checked = 0;
  bool identity = true;
  for (int trial = 0; trial < 1000 && identity; ++trial) {
    ReportDataset d;
    std::set<std::tuple<std::string, std::string, int, int, int>> keys;
    const std::size_t n = rng() % 40;
    while (d.rows.size() < n) {
      const auto& v = entries[rng() % entries.size()];
      ReportRow r{machines[rng() % machines.size()], v.family, v.variant, v.level, Stage::Benchmark,
                  std::nullopt, static_cast<Operation>(rng() % 3), static_cast<double>(rng() % 100000000) / 1e4,
                  static_cast<double>(rng() % 1000000) / 1e4, 1 + rng() % 100000};
      if (rng() % 2) {
        r.stage = Stage::Simulation;
        r.model = rng() % 2 ? ChainModel::Bitcoin : ChainModel::Ethereum;
        r.operation = Operation::Verify;
      }
      if (!keys.emplace(r.machine, r.variant, static_cast<int>(r.stage), r.model ? static_cast<int>(*r.model) : 0,
                        static_cast<int>(r.operation))
               .second) {
        continue;
      }
      d.rows.push_back(r);
    }
    identity = parse_csv(format_csv(d)).rows == sorted_rows(d);
    rows_checked += n;
  }
  const std::string golden = testing::read_file(std::string(PQCB_GOLDEN_DIR) + "/small_dataset.csv");
  const bool golden_ok = !golden.empty() && format_csv(testing::golden_dataset()) == golden;
  return {identity && golden_ok, fmt("1000 random datasets (%zu rows) %s; golden file %s", rows_checked,
                                     identity ? "round-trip exactly" : "DO NOT round-trip",
                                     golden_ok ? "matches byte for byte" : "DIFFERS")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"catalog conformance", catalog_conformance},
      {"statistics oracle", statistics_oracle},
      {"correctness suite", correctness_suite},
      {"level 5 verify ordering", l5_verify_ordering},
      {"SPHINCS+ s vs f ordering", sphincs_s_vs_f},
      {"Falcon cost profile", falcon_profile},
      {"simulator calibration", simulator_calibration},
      {"level 3 headline reduction", headline_reduction},
      {"replay determinism", replay_determinism},
      {"CSV round trip and golden file", csv_roundtrip_and_golden},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  %2d  %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
