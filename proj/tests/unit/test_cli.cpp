#include <sstream>

#include "doctest.h"
#include "golden_dataset.hpp"
#include "pqcbench/cli.hpp"
#include "pqcbench/errors.hpp"
#include "pqcbench/report.hpp"
#include "support.hpp"

using namespace pqcb;
namespace fs = std::filesystem;

namespace {

CliConfig parse(std::initializer_list<std::string> args) {
  const std::vector<std::string> v(args);
  return parse_args(v);
}

std::string usage_message(std::initializer_list<std::string> args) {
  try {
    (void)parse(args);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Usage);
    return e.what();
  }
  FAIL("no usage error");
  return {};
}

struct Run {
  int rc;
  std::string log;
  std::string err;
};

Run run(const CliConfig& c, const ProviderRegistry& r) {
  std::ostringstream log, err;
  const int rc = run_pipeline(c, r, {log, err});
  return {rc, log.str(), err.str()};
}

CliConfig quick(const fs::path& out) {
  CliConfig c;
  c.runs = 20;
  c.warmup = 2;
  c.levels = {SecurityLevel::L2};
  c.runs_simulator = 20;
  c.output_dir = out;
  return c;
}

std::size_t data_rows(const fs::path& csv) { return read_csv(csv).rows.size(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("defaults") {
    const auto c = parse({});
    CHECK(c.runs == 10000);
    CHECK(c.warmup == 1000);
    CHECK(c.levels == LevelSet{SecurityLevel::L1, SecurityLevel::L2, SecurityLevel::L3, SecurityLevel::L5});
    CHECK(c.runs_simulator == 1000);
    CHECK(c.models == std::set<ChainModel>{ChainModel::Bitcoin, ChainModel::Ethereum});
    CHECK(c.seed == 42);
    CHECK(c.output_dir == "results");
    CHECK_FALSE(c.families.has_value());
    CHECK(c.message_len == 32);
    CHECK_FALSE(c.skip_benchmark);
    CHECK_FALSE(c.skip_simulation);
    CHECK_FALSE(c.replay_benchmarks.has_value());
  }

  TEST_CASE("flag spellings") {
    CHECK(parse({"-r", "5"}).runs == 5);
    CHECK(parse({"--runs=6"}).runs == 6);
    CHECK(parse({"-wp", "7"}).warmup == 7);
    CHECK(parse({"--warm-up", "0"}).warmup == 0);
    CHECK(parse({"--runs-simulator", "9"}).runs_simulator == 9);
    CHECK(parse({"--seed", "18446744073709551615"}).seed == 18446744073709551615ull);
    CHECK(parse({"--output-dir", "x/y"}).output_dir == "x/y");
    CHECK(parse({"--message-len", "64"}).message_len == 64);
    CHECK(parse({"--skip-benchmark"}).skip_benchmark);
    CHECK(parse({"--skip-simulation"}).skip_simulation);
    CHECK(parse({"--replay-benchmarks", "b.csv"}).replay_benchmarks == fs::path("b.csv"));
    CHECK(parse({"--dump-raw"}).dump_raw_samples);
    CHECK(parse({"-h"}).help);
  }

  TEST_CASE("repeatable and list-valued flags") {
    const LevelSet one_five{SecurityLevel::L1, SecurityLevel::L5};
    CHECK(parse({"-l", "1", "-l", "5"}).levels == one_five);
    CHECK(parse({"-l", "1", "5"}).levels == one_five);
    CHECK(parse({"--levels", "1,5"}).levels == one_five);
    CHECK(parse({"-l", "4"}).levels == LevelSet{SecurityLevel::L4});
    CHECK(parse({"--model", "2"}).models == std::set<ChainModel>{ChainModel::Ethereum});
    CHECK(parse({"--model", "1", "2"}).models.size() == 2);
    const auto f = parse({"--families", "Falcon,Mayo", "--families", "ECDSA"}).families;
    REQUIRE(f.has_value());
    CHECK(*f == std::set<std::string>{"ECDSA", "Falcon", "Mayo"});
  }

  TEST_CASE("usage errors name the flag") {
    CHECK(usage_message({"--model", "7"}).find("--model") != std::string::npos);
    CHECK(usage_message({"--model", "0"}).find("--model") != std::string::npos);
    CHECK(usage_message({"-l", "6"}).find("-l") != std::string::npos);
    CHECK(usage_message({"-l", "0"}).find("-l") != std::string::npos);
    CHECK(usage_message({"--runs", "0"}).find("--runs") != std::string::npos);
    CHECK(usage_message({"--runs", "-3"}).find("--runs") != std::string::npos);
    CHECK(usage_message({"--runs", "ten"}).find("--runs") != std::string::npos);
    CHECK(usage_message({"--runs"}).find("missing value") != std::string::npos);
    CHECK(usage_message({"--runs-simulator", "0"}).find("--runs-simulator") != std::string::npos);
    CHECK(usage_message({"--message-len", "0"}).find("--message-len") != std::string::npos);
    CHECK(usage_message({"--families", "Nope"}).find("Nope") != std::string::npos);
    CHECK(usage_message({"--frobnicate"}).find("unknown flag") != std::string::npos);
    CHECK(usage_message({"--skip-benchmark=yes"}).find("takes no value") != std::string::npos);
    CHECK(usage_message({"-l"}).find("missing value") != std::string::npos);
  }

  TEST_CASE("usage text lists the flags") {
    const auto u = usage();
    for (auto flag : {"--runs", "-wp", "--levels", "--runs-simulator", "--model", "--seed", "--output-dir",
                      "--families", "--message-len", "--skip-benchmark", "--skip-simulation",
                      "--replay-benchmarks", "PQCINBLOCK_PROVIDER"}) {
      CHECK(u.find(flag) != std::string::npos);
    }
  }

  TEST_CASE("manifest lines parse back to the same config") {
    std::vector<CliConfig> configs{parse({}), parse({"-r", "3", "-wp", "1", "-l", "2", "5", "--model", "2",
                                                     "--seed", "9", "--output-dir", "o", "--families", "Mayo",
                                                     "--message-len", "100", "--skip-simulation",
                                                     "--replay-benchmarks", "r.csv", "--dump-raw"})};
    for (const auto& c : configs) {
      std::string text = "timestamp=now\n";
      for (const auto& l : config_to_lines(c)) text += l + "\n";
      CHECK(config_from_text(text) == c);
    }
    CHECK_THROWS_AS((void)config_from_text("config.runs=1\n"), Error);
  }

  TEST_CASE("pipeline on the stub provider writes every artifact") {
    testing::TempDir dir("pipe");
    const auto out = dir.path() / "results";
    const auto c = quick(out);
    const auto r = run(c, testing::stub_registry());
    CHECK(r.rc == kExitOk);
    CHECK(r.err.empty());
    CHECK(data_rows(out / "benchmark.csv") == 6);
    CHECK(data_rows(out / "simulation.csv") == 4);
    for (auto f : {"benchmark_lower.svg", "simulation_bitcoin_lower.svg", "simulation_ethereum_lower.svg",
                   "manifest.txt"}) {
      CHECK(fs::exists(out / f));
    }
    CHECK_FALSE(fs::exists(out / "benchmark_level3.svg"));
    const auto manifest = testing::read_file((out / "manifest.txt").string());
    CHECK(config_from_text(manifest) == c);
    CHECK(manifest.find("provider_override=stub\n") != std::string::npos);
    CHECK(manifest.find("skipped.count=0\n") != std::string::npos);
    CHECK(manifest.find("environment.cpu_model=") != std::string::npos);
  }

  TEST_CASE("no variant at the selected levels is a partial run") {
    testing::TempDir dir("empty");
    auto c = quick(dir.path());
    c.levels = {SecurityLevel::L4};
    const auto r = run(c, testing::stub_registry());
    CHECK(r.rc == kExitPartial);
    CHECK(r.log.find("warning") != std::string::npos);
    CHECK(data_rows(dir.path() / "benchmark.csv") == 0);
  }

  TEST_CASE("unsupported variants are skipped, not fatal") {
    testing::TempDir dir("skip");
    auto c = quick(dir.path());
    c.levels = {SecurityLevel::L1};
    StubOptions o;
    o.variants = std::set<std::string>{"P-256", "Falcon-512"};
    const auto r = run(c, testing::stub_registry(o));
    CHECK(r.rc == kExitPartial);
    CHECK(data_rows(dir.path() / "benchmark.csv") == 6);
    const auto manifest = testing::read_file((dir.path() / "manifest.txt").string());
    CHECK(manifest.find("skipped.count=12\n") != std::string::npos);
  }

  TEST_CASE("skip flags and model subset") {
    testing::TempDir dir("flags");
    auto c = quick(dir.path() / "a");
    c.skip_simulation = true;
    CHECK(run(c, testing::stub_registry()).rc == kExitOk);
    CHECK(fs::exists(c.output_dir / "benchmark.csv"));
    CHECK_FALSE(fs::exists(c.output_dir / "simulation.csv"));

    c = quick(dir.path() / "b");
    c.models = {ChainModel::Ethereum};
    c.families = std::set<std::string>{"ML-DSA"};
    c.dump_raw_samples = true;
    CHECK(run(c, testing::stub_registry()).rc == kExitOk);
    CHECK(data_rows(c.output_dir / "simulation.csv") == 1);
    CHECK(fs::exists(c.output_dir / "simulation_ethereum_lower.svg"));
    CHECK_FALSE(fs::exists(c.output_dir / "simulation_bitcoin_lower.svg"));
    CHECK(fs::exists(c.output_dir / "raw" / "ML-DSA-44_verify.txt"));

    c = quick(dir.path() / "c");
    c.skip_benchmark = true;
    CHECK(run(c, testing::stub_registry()).rc == kExitOk);
    CHECK_FALSE(fs::exists(c.output_dir / "benchmark.csv"));
  }

  TEST_CASE("replayed benchmarks give identical simulation artifacts") {
    testing::TempDir dir("replay");
    const auto golden = dir.path() / "bench.csv";
    std::vector<BenchmarkRecord> recs;
    for (auto [machine, variant] : {std::pair{"Laptop ARM", "P-256"}, std::pair{"Desktop", "P-256"},
                                    std::pair{"Desktop", "P-384"}, std::pair{"Laptop ARM", "ML-DSA-44"}}) {
      BenchmarkRecord r;
      r.descriptor = *find_variant(variant);
      r.environment.cpu_model = machine;
      r.keypair_stat = {0.02, 0.001, 10000};
      r.sign_stat = {0.04, 0.002, 10000};
      r.verify_stat = {variant == std::string("ML-DSA-44") ? 0.0529 : 0.0788, 0.0029, 10000};
      recs.push_back(r);
    }
    write_csv(synthesize(recs, {}), golden);

    auto c = quick(dir.path() / "one");
    c.levels = {SecurityLevel::L1, SecurityLevel::L2, SecurityLevel::L3};
    c.replay_benchmarks = golden;
    CHECK(run(c, testing::stub_registry()).rc == kExitOk);
    auto c2 = c;
    c2.output_dir = dir.path() / "two";
    CHECK(run(c2, testing::stub_registry()).rc == kExitOk);

    // Four machine/variant pairs, two models.
    CHECK(data_rows(c.output_dir / "simulation.csv") == 8);
    for (auto f : {"simulation.csv", "simulation_bitcoin_lower.svg", "simulation_ethereum_level3.svg",
                   "benchmark.csv", "benchmark_lower.svg"}) {
      CAPTURE(f);
      const auto a = testing::read_file((c.output_dir / f).string());
      CHECK_FALSE(a.empty());
      CHECK(a == testing::read_file((c2.output_dir / f).string()));
    }
  }

  TEST_CASE("unreadable replay input is fatal") {
    testing::TempDir dir("bad");
    auto c = quick(dir.path());
    c.replay_benchmarks = dir.path() / "nope.csv";
    const auto r = run(c, testing::stub_registry());
    CHECK(r.rc == kExitFatal);
    CHECK(r.err.find("IoFailure") != std::string::npos);
  }
}
