#include <random>
#include <regex>
#include <set>

#include "doctest.h"
#include "golden_dataset.hpp"
#include "pqcbench/errors.hpp"
#include "pqcbench/report.hpp"
#include "support.hpp"

using namespace pqcb;

namespace {

BenchmarkRecord record_for(std::string_view variant, std::string machine = "m") {
  BenchmarkRecord r;
  r.descriptor = *find_variant(variant);
  r.environment.cpu_model = std::move(machine);
  r.keypair_stat = {0.5, 0.05, 100};
  r.sign_stat = {1.0, 0.1, 100};
  r.verify_stat = {0.25, 0.01, 100};
  return r;
}

SimulationEntry sim_for(std::string_view variant, ChainModel m, std::string machine = "m") {
  SimulationEntry e;
  e.descriptor = *find_variant(variant);
  e.model = m;
  e.machine = std::move(machine);
  e.result.batch = {100.0, 2.0, 1000};
  return e;
}

ReportDataset random_dataset(std::mt19937_64& rng) {
  static const std::vector<std::string> machines{"Laptop ARM", "Desktop", "a,b", "quote \"q\"",
                                                  "x86_64 @ 3.2GHz", ""};
  const auto entries = catalog();
  std::uniform_int_distribution<std::size_t> n_rows(0, 60);
  std::uniform_int_distribution<long> ticks(0, 50'000'000);
  std::set<std::tuple<std::string, std::string, int, int, int>> keys;
  ReportDataset d;
  const std::size_t n = n_rows(rng);
  while (d.rows.size() < n) {
    ReportRow r;
    const auto& v = entries[rng() % entries.size()];
    r.machine = machines[rng() % machines.size()];
    r.family = v.family;
    r.variant = v.variant;
    r.level = v.level;
    r.stage = rng() % 2 ? Stage::Benchmark : Stage::Simulation;
    if (r.stage == Stage::Simulation) {
      r.model = rng() % 2 ? ChainModel::Bitcoin : ChainModel::Ethereum;
      r.operation = Operation::Verify;
    } else {
      r.operation = static_cast<Operation>(rng() % 3);
    }
    // Four-decimal values survive the text form exactly.
    r.mean_ms = static_cast<double>(ticks(rng)) / 10000.0;
    r.std_ms = static_cast<double>(ticks(rng) % 100000) / 10000.0;
    r.n = 1 + rng() % 20000;
    if (!keys.emplace(r.machine, r.variant, static_cast<int>(r.stage), r.model ? static_cast<int>(*r.model) : 0,
                      static_cast<int>(r.operation))
             .second) {
      continue;
    }
    d.rows.push_back(r);
  }
  return d;
}

double bar_height(const std::string& svg, const std::string& title_prefix) {
  const std::regex re("<rect class=\"bar\"[^>]*height=\"([0-9.]+)\"[^>]*><title>" + title_prefix);
  std::smatch m;
  if (!std::regex_search(svg, m, re)) return -1.0;
  return std::stod(m[1]);
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("synthesize row counts") {
    const std::vector<BenchmarkRecord> one{record_for("P-256")};
    CHECK(synthesize(one, {}).rows.size() == 3);
    const std::vector<SimulationEntry> sim{sim_for("P-256", ChainModel::Bitcoin)};
    CHECK(synthesize({}, sim).rows.size() == 1);

    std::vector<BenchmarkRecord> all;
    std::vector<SimulationEntry> sims;
    for (const auto& d : catalog()) {
      all.push_back(record_for(d.variant));
      sims.push_back(sim_for(d.variant, ChainModel::Bitcoin));
      sims.push_back(sim_for(d.variant, ChainModel::Ethereum));
    }
    const auto full = synthesize(all, sims);
    CHECK(full.rows.size() == 230);
    CHECK_NOTHROW(full.validate());

    const auto row = synthesize(one, {}).rows;
    const auto verify = std::find_if(row.begin(), row.end(),
                                     [](const ReportRow& r) { return r.operation == Operation::Verify; });
    REQUIRE(verify != row.end());
    CHECK(verify->mean_ms == 0.25);
    CHECK(verify->n == 100);
    CHECK_FALSE(verify->model.has_value());
  }

  TEST_CASE("duplicate identifying tuples are rejected") {
    const std::vector<BenchmarkRecord> twice{record_for("P-256"), record_for("P-256")};
    try {
      (void)synthesize(twice, {});
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DuplicateRow);
    }
    const std::vector<BenchmarkRecord> two_machines{record_for("P-256", "a"), record_for("P-256", "b")};
    CHECK(synthesize(two_machines, {}).rows.size() == 6);
  }

  TEST_CASE("malformed rows fail validation") {
    ReportDataset d;
    d.rows.push_back({"m", "ECDSA", "P-256", SecurityLevel::L1, Stage::Simulation, std::nullopt,
                      Operation::Verify, 1, 0, 1});
    CHECK_THROWS_AS(d.validate(), Error);
    d.rows.back().model = ChainModel::Bitcoin;
    d.rows.back().operation = Operation::Sign;
    CHECK_THROWS_AS(d.validate(), Error);
  }

  TEST_CASE("empty dataset is the header alone") {
    CHECK(format_csv({}) == std::string(kCsvHeader) + "\n");
    CHECK(parse_csv(format_csv({})).rows.empty());
  }

  TEST_CASE("golden file, byte for byte") {
    const std::string golden = testing::read_file(std::string(PQCB_GOLDEN_DIR) + "/small_dataset.csv");
    REQUIRE_FALSE(golden.empty());
    const std::string text = format_csv(testing::golden_dataset());
    CHECK(text == golden);
    CHECK(text.find("Laptop ARM,ECDSA,P-256,1,Benchmark,,verify,0.0788,0.0029,10000\n") != std::string::npos);

    const auto parsed = parse_csv(golden);
    CHECK(parsed.rows == sorted_rows(testing::golden_dataset()));
  }

  TEST_CASE("write then parse is the identity") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
      const auto d = random_dataset(rng);
      const auto back = parse_csv(format_csv(d, std::vector<std::string>{"seed=42", "note, with comma"}));
      CHECK(back.rows == sorted_rows(d));
      CHECK(format_csv(back) == format_csv(d));
    }
  }

  TEST_CASE("file round trip") {
    testing::TempDir dir("csv");
    const auto path = dir.path() / "r.csv";
    const auto d = testing::golden_dataset();
    const std::vector<std::string> comments{"hello"};
    CHECK(write_csv(d, path, comments) == format_csv(d, comments).size());
    CHECK(testing::read_file(path.string()).rfind("# hello\n", 0) == 0);
    CHECK(read_csv(path).rows == sorted_rows(d));
    CHECK_THROWS_AS((void)read_csv(dir.path() / "missing.csv"), Error);
  }

  TEST_CASE("parse errors") {
    auto code_of = [](std::string_view text) {
      try {
        (void)parse_csv(text);
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::InvalidArgument;
    };
    const std::string h = std::string(kCsvHeader) + "\n";
    CHECK(code_of("") == ErrorCode::Parse);
    CHECK(code_of(h + "a,b\n") == ErrorCode::Parse);
    CHECK(code_of(h + "m,ECDSA,P-256,9,Benchmark,,verify,1,1,1\n") == ErrorCode::Parse);
    CHECK(code_of(h + "m,ECDSA,P-256,1,Bench,,verify,1,1,1\n") == ErrorCode::Parse);
    CHECK(code_of(h + "m,ECDSA,P-256,1,Benchmark,,verify,x,1,1\n") == ErrorCode::Parse);
    CHECK(code_of(h + "\"m,ECDSA,P-256,1,Benchmark,,verify,1,1,1\n") == ErrorCode::Parse);
    const std::string row = "m,ECDSA,P-256,1,Benchmark,,verify,1.0000,0.0000,1\n";
    CHECK(code_of(h + row + row) == ErrorCode::DuplicateRow);
  }

  TEST_CASE("canonical order puts benchmark rows first") {
    const auto rows = sorted_rows(testing::golden_dataset());
    bool seen_sim = false;
    for (const auto& r : rows) {
      if (r.stage == Stage::Simulation) seen_sim = true;
      CHECK_FALSE((seen_sim && r.stage == Stage::Benchmark));
    }
  }

  TEST_CASE("chart: one label per variant, deterministic") {
    std::vector<BenchmarkRecord> recs;
    for (const auto& d : filter_by_levels(catalog(), {SecurityLevel::L3})) recs.push_back(record_for(d.variant));
    const auto ds = synthesize(recs, {});
    ChartSpec spec;
    spec.title = "Benchmark - Level 3";
    spec.level_group = LevelGroup::L3;
    const auto svg = render_bar_chart_svg(ds, spec);
    CHECK(count(svg, "class=\"variant-label\"") == 14);
    CHECK(count(svg, "class=\"bar\"") == 42);
    CHECK(count(svg, "class=\"error-bar\"") == 42);
    CHECK(svg.find("Lower values indicate better results") != std::string::npos);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg == render_bar_chart_svg(ds, spec));

    testing::TempDir dir("svg");
    CHECK(render_bar_chart(ds, spec, dir.path() / "c.svg") == svg.size());
  }

  TEST_CASE("chart: lower level group spans levels 1 and 2") {
    std::vector<BenchmarkRecord> recs{record_for("P-256"), record_for("ML-DSA-44"), record_for("P-384")};
    ChartSpec spec;
    spec.series = {Operation::Verify};
    const auto svg = render_bar_chart_svg(synthesize(recs, {}), spec);
    CHECK(count(svg, "class=\"variant-label\"") == 2);
    CHECK(count(svg, "class=\"bar\"") == 2);
  }

  TEST_CASE("chart: taller bar for the slower scheme") {
    const auto ds = testing::golden_dataset();
    ChartSpec spec;
    spec.level_group = LevelGroup::Lower;
    spec.machine = "Laptop ARM";
    spec.series = {Operation::Verify};
    const auto svg = render_bar_chart_svg(ds, spec);
    const double ecdsa = bar_height(svg, "P-256 verify");
    const double mldsa = bar_height(svg, "ML-DSA-44 verify");
    REQUIRE(ecdsa > 0.0);
    REQUIRE(mldsa > 0.0);
    CHECK(mldsa < ecdsa);
  }

  TEST_CASE("chart: several machines tag their labels") {
    ChartSpec spec;
    spec.series = {Operation::Verify};
    const auto svg = render_bar_chart_svg(testing::golden_dataset(), spec);
    CHECK(svg.find("P-256 (Lab, rack 2)") != std::string::npos);
    CHECK(svg.find("P-256 (Laptop ARM)") != std::string::npos);
  }

  TEST_CASE("chart: empty selection") {
    ChartSpec spec;
    spec.level_group = LevelGroup::L5;
    try {
      (void)render_bar_chart_svg(testing::golden_dataset(), spec);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptySelection);
    }
  }

  TEST_CASE("chart: wide ranges switch to a log axis") {
    std::vector<ReportRow> rows(2);
    rows[0].mean_ms = 0.01;
    rows[1].mean_ms = 0.5;
    CHECK_FALSE(needs_log_scale(rows));
    rows[1].mean_ms = 500.0;
    CHECK(needs_log_scale(rows));

    auto slow = record_for("SPHINCS+-SHA2-128s-simple");
    slow.sign_stat = {300.0, 5.0, 100};
    const std::vector<BenchmarkRecord> recs{slow, record_for("P-256")};
    const auto svg = render_bar_chart_svg(synthesize(recs, {}), ChartSpec{});
    CHECK(svg.find("Time (ms, log scale)") != std::string::npos);
  }

  TEST_CASE("chart: text is escaped") {
    ChartSpec spec;
    spec.title = "A & <B>";
    spec.series = {Operation::Verify};
    const auto svg = render_bar_chart_svg(testing::golden_dataset(), spec);
    CHECK(svg.find("A &amp; &lt;B&gt;") != std::string::npos);
  }

  TEST_CASE("level groups") {
    CHECK(level_group(SecurityLevel::L1) == LevelGroup::Lower);
    CHECK(level_group(SecurityLevel::L2) == LevelGroup::Lower);
    CHECK(level_group(SecurityLevel::L3) == LevelGroup::L3);
    CHECK(level_group(SecurityLevel::L5) == LevelGroup::L5);
    CHECK_FALSE(level_group(SecurityLevel::L4).has_value());
    CHECK(label(LevelGroup::Lower) == "Lower Level (1 or 2)");
  }
}
