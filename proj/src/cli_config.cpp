#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "pqcbench/cli.hpp"
#include "pqcbench/errors.hpp"

namespace pqcb {

namespace {

[[noreturn]] void usage_error(std::string_view flag, const std::string& what) {
  throw Error(ErrorCode::Usage, std::string(flag) + ": " + what);
}

template <typename T>
T parse_unsigned(std::string_view flag, std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    usage_error(flag, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(sep, pos);
    if (next == std::string_view::npos) next = text.size();
    if (next > pos) out.emplace_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

bool looks_like_flag(std::string_view s) { return s.size() > 1 && s.front() == '-'; }

SecurityLevel parse_level(std::string_view flag, std::string_view text) {
  const auto v = parse_unsigned<unsigned>(flag, text);
  auto level = level_from_int(static_cast<int>(std::min(v, 99u)));
  if (!level) usage_error(flag, "security level must be 1..5, got '" + std::string(text) + "'");
  return *level;
}

ChainModel parse_model(std::string_view flag, std::string_view text) {
  const auto v = parse_unsigned<unsigned>(flag, text);
  if (v != 1 && v != 2) {
    usage_error(flag, "model must be 1 (Bitcoin) or 2 (Ethereum), got '" + std::string(text) + "'");
  }
  return static_cast<ChainModel>(v);
}

void add_families(std::string_view flag, std::string_view text, std::set<std::string>& out) {
  const auto known = catalog_families();
  for (auto& name : split(text, ',')) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      usage_error(flag, "unknown family '" + name + "'");
    }
    out.insert(std::move(name));
  }
}

std::string join_levels(const LevelSet& levels) {
  std::string out;
  for (auto l : levels) {
    if (!out.empty()) out += ',';
    out += std::to_string(to_int(l));
  }
  return out;
}

std::string join_models(const std::set<ChainModel>& models) {
  std::string out;
  for (auto m : models) {
    if (!out.empty()) out += ',';
    out += std::to_string(static_cast<int>(m));
  }
  return out;
}

}  // namespace

CliConfig parse_args(std::span<const std::string> args) {
  CliConfig cfg;
  bool levels_given = false;
  bool models_given = false;

  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string flag = args[i];
    std::optional<std::string> inline_value;
    if (auto eq = flag.find('='); flag.rfind("--", 0) == 0 && eq != std::string::npos) {
      inline_value = flag.substr(eq + 1);
      flag.resize(eq);
    }

    auto single = [&]() -> std::string {
      if (inline_value) return *inline_value;
      if (i + 1 >= args.size() || looks_like_flag(args[i + 1])) usage_error(flag, "missing value");
      return args[++i];
    };
    auto multi = [&]() -> std::vector<std::string> {
      std::vector<std::string> values;
      if (inline_value) {
        values.push_back(*inline_value);
      } else {
        while (i + 1 < args.size() && !looks_like_flag(args[i + 1])) values.push_back(args[++i]);
      }
      if (values.empty()) usage_error(flag, "missing value");
      return values;
    };
    auto no_value = [&] {
      if (inline_value) usage_error(flag, "takes no value");
    };

    if (flag == "--runs" || flag == "-r") {
      cfg.runs = parse_unsigned<std::size_t>(flag, single());
      if (cfg.runs < 1) usage_error(flag, "must be >= 1");
    } else if (flag == "--warm-up" || flag == "-wp") {
      cfg.warmup = parse_unsigned<std::size_t>(flag, single());
    } else if (flag == "--levels" || flag == "-l") {
      if (!levels_given) cfg.levels.clear();
      levels_given = true;
      for (const auto& v : multi()) {
        for (const auto& part : split(v, ',')) cfg.levels.insert(parse_level(flag, part));
      }
    } else if (flag == "--runs-simulator") {
      cfg.runs_simulator = parse_unsigned<std::size_t>(flag, single());
      if (cfg.runs_simulator < 1) usage_error(flag, "must be >= 1");
    } else if (flag == "--model") {
      if (!models_given) cfg.models.clear();
      models_given = true;
      for (const auto& v : multi()) {
        for (const auto& part : split(v, ',')) cfg.models.insert(parse_model(flag, part));
      }
    } else if (flag == "--seed") {
      cfg.seed = parse_unsigned<std::uint64_t>(flag, single());
    } else if (flag == "--output-dir") {
      cfg.output_dir = single();
    } else if (flag == "--families") {
      std::set<std::string> fams = cfg.families.value_or(std::set<std::string>{});
      for (const auto& v : multi()) add_families(flag, v, fams);
      if (fams.empty()) usage_error(flag, "missing value");
      cfg.families = std::move(fams);
    } else if (flag == "--message-len") {
      cfg.message_len = parse_unsigned<std::size_t>(flag, single());
      if (cfg.message_len < 1) usage_error(flag, "must be >= 1");
    } else if (flag == "--skip-benchmark") {
      no_value();
      cfg.skip_benchmark = true;
    } else if (flag == "--skip-simulation") {
      no_value();
      cfg.skip_simulation = true;
    } else if (flag == "--replay-benchmarks") {
      cfg.replay_benchmarks = std::filesystem::path(single());
    } else if (flag == "--dump-raw") {
      no_value();
      cfg.dump_raw_samples = true;
    } else if (flag == "--help" || flag == "-h") {
      cfg.help = true;
    } else {
      usage_error(flag, "unknown flag");
    }
  }
  return cfg;
}

std::string usage(std::string_view program) {
  std::string out = "usage: " + std::string(program) + " [options]\n\n";
  out +=
      "  -r,  --runs N              measured executions per operation (default 10000)\n"
      "  -wp, --warm-up N           discarded warm-up executions (default 1000)\n"
      "  -l,  --levels L...         NIST security levels 1..5, repeatable (default 1 2 3 5)\n"
      "       --runs-simulator N    simulation runs per variant and model (default 1000)\n"
      "       --model M...          1 = Bitcoin, 2 = Ethereum (default both)\n"
      "       --seed N              seed for messages and simulation (default 42)\n"
      "       --output-dir DIR      where CSVs, charts and the manifest go (default results)\n"
      "       --families F,...      restrict to these algorithm families\n"
      "       --message-len N       bytes signed per iteration (default 32)\n"
      "       --skip-benchmark      do not run the benchmark stage\n"
      "       --skip-simulation     do not run the simulation stage\n"
      "       --replay-benchmarks F use a previous benchmark CSV instead of measuring\n"
      "       --dump-raw            also write raw per-run durations\n"
      "  -h,  --help                show this help\n\n";
  out += "Environment: " + std::string(kProviderEnvVar) +
         "=<key> routes every variant to one provider (openssl, liboqs, stub).\n"
         "Exit status: 0 success, 1 fatal error, 2 partial (variants skipped or none selected).\n";
  return out;
}

std::vector<std::string> config_to_lines(const CliConfig& c) {
  std::vector<std::string> out;
  out.push_back("config.runs=" + std::to_string(c.runs));
  out.push_back("config.warmup=" + std::to_string(c.warmup));
  out.push_back("config.levels=" + join_levels(c.levels));
  out.push_back("config.runs_simulator=" + std::to_string(c.runs_simulator));
  out.push_back("config.models=" + join_models(c.models));
  out.push_back("config.seed=" + std::to_string(c.seed));
  out.push_back("config.output_dir=" + c.output_dir.string());
  std::string fams = "*";
  if (c.families) {
    fams.clear();
    for (const auto& f : *c.families) {
      if (!fams.empty()) fams += ',';
      fams += f;
    }
  }
  out.push_back("config.families=" + fams);
  out.push_back("config.message_len=" + std::to_string(c.message_len));
  out.push_back(std::string("config.skip_benchmark=") + (c.skip_benchmark ? "true" : "false"));
  out.push_back(std::string("config.skip_simulation=") + (c.skip_simulation ? "true" : "false"));
  out.push_back("config.replay_benchmarks=" +
                (c.replay_benchmarks ? c.replay_benchmarks->string() : std::string()));
  out.push_back(std::string("config.dump_raw_samples=") + (c.dump_raw_samples ? "true" : "false"));
  return out;
}

CliConfig config_from_text(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.rfind("config.", 0) != 0) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) continue;
    kv.emplace(std::string(line.substr(7, eq - 7)), std::string(line.substr(eq + 1)));
  }

  auto get = [&](std::string_view key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorCode::Parse, "manifest lacks config." + std::string(key));
    return it->second;
  };
  auto boolean = [&](std::string_view key) {
    const auto& v = get(key);
    if (v == "true") return true;
    if (v == "false") return false;
    throw Error(ErrorCode::Parse, "config." + std::string(key) + " is not a boolean");
  };

  try {
    CliConfig c;
    c.runs = parse_unsigned<std::size_t>("runs", get("runs"));
    c.warmup = parse_unsigned<std::size_t>("warmup", get("warmup"));
    c.levels.clear();
    for (const auto& v : split(get("levels"), ',')) c.levels.insert(parse_level("levels", v));
    c.runs_simulator = parse_unsigned<std::size_t>("runs_simulator", get("runs_simulator"));
    c.models.clear();
    for (const auto& v : split(get("models"), ',')) c.models.insert(parse_model("models", v));
    c.seed = parse_unsigned<std::uint64_t>("seed", get("seed"));
    c.output_dir = get("output_dir");
    if (const auto& f = get("families"); f != "*") {
      c.families = std::set<std::string>{};
      for (auto& name : split(f, ',')) c.families->insert(std::move(name));
    }
    c.message_len = parse_unsigned<std::size_t>("message_len", get("message_len"));
    c.skip_benchmark = boolean("skip_benchmark");
    c.skip_simulation = boolean("skip_simulation");
    if (const auto& r = get("replay_benchmarks"); !r.empty()) c.replay_benchmarks = r;
    c.dump_raw_samples = boolean("dump_raw_samples");
    return c;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, std::string("manifest: ") + e.what());
  }
}

}  // namespace pqcb
