#include <cstdlib>
#include <cstring>
#include <iostream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "pqcbench/bench.hpp"
#include "pqcbench/chain_sim.hpp"
#include "pqcbench/cli.hpp"
#include "pqcbench/errors.hpp"
#include "pqcbench/pqcbench.h"
#include "pqcbench/registry.hpp"
#include "pqcbench/stats.hpp"

struct pqcb_scheme {
  pqcb::SchemeInstance instance;
};

struct pqcb_cli {
  pqcb::CliConfig config;
};

namespace {

thread_local std::string g_last_error;

pqcb_status status_of(pqcb::ErrorCode code) {
  using pqcb::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return PQCB_ERR_INVALID_ARGUMENT;
    case ErrorCode::Usage: return PQCB_ERR_USAGE;
    case ErrorCode::UnsupportedVariant: return PQCB_ERR_UNSUPPORTED_VARIANT;
    case ErrorCode::BackendFailure: return PQCB_ERR_BACKEND_FAILURE;
    case ErrorCode::CorrectnessViolation: return PQCB_ERR_CORRECTNESS_VIOLATION;
    case ErrorCode::EmptySamples: return PQCB_ERR_EMPTY_SAMPLES;
    case ErrorCode::UnknownModel: return PQCB_ERR_UNKNOWN_MODEL;
    case ErrorCode::Io: return PQCB_ERR_IO;
    case ErrorCode::ClockUnavailable: return PQCB_ERR_CLOCK_UNAVAILABLE;
    case ErrorCode::EmptySelection: return PQCB_ERR_EMPTY_SELECTION;
    case ErrorCode::DuplicateRow: return PQCB_ERR_DUPLICATE_ROW;
    case ErrorCode::Parse: return PQCB_ERR_PARSE;
  }
  return PQCB_ERR_INTERNAL;
}

pqcb_status fail(pqcb_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
pqcb_status guarded(F&& body) noexcept {
  try {
    return body();
  } catch (const pqcb::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PQCB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PQCB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PQCB_ERR_INTERNAL, "unknown exception");
  }
}

const pqcb::ProviderRegistry& registry() {
  static const pqcb::ProviderRegistry r = pqcb::ProviderRegistry::with_default_providers();
  return r;
}

void fill_info(const pqcb::VariantDescriptor& d, pqcb_variant_info* out) {
  out->family = d.family.c_str();
  out->variant = d.variant.c_str();
  out->level = pqcb::to_int(d.level);
  out->is_pqc = d.is_pqc ? 1 : 0;
  out->provider_key = d.provider_key.c_str();
}

void to_buffer(const pqcb::Bytes& bytes, pqcb_buffer* out) {
  out->data = nullptr;
  out->size = 0;
  if (bytes.empty()) return;
  auto* p = static_cast<std::uint8_t*>(std::malloc(bytes.size()));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, bytes.data(), bytes.size());
  out->data = p;
  out->size = bytes.size();
}

pqcb::ByteView view(const std::uint8_t* data, std::size_t len) {
  if (data == nullptr && len != 0) {
    throw pqcb::Error(pqcb::ErrorCode::InvalidArgument, "null pointer with non-zero length");
  }
  return {data, len};
}

pqcb_stat to_c(const pqcb::StatSummary& s) { return {s.mean_ms, s.std_ms, s.n}; }

pqcb::SimulationConfig from_c(const pqcb_sim_config& c) {
  pqcb::SimulationConfig s;
  s.model = pqcb::chain_model_from_int(c.model);
  s.tx_per_block_mean = c.tx_per_block_mean;
  s.blocks_per_run = c.blocks_per_run;
  s.block_interval_s = c.block_interval_s;
  s.runs = c.runs;
  s.seed = c.seed;
  switch (c.verify_sampling) {
    case PQCB_SAMPLING_MEAN_ONLY: s.verify_sampling = pqcb::VerifySampling::MeanOnly; break;
    case PQCB_SAMPLING_NORMAL_PER_BLOCK: s.verify_sampling = pqcb::VerifySampling::NormalPerBlock; break;
    default:
      throw pqcb::Error(pqcb::ErrorCode::InvalidArgument,
                        "unknown verify_sampling " + std::to_string(c.verify_sampling));
  }
  return s;
}

}  // namespace

extern "C" {

const char* pqcb_version(void) { return "0.1.0"; }

const char* pqcb_status_name(pqcb_status status) {
  switch (status) {
    case PQCB_OK: return "Ok";
    case PQCB_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case PQCB_ERR_USAGE: return "UsageError";
    case PQCB_ERR_UNSUPPORTED_VARIANT: return "UnsupportedVariant";
    case PQCB_ERR_BACKEND_FAILURE: return "BackendFailure";
    case PQCB_ERR_CORRECTNESS_VIOLATION: return "CorrectnessViolation";
    case PQCB_ERR_EMPTY_SAMPLES: return "EmptySamples";
    case PQCB_ERR_UNKNOWN_MODEL: return "UnknownModel";
    case PQCB_ERR_IO: return "IoFailure";
    case PQCB_ERR_CLOCK_UNAVAILABLE: return "ClockUnavailable";
    case PQCB_ERR_EMPTY_SELECTION: return "EmptySelection";
    case PQCB_ERR_DUPLICATE_ROW: return "DuplicateRow";
    case PQCB_ERR_PARSE: return "ParseError";
    case PQCB_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* pqcb_last_error(void) { return g_last_error.c_str(); }

size_t pqcb_catalog_size(void) { return pqcb::catalog().size(); }

pqcb_status pqcb_catalog_get(size_t index, pqcb_variant_info* out) {
  return guarded([&] {
    if (out == nullptr) return fail(PQCB_ERR_INVALID_ARGUMENT, "out is null");
    const auto entries = pqcb::catalog();
    if (index >= entries.size()) {
      return fail(PQCB_ERR_INVALID_ARGUMENT, "catalog index " + std::to_string(index) + " out of range");
    }
    fill_info(entries[index], out);
    return PQCB_OK;
  });
}

pqcb_status pqcb_catalog_find(const char* variant, pqcb_variant_info* out) {
  return guarded([&] {
    if (variant == nullptr || out == nullptr) return fail(PQCB_ERR_INVALID_ARGUMENT, "null argument");
    const auto* d = pqcb::find_variant(variant);
    if (d == nullptr) {
      return fail(PQCB_ERR_UNSUPPORTED_VARIANT, std::string("unknown variant '") + variant + "'");
    }
    fill_info(*d, out);
    return PQCB_OK;
  });
}

void pqcb_buffer_free(pqcb_buffer* buffer) {
  if (buffer == nullptr) return;
  std::free(buffer->data);
  buffer->data = nullptr;
  buffer->size = 0;
}

pqcb_status pqcb_scheme_open(const char* variant, pqcb_scheme** out) {
  return guarded([&] {
    if (variant == nullptr || out == nullptr) return fail(PQCB_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    const auto* d = pqcb::find_variant(variant);
    if (d == nullptr) {
      return fail(PQCB_ERR_UNSUPPORTED_VARIANT, std::string("unknown variant '") + variant + "'");
    }
    *out = new pqcb_scheme{registry().instantiate(*d)};
    return PQCB_OK;
  });
}

void pqcb_scheme_close(pqcb_scheme* scheme) { delete scheme; }

pqcb_status pqcb_scheme_info(const pqcb_scheme* scheme, pqcb_variant_info* out) {
  return guarded([&] {
    if (scheme == nullptr || out == nullptr) return fail(PQCB_ERR_INVALID_ARGUMENT, "null argument");
    fill_info(scheme->instance.descriptor(), out);
    return PQCB_OK;
  });
}

pqcb_status pqcb_scheme_keypair(const pqcb_scheme* scheme, pqcb_buffer* public_key,
                                pqcb_buffer* secret_key) {
  return guarded([&] {
    if (scheme == nullptr || public_key == nullptr || secret_key == nullptr) {
      return fail(PQCB_ERR_INVALID_ARGUMENT, "null argument");
    }
    const auto kp = scheme->instance.keypair();
    to_buffer(kp.public_key, public_key);
    try {
      to_buffer(kp.secret_key, secret_key);
    } catch (...) {
      pqcb_buffer_free(public_key);
      throw;
    }
    return PQCB_OK;
  });
}

pqcb_status pqcb_scheme_sign(const pqcb_scheme* scheme, const uint8_t* secret_key,
                             size_t secret_key_len, const uint8_t* message, size_t message_len,
                             pqcb_buffer* signature) {
  return guarded([&] {
    if (scheme == nullptr || signature == nullptr) return fail(PQCB_ERR_INVALID_ARGUMENT, "null argument");
    const auto sig =
        scheme->instance.sign(view(secret_key, secret_key_len), view(message, message_len));
    to_buffer(sig.bytes, signature);
    return PQCB_OK;
  });
}

pqcb_status pqcb_scheme_verify(const pqcb_scheme* scheme, const uint8_t* public_key,
                               size_t public_key_len, const uint8_t* message, size_t message_len,
                               const uint8_t* signature, size_t signature_len, int* valid) {
  return guarded([&] {
    if (scheme == nullptr || valid == nullptr) return fail(PQCB_ERR_INVALID_ARGUMENT, "null argument");
    *valid = scheme->instance.verify(view(public_key, public_key_len), view(message, message_len),
                                     view(signature, signature_len))
                 ? 1
                 : 0;
    return PQCB_OK;
  });
}

pqcb_status pqcb_summarize(const double* samples, size_t count, pqcb_stat* out) {
  return guarded([&] {
    if (out == nullptr || (samples == nullptr && count != 0)) {
      return fail(PQCB_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = to_c(pqcb::summarize(std::span<const double>(samples, count)));
    return PQCB_OK;
  });
}

pqcb_status pqcb_timer_resolution_ns(double* out) {
  return guarded([&] {
    if (out == nullptr) return fail(PQCB_ERR_INVALID_ARGUMENT, "out is null");
    *out = pqcb::measure_timer_resolution();
    return PQCB_OK;
  });
}

pqcb_status pqcb_benchmark(const pqcb_scheme* scheme, const pqcb_run_plan* plan,
                           pqcb_benchmark_result* out) {
  return guarded([&] {
    if (scheme == nullptr || plan == nullptr || out == nullptr) {
      return fail(PQCB_ERR_INVALID_ARGUMENT, "null argument");
    }
    const pqcb::RunPlan p{plan->warmup, plan->runs, plan->message_len};
    pqcb::BenchmarkOptions options;
    options.seed = plan->seed;
    const auto rec = pqcb::benchmark_variant(scheme->instance, p, pqcb::EnvironmentInfo{}, options);
    out->keypair = to_c(rec.keypair_stat);
    out->sign = to_c(rec.sign_stat);
    out->verify = to_c(rec.verify_stat);
    return PQCB_OK;
  });
}

pqcb_status pqcb_sim_default_config(int model, pqcb_sim_config* out) {
  return guarded([&] {
    if (out == nullptr) return fail(PQCB_ERR_INVALID_ARGUMENT, "out is null");
    const auto c = pqcb::default_config(static_cast<long>(model));
    out->model = static_cast<int>(c.model);
    out->tx_per_block_mean = c.tx_per_block_mean;
    out->blocks_per_run = c.blocks_per_run;
    out->block_interval_s = c.block_interval_s;
    out->runs = c.runs;
    out->seed = c.seed;
    out->verify_sampling = c.verify_sampling == pqcb::VerifySampling::MeanOnly
                               ? PQCB_SAMPLING_MEAN_ONLY
                               : PQCB_SAMPLING_NORMAL_PER_BLOCK;
    return PQCB_OK;
  });
}

pqcb_status pqcb_simulate_batch(const pqcb_sim_config* config, pqcb_stat verify_stat,
                                pqcb_stat* batch, double* per_run_means) {
  return guarded([&] {
    if (config == nullptr || batch == nullptr) return fail(PQCB_ERR_INVALID_ARGUMENT, "null argument");
    const auto result = pqcb::simulate_batch(
        from_c(*config), pqcb::StatSummary{verify_stat.mean_ms, verify_stat.std_ms, verify_stat.n});
    *batch = to_c(result.batch);
    if (per_run_means != nullptr) {
      for (std::size_t i = 0; i < result.per_run.size(); ++i) {
        per_run_means[i] = result.per_run[i].mean_block_verify_ms;
      }
    }
    return PQCB_OK;
  });
}

pqcb_status pqcb_cli_parse(int argc, const char* const* argv, pqcb_cli** out) {
  return guarded([&] {
    if (out == nullptr || argc < 0 || (argv == nullptr && argc > 0)) {
      return fail(PQCB_ERR_INVALID_ARGUMENT, "bad argument vector");
    }
    *out = nullptr;
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i] != nullptr ? argv[i] : "");
    *out = new pqcb_cli{pqcb::parse_args(args)};
    return PQCB_OK;
  });
}

void pqcb_cli_free(pqcb_cli* cli) { delete cli; }

int pqcb_cli_wants_help(const pqcb_cli* cli) { return cli != nullptr && cli->config.help ? 1 : 0; }

const char* pqcb_cli_usage(void) {
  static const std::string text = pqcb::usage();
  return text.c_str();
}

int pqcb_cli_run(const pqcb_cli* cli) {
  if (cli == nullptr) {
    g_last_error = "cli is null";
    return pqcb::kExitFatal;
  }
  try {
    return pqcb::run_pipeline(cli->config, registry(), {std::cout, std::cerr});
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pqcb::kExitFatal;
  }
}

}  // extern "C"
