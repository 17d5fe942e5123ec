#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "pqcbench/pqcbench.h"

namespace {

struct Scheme {
  explicit Scheme(const char* name) { REQUIRE(pqcb_scheme_open(name, &ptr) == PQCB_OK); }
  ~Scheme() { pqcb_scheme_close(ptr); }
  pqcb_scheme* ptr = nullptr;
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(pqcb_version()) == "0.1.0");
  CHECK(std::string(pqcb_status_name(PQCB_ERR_USAGE)) == "UsageError");
  CHECK(std::string(pqcb_status_name(PQCB_OK)) == "Ok");
}

TEST_CASE("catalog access") {
  REQUIRE(pqcb_catalog_size() == 46);
  pqcb_variant_info info{};
  REQUIRE(pqcb_catalog_get(0, &info) == PQCB_OK);
  CHECK(std::string(info.variant) == "P-256");
  CHECK(std::string(info.family) == "ECDSA");
  CHECK(info.level == 1);
  CHECK(info.is_pqc == 0);
  REQUIRE(pqcb_catalog_get(45, &info) == PQCB_OK);
  CHECK(std::string(info.variant) == "Cross-rsdpg-256-fast");
  CHECK(pqcb_catalog_get(46, &info) == PQCB_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(pqcb_last_error()) > 0);
  REQUIRE(pqcb_catalog_find("ML-DSA-44", &info) == PQCB_OK);
  CHECK(info.level == 2);
  CHECK(std::string(info.provider_key) == "liboqs");
  CHECK(pqcb_catalog_find("RSA-2048", &info) == PQCB_ERR_UNSUPPORTED_VARIANT);
  CHECK(pqcb_catalog_get(0, nullptr) == PQCB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sign and verify through handles") {
  for (const char* name : {"P-256", "ML-DSA-44", "Falcon-512"}) {
    CAPTURE(name);
    Scheme s(name);
    pqcb_variant_info info{};
    REQUIRE(pqcb_scheme_info(s.ptr, &info) == PQCB_OK);
    CHECK(std::string(info.variant) == name);

    pqcb_buffer pk{}, sk{}, sig{};
    REQUIRE(pqcb_scheme_keypair(s.ptr, &pk, &sk) == PQCB_OK);
    CHECK(pk.size > 0);
    const std::vector<uint8_t> msg{'b', 'l', 'o', 'c', 'k'};
    REQUIRE(pqcb_scheme_sign(s.ptr, sk.data, sk.size, msg.data(), msg.size(), &sig) == PQCB_OK);
    int valid = -1;
    REQUIRE(pqcb_scheme_verify(s.ptr, pk.data, pk.size, msg.data(), msg.size(), sig.data, sig.size, &valid) ==
            PQCB_OK);
    CHECK(valid == 1);
    sig.data[sig.size / 2] ^= 0x01;
    REQUIRE(pqcb_scheme_verify(s.ptr, pk.data, pk.size, msg.data(), msg.size(), sig.data, sig.size, &valid) ==
            PQCB_OK);
    CHECK(valid == 0);
    REQUIRE(pqcb_scheme_sign(s.ptr, sk.data, sk.size, nullptr, 0, &sig) == PQCB_OK);

    CHECK(pqcb_scheme_sign(s.ptr, nullptr, 4, msg.data(), msg.size(), &sig) == PQCB_ERR_INVALID_ARGUMENT);
    const uint8_t junk[3] = {1, 2, 3};
    CHECK(pqcb_scheme_sign(s.ptr, junk, sizeof junk, msg.data(), msg.size(), &sig) == PQCB_ERR_BACKEND_FAILURE);

    pqcb_buffer_free(&pk);
    pqcb_buffer_free(&sk);
    pqcb_buffer_free(&sig);
    CHECK(pk.data == nullptr);
    pqcb_buffer_free(&pk);
  }
  pqcb_scheme* none = nullptr;
  CHECK(pqcb_scheme_open("nope", &none) == PQCB_ERR_UNSUPPORTED_VARIANT);
  CHECK(none == nullptr);
  pqcb_scheme_close(nullptr);
}

TEST_CASE("summaries and timing") {
  const double xs[] = {1, 2, 3, 4};
  pqcb_stat st{};
  REQUIRE(pqcb_summarize(xs, 4, &st) == PQCB_OK);
  CHECK(st.mean_ms == doctest::Approx(2.5));
  CHECK(st.n == 4);
  CHECK(pqcb_summarize(xs, 0, &st) == PQCB_ERR_EMPTY_SAMPLES);
  double res = 0;
  REQUIRE(pqcb_timer_resolution_ns(&res) == PQCB_OK);
  CHECK(res > 0);

  Scheme s("ML-DSA-44");
  const pqcb_run_plan plan{2, 10, 32, 42};
  pqcb_benchmark_result r{};
  REQUIRE(pqcb_benchmark(s.ptr, &plan, &r) == PQCB_OK);
  CHECK(r.verify.n == 10);
  CHECK(r.sign.mean_ms > 0);
  const pqcb_run_plan bad{0, 0, 32, 42};
  CHECK(pqcb_benchmark(s.ptr, &bad, &r) == PQCB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("simulation") {
  pqcb_sim_config c{};
  REQUIRE(pqcb_sim_default_config(PQCB_MODEL_ETHEREUM, &c) == PQCB_OK);
  CHECK(c.tx_per_block_mean == 131.0);
  CHECK(c.block_interval_s == 13.0);
  CHECK(c.verify_sampling == PQCB_SAMPLING_NORMAL_PER_BLOCK);
  CHECK(pqcb_sim_default_config(3, &c) == PQCB_ERR_UNKNOWN_MODEL);

  REQUIRE(pqcb_sim_default_config(PQCB_MODEL_BITCOIN, &c) == PQCB_OK);
  c.runs = 100;
  c.verify_sampling = PQCB_SAMPLING_MEAN_ONLY;
  std::vector<double> means(c.runs);
  pqcb_stat batch{};
  REQUIRE(pqcb_simulate_batch(&c, pqcb_stat{0.0788, 0.0029, 10000}, &batch, means.data()) == PQCB_OK);
  CHECK(batch.n == 100);
  CHECK(batch.mean_ms == doctest::Approx(136.28).epsilon(0.02));
  CHECK(means[0] > 0);
  c.verify_sampling = 9;
  CHECK(pqcb_simulate_batch(&c, pqcb_stat{1, 0, 1}, &batch, nullptr) == PQCB_ERR_INVALID_ARGUMENT);
  c.verify_sampling = PQCB_SAMPLING_MEAN_ONLY;
  c.model = 5;
  CHECK(pqcb_simulate_batch(&c, pqcb_stat{1, 0, 1}, &batch, nullptr) == PQCB_ERR_UNKNOWN_MODEL);
}

TEST_CASE("command line parsing") {
  const char* ok[] = {"pqcinblock", "-r", "5", "-wp", "1", "-l", "1", "5", "--model", "2"};
  pqcb_cli* cli = nullptr;
  REQUIRE(pqcb_cli_parse(10, ok, &cli) == PQCB_OK);
  CHECK(pqcb_cli_wants_help(cli) == 0);
  pqcb_cli_free(cli);

  const char* help[] = {"pqcinblock", "--help"};
  REQUIRE(pqcb_cli_parse(2, help, &cli) == PQCB_OK);
  CHECK(pqcb_cli_wants_help(cli) == 1);
  pqcb_cli_free(cli);

  const char* bad[] = {"pqcinblock", "--model", "7"};
  cli = nullptr;
  CHECK(pqcb_cli_parse(3, bad, &cli) == PQCB_ERR_USAGE);
  CHECK(cli == nullptr);
  CHECK(std::string(pqcb_last_error()).find("--model") != std::string::npos);
  CHECK(std::string(pqcb_cli_usage()).find("--runs-simulator") != std::string::npos);
  CHECK(pqcb_cli_run(nullptr) == 1);
}
