#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "pqcbench/report.hpp"

namespace testing {

// Rows behind golden/small_dataset.csv, deliberately out of canonical order.
inline pqcb::ReportDataset golden_dataset() {
  using pqcb::ChainModel;
  using pqcb::Operation;
  using pqcb::ReportRow;
  using pqcb::SecurityLevel;
  using pqcb::Stage;
  const std::string arm = "Laptop ARM";
  pqcb::ReportDataset d;
  d.rows = {
      {arm, "ML-DSA", "ML-DSA-44", SecurityLevel::L2, Stage::Simulation, ChainModel::Ethereum, Operation::Verify, 6.9448, 0.1578, 1000},
      {arm, "ML-DSA", "ML-DSA-44", SecurityLevel::L2, Stage::Benchmark, std::nullopt, Operation::Verify, 0.0529, 0.0026, 10000},
      {arm, "ECDSA", "P-256", SecurityLevel::L1, Stage::Benchmark, std::nullopt, Operation::Verify, 0.0788, 0.0029, 10000},
      {"Desktop", "ECDSA", "P-384", SecurityLevel::L3, Stage::Simulation, ChainModel::Bitcoin, Operation::Verify, 687.6015, 11.907, 1000},
      {arm, "ECDSA", "P-256", SecurityLevel::L1, Stage::Benchmark, std::nullopt, Operation::Sign, 0.0441, 0.0021, 10000},
      {"Lab, rack 2", "ECDSA", "P-256", SecurityLevel::L1, Stage::Benchmark, std::nullopt, Operation::Verify, 0.0615, 0.0019, 10000},
      {arm, "ML-DSA", "ML-DSA-44", SecurityLevel::L2, Stage::Benchmark, std::nullopt, Operation::Keypair, 0.049, 0.0041, 10000},
      {arm, "ECDSA", "P-256", SecurityLevel::L1, Stage::Simulation, ChainModel::Bitcoin, Operation::Verify, 136.2845, 2.3648, 1000},
      {"Desktop", "ECDSA", "P-384", SecurityLevel::L3, Stage::Benchmark, std::nullopt, Operation::Verify, 0.3977, 0.011, 10000},
      {arm, "ML-DSA", "ML-DSA-44", SecurityLevel::L2, Stage::Benchmark, std::nullopt, Operation::Sign, 0.2113, 0.1409, 10000},
      {arm, "ECDSA", "P-256", SecurityLevel::L1, Stage::Benchmark, std::nullopt, Operation::Keypair, 0.0198, 0.001, 10000},
  };
  return d;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing
