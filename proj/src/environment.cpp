#include <sys/utsname.h>
#include <unistd.h>

#include <fstream>
#include <string>

#include "pqcbench/bench.hpp"

namespace pqcb {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\"");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\"\r\n");
  return s.substr(first, last - first + 1);
}

// Value of the first "key<sep>value" line in a file whose key matches.
std::string lookup(const char* path, std::string_view key, char sep) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find(sep);
    if (pos == std::string::npos) continue;
    if (trim(line.substr(0, pos)) == key) return trim(line.substr(pos + 1));
  }
  return {};
}

std::string cpu_model() {
  for (const char* key : {"model name", "Hardware", "Processor", "cpu model"}) {
    auto v = lookup("/proc/cpuinfo", key, ':');
    if (!v.empty()) return v;
  }
  return "unknown";
}

std::uint64_t memory_bytes() {
  auto v = lookup("/proc/meminfo", "MemTotal", ':');
  if (!v.empty()) {
    try {
      return std::stoull(v) * 1024ull;
    } catch (const std::exception&) {
    }
  }
  const long pages = sysconf(_SC_PHYS_PAGES);
  const long page_size = sysconf(_SC_PAGE_SIZE);
  if (pages > 0 && page_size > 0) {
    return static_cast<std::uint64_t>(pages) * static_cast<std::uint64_t>(page_size);
  }
  return 0;
}

std::string os_descriptor() {
  std::string distro = lookup("/etc/os-release", "PRETTY_NAME", '=');
  utsname u{};
  std::string kernel;
  if (uname(&u) == 0) kernel = std::string(u.sysname) + " Kernel " + u.release;
  if (distro.empty() && kernel.empty()) return "unknown";
  if (distro.empty()) return kernel;
  if (kernel.empty()) return distro;
  return distro + " " + kernel;
}

}  // namespace

EnvironmentInfo probe_environment() {
  EnvironmentInfo info;
  info.cpu_model = cpu_model();
  info.memory_bytes = memory_bytes();
  info.os_descriptor = os_descriptor();
  info.timer_resolution_ns = measure_timer_resolution();
  return info;
}

}  // namespace pqcb
