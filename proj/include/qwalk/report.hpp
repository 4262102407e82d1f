#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include <json.hpp>

namespace qwalk {

using nlohmann::json;

class Stopwatch {
public:
  Stopwatch() : start_(clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_;
};

// One computed moment (or estimate) plus enough context to rerun it.
struct MomentReport {
  std::string method;
  json params = json::object();  // p plus method-specific knobs (r, R, samples, model)
  double value = 0.0;
  double uncertainty = 0.0;  // 0 for exact methods
  uint64_t seed = 0;
  double time_ms = 0.0;

  json to_json() const;
  static std::string csv_header();  // p,method,value,uncertainty,seed,time_ms
  std::string csv_row() const;
};

// Written with every CLI run; re-running the recorded command reproduces the
// outputs (bit-identically for exact methods, seed-identically for MC).
struct RunManifest {
  std::string command;
  json parameters = json::object();
  json seeds = json::object();
  std::string version;
  std::string timestamp_utc;
  std::string output_path;
  int threads = 0;

  json to_json() const;
};

RunManifest make_manifest(const std::string& command, const json& parameters,
                          const json& seeds, int threads,
                          const std::string& output_path);

std::string i128_to_string(__int128 v);

}  // namespace qwalk
