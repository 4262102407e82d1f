#include "qwalk/report.hpp"

#include <ctime>
#include <sstream>

namespace qwalk {

json MomentReport::to_json() const {
  json j;
  j["method"] = method;
  j["params"] = params;
  j["value"] = value;
  j["uncertainty"] = uncertainty;
  j["seed"] = seed;
  j["time_ms"] = time_ms;
  return j;
}

std::string MomentReport::csv_header() {
  return "p,method,value,uncertainty,seed,time_ms";
}

std::string MomentReport::csv_row() const {
  std::ostringstream os;
  os.precision(15);
  os << (params.contains("p") ? params["p"].get<int>() : 0) << "," << method << ","
     << value << "," << uncertainty << "," << seed << "," << time_ms;
  return os.str();
}

json RunManifest::to_json() const {
  json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["seeds"] = seeds;
  j["version"] = version;
  j["timestamp_utc"] = timestamp_utc;
  j["output_path"] = output_path;
  j["threads"] = threads;
  return j;
}

RunManifest make_manifest(const std::string& command, const json& parameters,
                          const json& seeds, int threads,
                          const std::string& output_path) {
  RunManifest m;
  m.command = command;
  m.parameters = parameters;
  m.seeds = seeds;
  m.version = "qwalk 1.0.0";
  m.threads = threads;
  m.output_path = output_path;
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  m.timestamp_utc = buf;
  return m;
}

std::string i128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (u > 0) {
    s += static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  if (neg) s += '-';
  return {s.rbegin(), s.rend()};
}

}  // namespace qwalk
