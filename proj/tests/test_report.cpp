#include <doctest.h>

#include <thread>

#include "qwalk/report.hpp"

using namespace qwalk;

TEST_CASE("moment report JSON carries all fields") {
  MomentReport rep;
  rep.method = "spectral";
  rep.params = {{"p", 3}, {"dim", 64}};
  rep.value = 10.0;
  rep.uncertainty = 2.5e-13;
  rep.seed = 47;
  rep.time_ms = 1.25;
  const json j = rep.to_json();
  CHECK(j.at("method") == "spectral");
  CHECK(j.at("params").at("p") == 3);
  CHECK(j.at("value") == 10.0);
  CHECK(j.at("uncertainty") == 2.5e-13);
  CHECK(j.at("seed") == 47);
  CHECK(j.at("time_ms") == 1.25);
}

TEST_CASE("moment report CSV row matches the header ordering") {
  CHECK(MomentReport::csv_header() == "p,method,value,uncertainty,seed,time_ms");
  MomentReport rep;
  rep.method = "cesaro";
  rep.params = {{"p", 2}};
  rep.value = 3.0;
  rep.uncertainty = 0.001;
  rep.seed = 9;
  const std::string row = rep.csv_row();
  CHECK(row.substr(0, 9) == "2,cesaro,");
  CHECK(row.find(",9,") != std::string::npos);
}

TEST_CASE("int128 decimal rendering") {
  CHECK(i128_to_string(0) == "0");
  CHECK(i128_to_string(42) == "42");
  CHECK(i128_to_string(-7) == "-7");
  __int128 big = 1;
  for (int i = 0; i < 21; ++i) big *= 10;
  CHECK(i128_to_string(big) == "1000000000000000000000");
  CHECK(i128_to_string(-big + 1) == "-999999999999999999999");
}

TEST_CASE("run manifest captures the invocation") {
  const RunManifest m = make_manifest("moments", {{"p", 2}}, {{"q", 47}}, 4,
                                      "out.json");
  CHECK(m.command == "moments");
  CHECK(m.parameters.at("p") == 2);
  CHECK(m.seeds.at("q") == 47);
  CHECK(m.threads == 4);
  CHECK(m.output_path == "out.json");
  CHECK(!m.timestamp_utc.empty());
  CHECK(!m.version.empty());
  const json j = m.to_json();
  CHECK(j.at("command") == "moments");
  CHECK(j.at("threads") == 4);
}

TEST_CASE("stopwatch is monotone") {
  Stopwatch sw;
  const double a = sw.elapsed_ms();
  std::this_thread::sleep_for(std::chrono::milliseconds(2));
  const double b = sw.elapsed_ms();
  CHECK(a >= 0.0);
  CHECK(b > a);
}
