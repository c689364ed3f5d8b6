#include <doctest.h>

#include "hypersketch/errors.hpp"
#include "hypersketch/experiments.hpp"

using namespace hypersketch;
using nlohmann::json;

TEST_CASE("unknown experiment names are usage errors") {
  CHECK_THROWS_AS(run_experiment("no-such-thing", json::object(), 0), UsageError);
}

TEST_CASE("gadget-values single-instance mode pins the closed form") {
  const auto report = run_experiment("gadget-values", {{"k", 2}, {"t", 3}, {"b", 0}}, 7);
  CHECK(report.pass);
  CHECK(report.metrics.at("maxcut") == 48.0);  // n = 2kt = 12, c0 = 4n
  CHECK(report.metrics.at("expected") == 48.0);
  CHECK(report.parameters.at("k") == 2);
}

TEST_CASE("two-party-bound holds on a small batch") {
  const auto report = run_experiment("two-party-bound", {{"n", 8}, {"graphs", 100}}, 1);
  CHECK(report.pass);
  CHECK(report.metrics.at("violations") == 0.0);
  CHECK(report.metrics.at("tight_ok") == 1.0);
}

TEST_CASE("reports are deterministic given (name, params, seed)") {
  const json params{{"graphs", 50}, {"n", 8}};
  const auto a = run_experiment("two-party-bound", params, 5);
  const auto b = run_experiment("two-party-bound", params, 5);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.metrics == b.metrics);

  const auto c = run_experiment("sunflower-count", json::object(), 0);
  const auto d = run_experiment("sunflower-count", json::object(), 0);
  CHECK(c.to_json().dump() == d.to_json().dump());
}

TEST_CASE("report JSON carries the contract fields and no wall time") {
  const auto report = run_experiment("sunflower-count", json::object(), 3);
  const auto j = report.to_json();
  CHECK(j.contains("experiment"));
  CHECK(j.contains("parameters"));
  CHECK(j.contains("seed"));
  CHECK(j.contains("metrics"));
  CHECK(j.contains("pass"));
  CHECK_FALSE(j.contains("wall_time_ms"));
  CHECK_FALSE(report.metrics.empty());
  CHECK(report.wall_time_ms >= 0.0);
}

TEST_CASE("small cut-counting run stays under the constant-4 bound") {
  const auto report =
      run_experiment("cut-counting", {{"instances_per_r", 1}, {"max_n", 9}}, 11);
  CHECK(report.pass);
  CHECK(report.metrics.at("max_count_over_4bound") <= 1.0);
}
