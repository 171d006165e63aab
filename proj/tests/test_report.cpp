#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "georec/report.hpp"

using namespace georec;

namespace {

ReportConfig base_config() {
  ReportConfig config;
  config.p = make_rational(1, 2);
  config.ns = {2};
  config.r = 2;
  config.modes = {Mode::kStrict};
  config.epsilon = parse_rational("1/1000000000000");
  config.trials = 2000;
  config.seed = 11;
  return config;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string token;
  std::stringstream ss(line);
  while (std::getline(ss, token, sep)) out.push_back(token);
  return out;
}

constexpr const char* kHeader =
    "p,n,r,mode,pi_oracle,pi_analytic,value_partial_oracle,value_partial_analytic,"
    "value_conditional,value_asymptote,pos_partial_oracle,pos_partial_analytic,"
    "pos_conditional,pos_asymptote,mc_pi,mc_value,mc_position,tail_bound";

}  // namespace

TEST_CASE("run_query validates its configuration") {
  ReportConfig config = base_config();
  config.ns = {1};
  config.paths.analytic = true;
  CHECK_THROWS_AS(run_query(config), std::invalid_argument);  // r > n
  config.ns = {};
  CHECK_THROWS_AS(run_query(config), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams::from_p(parse_rational("3/2")), std::invalid_argument);
}

TEST_CASE("oracle and analytic paths agree and satisfy the hard invariant") {
  ReportConfig config = base_config();
  config.paths.oracle = true;
  config.paths.analytic = true;
  const ComparisonReport report = run_query(config);
  REQUIRE(report.rows.size() == 1);
  const ReportRow& row = report.rows.front();
  REQUIRE(row.analytic.has_value());
  REQUIRE(row.oracle.has_value());
  CHECK(row.analytic->pi == make_rational(1, 3));
  CHECK(row.invariant_ok);
  CHECK(report.all_invariants_pass);
  REQUIRE(row.residual_analytic_vs_oracle.has_value());
  // The value residual is bounded by the value tail n q^M (M + 1/p), a few
  // orders looser than the pi tail epsilon.
  CHECK(*row.residual_analytic_vs_oracle <= 1e-9);
}

TEST_CASE("single-letter analytic row reports value 2 and position 1") {
  ReportConfig config = base_config();
  config.ns = {1};
  config.r = 1;
  config.paths.analytic = true;
  const ComparisonReport report = run_query(config);
  REQUIRE(report.rows.size() == 1);
  const AnalyticCells& cells = *report.rows.front().analytic;
  CHECK(cells.value_partial == 2);
  CHECK(cells.position_partial == 1);
  CHECK(cells.value_conditional == 2);
  CHECK(cells.position_conditional == 1);
}

TEST_CASE("csv output: header, cell placement, column count") {
  ReportConfig config = base_config();
  config.paths.oracle = true;
  config.paths.analytic = true;
  config.paths.asymptotic = true;
  const ComparisonReport report = run_query(config);

  std::ostringstream out;
  emit_csv(report, out);
  const auto lines = split(out.str(), '\n');
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == kHeader);
  const auto cells = split(lines[1] + " ", ',');  // keep a trailing empty cell visible
  REQUIRE(cells.size() == 18);
  CHECK(cells[0] == "1/2");
  CHECK(cells[1] == "2");
  CHECK(cells[2] == "2");
  CHECK(cells[3] == "strict");
  CHECK(cells[5] == "1/3");   // pi_analytic
  CHECK(cells[7] == "10/9");  // value_partial_analytic
  CHECK(cells[9] == "4");     // value_asymptote = r/p
  CHECK(cells[14] == "");     // mc_pi not requested

  // Header-only output for an empty report.
  ComparisonReport empty;
  std::ostringstream empty_out;
  emit_csv(empty, empty_out);
  const auto empty_lines = split(empty_out.str(), '\n');
  CHECK(empty_lines.size() == 1);
  CHECK(empty_lines[0] == kHeader);
}

TEST_CASE("json round trip preserves rationals exactly") {
  ReportConfig config = base_config();
  config.ns = {3, 2};  // deliberately unsorted
  config.modes = {Mode::kWeak, Mode::kStrict};
  config.paths.oracle = true;
  config.paths.analytic = true;
  config.paths.asymptotic = true;
  config.paths.mc = true;
  config.trials = 500;
  const ComparisonReport report = run_query(config);

  std::ostringstream out;
  emit_json(report, out);
  const nlohmann::json parsed = nlohmann::json::parse(out.str());

  CHECK(parsed["metadata"]["tool_version"] == kToolVersion);
  CHECK(parsed["metadata"]["rng"] == std::string(kRngName));
  CHECK(parsed["metadata"]["seed"] == 11);
  CHECK(parsed["metadata"]["trials"] == 500);
  CHECK(parsed["metadata"]["epsilon"] == "1/1000000000000");
  CHECK(parsed["metadata"]["weak_shift"] == true);
  CHECK(parsed["metadata"]["corrected_f2"] == true);
  CHECK(parsed["metadata"].contains("threads"));

  REQUIRE(parsed["rows"].size() == report.rows.size());
  for (size_t i = 0; i < report.rows.size(); ++i) {
    const ReportRow& row = report.rows[i];
    const auto& jrow = parsed["rows"][i];
    CHECK(jrow["p"].get<std::string>() == to_string(row.p));
    CHECK(parse_rational(jrow["analytic"]["pi"].get<std::string>()) == row.analytic->pi);
    CHECK(parse_rational(jrow["oracle"]["value_partial"].get<std::string>()) ==
          row.oracle->value_partial);
    CHECK(parse_rational(jrow["oracle"]["tail_bound"].get<std::string>()) ==
          row.oracle->tail_bound);
  }

  // Rows arrive sorted by (p, mode, r, n).
  REQUIRE(report.rows.size() == 4);
  CHECK(report.rows[0].mode == Mode::kStrict);
  CHECK(report.rows[0].n == 2);
  CHECK(report.rows[1].n == 3);
  CHECK(report.rows[2].mode == Mode::kWeak);
  CHECK(report.rows[2].n == 2);

  // The weak asymptote annotation is present.
  bool annotated = false;
  for (const auto& note : report.metadata.annotations) {
    annotated = annotated || note.find("1 + r q/p") != std::string::npos;
  }
  CHECK(annotated);
}

TEST_CASE("disabling the weak shift breaks the hard invariant visibly") {
  ReportConfig config = base_config();
  config.modes = {Mode::kWeak};
  config.weak_shift = false;
  config.paths.oracle = true;
  config.paths.analytic = true;
  const ComparisonReport report = run_query(config);
  CHECK_FALSE(report.all_invariants_pass);
  REQUIRE(report.first_failing_row() != nullptr);
  CHECK(report.first_failing_row()->invariant_message ==
        "value residual exceeds oracle value tail bound");

  // With the shift on, the same configuration passes.
  config.weak_shift = true;
  CHECK(run_query(config).all_invariants_pass);
}
