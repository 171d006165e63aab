#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "georec/model.hpp"
#include "georec/montecarlo.hpp"

namespace georec {

extern const char* const kToolVersion;

enum class OutputFormat { kCsv, kJson };

struct PathSelection {
  bool oracle = false;
  bool analytic = false;
  bool asymptotic = false;
  bool mc = false;
};

struct ReportConfig {
  Rational p;
  std::vector<long> ns;        // one row per n (per mode)
  long r = 1;
  std::vector<Mode> modes;     // defaults to {strict} when empty
  Rational epsilon;            // oracle cutoff target; default 10^-12
  long trials = 100000;
  std::uint64_t seed = 1;
  bool weak_shift = true;      // report weak values shifted by +pi (+1 conditional)
  bool corrected_f2 = true;    // use the (k - r + 1) position coefficient
  PathSelection paths;
  int threads = 0;             // 0: GEOREC_THREADS or hardware default (MC only)
};

struct OracleCells {
  Rational pi, value_partial, position_partial;
  Rational value_conditional, position_conditional;
  Rational tail_bound, value_tail_bound, position_tail_bound;
  long cutoff_M = 0;
};

struct AnalyticCells {
  Rational pi, value_partial, position_partial;
  Rational value_conditional, position_conditional;
};

struct AsymptoticCells {
  Rational value_limit;                        // constant reported for this mode
  std::optional<Rational> value_limit_uncorrected;  // weak mode only
  std::optional<double> position_leading;      // absent for n < 2
};

struct McCells {
  McEstimate pi_hat, value_hat, position_hat;
};

struct ReportRow {
  Rational p;
  long n = 0, r = 0;
  Mode mode = Mode::kStrict;
  std::optional<OracleCells> oracle;
  std::optional<AnalyticCells> analytic;
  std::optional<AsymptoticCells> asymptotic;
  std::optional<McCells> mc;
  std::optional<double> residual_analytic_vs_oracle;
  std::optional<double> residual_conditional_vs_asymptotic;
  bool invariant_ok = true;
  std::string invariant_message;
};

struct ReportMetadata {
  std::string tool_version;
  std::string rng;
  std::uint64_t seed = 0;
  long trials = 0;
  Rational epsilon;
  bool weak_shift = true;
  bool corrected_f2 = true;
  int threads = 0;
  std::vector<std::string> annotations;
};

struct ComparisonReport {
  ReportMetadata metadata;
  std::vector<ReportRow> rows;
  bool all_invariants_pass = true;

  const ReportRow* first_failing_row() const;
};

// Executes the requested paths for every (mode, n) combination and collects
// rows sorted by (p, mode, r, n). The hard invariant - analytic and oracle
// agree within the oracle's certified tail bounds - is recorded per row.
ComparisonReport run_query(const ReportConfig& config);

void emit_csv(const ComparisonReport& report, std::ostream& out);
void emit_json(const ComparisonReport& report, std::ostream& out);

// path "-" writes to standard output. Throws std::runtime_error when the
// output file cannot be opened.
void emit(const ComparisonReport& report, OutputFormat format, const std::string& path);

}  // namespace georec
