// Command-line front end: single-point queries, n-grid sweeps, and four-way
// comparison reports over the oracle / analytic / asymptotic / Monte Carlo
// paths, emitted as CSV or JSON.
//
// Exit codes: 0 success, 1 hard invariant failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "georec/report.hpp"

namespace {

using georec::Mode;
using georec::OutputFormat;
using georec::PathSelection;
using georec::Rational;
using georec::ReportConfig;

struct CommonOptions {
  std::string p_text = "1/2";
  long n = 0;
  std::string grid;
  long r = 1;
  std::string mode_text = "strict";
  std::string eps_text = "1/1000000000000";
  long trials = 100000;
  std::uint64_t seed = 1;
  std::string format_text = "csv";
  std::string out_path = "-";
  std::string paths_text;
  bool uncorrected_f2 = false;
  bool no_weak_shift = false;
};

void add_common_options(CLI::App* cmd, CommonOptions* opts, bool wants_grid) {
  cmd->add_option("--p", opts->p_text, "letter parameter p as a rational a/b or decimal");
  cmd->add_option("--n", opts->n, "word length");
  if (wants_grid) {
    cmd->add_option("--grid", opts->grid,
                    "word-length grid lo:hi:x<factor> or lo:hi:+<step>");
  }
  cmd->add_option("--r", opts->r, "record index (>= 1)");
  cmd->add_option("--mode", opts->mode_text, "strict | weak | both");
  cmd->add_option("--eps", opts->eps_text, "oracle truncation target epsilon");
  cmd->add_option("--trials", opts->trials, "Monte Carlo trials");
  cmd->add_option("--seed", opts->seed, "Monte Carlo seed");
  cmd->add_option("--format", opts->format_text, "csv | json");
  cmd->add_option("--out", opts->out_path, "output path ('-' for stdout)");
  cmd->add_flag("--uncorrected-f2", opts->uncorrected_f2,
                "diagnostics: use the uncorrected position coefficient (k - r)");
  cmd->add_flag("--no-weak-shift", opts->no_weak_shift,
                "diagnostics: report weak values without the +1 shift");
}

std::vector<long> parse_grid(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("bad grid '" + text + "', expected lo:hi:x2 or lo:hi:+step");
  };
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) throw bad();
  long lo = 0, hi = 0;
  try {
    lo = std::stol(text.substr(0, c1));
    hi = std::stol(text.substr(c1 + 1, c2 - c1 - 1));
  } catch (const std::exception&) {
    throw bad();
  }
  const std::string step = text.substr(c2 + 1);
  if (lo < 1 || hi < lo || step.size() < 2) throw bad();
  long amount = 0;
  try {
    amount = std::stol(step.substr(1));
  } catch (const std::exception&) {
    throw bad();
  }
  std::vector<long> ns;
  if (step[0] == 'x') {
    if (amount < 2) throw bad();
    for (long n = lo; n <= hi; n *= amount) ns.push_back(n);
  } else if (step[0] == '+') {
    if (amount < 1) throw bad();
    for (long n = lo; n <= hi; n += amount) ns.push_back(n);
  } else {
    throw bad();
  }
  if (ns.size() > 10000) throw std::invalid_argument("grid produces too many rows");
  return ns;
}

std::vector<Mode> parse_modes(const std::string& text) {
  if (text == "strict") return {Mode::kStrict};
  if (text == "weak") return {Mode::kWeak};
  if (text == "both") return {Mode::kStrict, Mode::kWeak};
  throw std::invalid_argument("bad mode '" + text + "', expected strict|weak|both");
}

PathSelection parse_paths(const std::string& text) {
  PathSelection sel;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token == "oracle") {
      sel.oracle = true;
    } else if (token == "analytic") {
      sel.analytic = true;
    } else if (token == "asymptotic" || token == "asym") {
      sel.asymptotic = true;
    } else if (token == "mc" || token == "montecarlo") {
      sel.mc = true;
    } else {
      throw std::invalid_argument("bad path '" + token +
                                  "', expected oracle|analytic|asymptotic|mc");
    }
  }
  if (!sel.oracle && !sel.analytic && !sel.asymptotic && !sel.mc) {
    throw std::invalid_argument("empty path selection");
  }
  return sel;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw std::invalid_argument("bad format '" + text + "', expected csv|json");
}

int run(const CommonOptions& opts, PathSelection paths) {
  ReportConfig config;
  config.p = georec::parse_rational(opts.p_text);
  if (!opts.grid.empty() && opts.n > 0) {
    throw std::invalid_argument("give either --n or --grid, not both");
  }
  if (!opts.grid.empty()) {
    config.ns = parse_grid(opts.grid);
  } else if (opts.n > 0) {
    config.ns = {opts.n};
  } else {
    throw std::invalid_argument("one of --n or --grid is required");
  }
  config.r = opts.r;
  config.modes = parse_modes(opts.mode_text);
  config.epsilon = georec::parse_rational(opts.eps_text);
  config.trials = opts.trials;
  config.seed = opts.seed;
  config.weak_shift = !opts.no_weak_shift;
  config.corrected_f2 = !opts.uncorrected_f2;
  config.paths = paths;

  const georec::ComparisonReport report = georec::run_query(config);
  georec::emit(report, parse_format(opts.format_text), opts.out_path);

  if (!report.all_invariants_pass) {
    const georec::ReportRow* row = report.first_failing_row();
    std::cerr << "invariant failure at p=" << georec::to_string(row->p)
              << " n=" << row->n << " r=" << row->r << " mode=" << mode_name(row->mode)
              << ": " << row->invariant_message << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"record statistics of geometric random words"};
  app.require_subcommand(1);

  CommonOptions opts;
  struct SubSpec {
    const char* name;
    const char* help;
    bool wants_grid;
    PathSelection default_paths;
  };
  const SubSpec specs[] = {
      {"exact", "exact oracle statistics (dynamic program)", true,
       {.oracle = true}},
      {"analytic", "exact alternating-sum formulas", true, {.analytic = true}},
      {"asym", "asymptotic leading terms", true, {.asymptotic = true}},
      {"simulate", "Monte Carlo estimates", true, {.mc = true}},
      {"compare", "cross-validate selected paths", true,
       {.oracle = true, .analytic = true, .asymptotic = true}},
      {"table", "grid sweeps (defaults to analytic + asymptotic)", true,
       {.analytic = true, .asymptotic = true}},
  };

  std::vector<std::pair<CLI::App*, PathSelection>> subs;
  for (const auto& spec : specs) {
    CLI::App* cmd = app.add_subcommand(spec.name, spec.help);
    add_common_options(cmd, &opts, spec.wants_grid);
    cmd->add_option("--paths", opts.paths_text,
                    "comma list of oracle,analytic,asymptotic,mc");
    subs.emplace_back(cmd, spec.default_paths);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly, bad usage is 2
  }

  try {
    for (const auto& [cmd, default_paths] : subs) {
      if (cmd->parsed()) {
        PathSelection paths =
            opts.paths_text.empty() ? default_paths : parse_paths(opts.paths_text);
        return run(opts, paths);
      }
    }
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
