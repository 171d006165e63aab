#include "georec/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "georec/analytic.hpp"
#include "georec/asymptotic.hpp"
#include "georec/oracle.hpp"

namespace georec {

const char* const kToolVersion = "georec 1.0.0";

const ReportRow* ComparisonReport::first_failing_row() const {
  for (const auto& row : rows) {
    if (!row.invariant_ok) return &row;
  }
  return nullptr;
}

namespace {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double rational_distance(const Rational& a, const Rational& b) {
  Rational d(a - b);
  if (d < 0) d = -d;
  return mpq_get_d(d.get_mpq_t());
}

struct RowTask {
  Mode mode;
  long n;
};

}  // namespace

ComparisonReport run_query(const ReportConfig& config) {
  if (config.ns.empty()) throw std::invalid_argument("run_query: no word lengths given");
  if (config.r < 1) throw std::invalid_argument("run_query: r must be >= 1");
  for (long n : config.ns) {
    if (n < 1) throw std::invalid_argument("run_query: word lengths must be >= 1");
    if (config.r > n) {
      throw std::invalid_argument("run_query: r exceeds word length n");
    }
  }
  const ModelParams params = ModelParams::from_p(config.p);
  const Rational epsilon =
      config.epsilon > 0 ? config.epsilon : make_rational(1, Integer("1000000000000"));

  std::vector<Mode> modes = config.modes;
  if (modes.empty()) modes.push_back(Mode::kStrict);
  std::sort(modes.begin(), modes.end());
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
  std::vector<long> ns = config.ns;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  ComparisonReport report;
  report.metadata.tool_version = kToolVersion;
  report.metadata.rng = kRngName;
  report.metadata.seed = config.seed;
  report.metadata.trials = config.trials;
  report.metadata.epsilon = epsilon;
  report.metadata.weak_shift = config.weak_shift;
  report.metadata.corrected_f2 = config.corrected_f2;
  report.metadata.threads = resolve_thread_count(config.threads);
  if (config.paths.asymptotic &&
      std::find(modes.begin(), modes.end(), Mode::kWeak) != modes.end()) {
    report.metadata.annotations.push_back(
        "weak value limit reported as 1 + r q/p; the uncorrected constant r q/p "
        "tracks the conditional mean of (value - 1)");
  }
  if (!config.corrected_f2) {
    report.metadata.annotations.push_back(
        "position sums use the uncorrected f2 coefficient (k - r); diagnostics only");
  }
  if (!config.weak_shift) {
    report.metadata.annotations.push_back(
        "weak value columns carry the raw (value - 1) statistic; diagnostics only");
  }

  // One evaluator per mode serves the whole n-grid.
  const long n_hi = ns.back();
  std::map<Mode, std::unique_ptr<AnalyticEvaluator>> evaluators;
  if (config.paths.analytic) {
    for (Mode mode : modes) {
      evaluators[mode] = std::make_unique<AnalyticEvaluator>(
          params, config.r, mode, n_hi, config.corrected_f2);
    }
  }

  for (Mode mode : modes) {
    for (long n : ns) {
      ReportRow row;
      row.p = config.p;
      row.n = n;
      row.r = config.r;
      row.mode = mode;

      if (config.paths.oracle) {
        const long M = plan_cutoffs(params, n, epsilon).cutoff_M;
        const RecordQuery query(n, config.r, mode);
        const RecordStatistics stats = dp_oracle(params, query, M);
        OracleCells cells;
        cells.pi = stats.prob_at_least_r;
        cells.value_partial = stats.value_partial;
        cells.position_partial = stats.position_partial;
        cells.value_conditional = stats.value_conditional;
        cells.position_conditional = stats.position_conditional;
        cells.tail_bound = stats.tail_bound;
        cells.value_tail_bound = stats.value_tail_bound;
        cells.position_tail_bound = stats.position_tail_bound;
        cells.cutoff_M = M;
        row.oracle = std::move(cells);
      }

      if (config.paths.analytic) {
        const AnalyticEvaluator& ev = *evaluators.at(mode);
        AnalyticCells cells;
        cells.pi = ev.pi(n);
        Rational value(ev.value_partial(n));
        if (mode == Mode::kWeak && config.weak_shift) value += cells.pi;
        cells.value_partial = value;
        cells.position_partial =
            Rational(ev.position_shifted_partial(n) + config.r * cells.pi);
        if (cells.pi > 0) {
          cells.value_conditional = Rational(cells.value_partial / cells.pi);
          cells.position_conditional = Rational(cells.position_partial / cells.pi);
        }
        row.analytic = std::move(cells);
      }

      if (config.paths.asymptotic) {
        AsymptoticCells cells;
        const bool corrected = mode == Mode::kWeak ? config.weak_shift : true;
        cells.value_limit = value_limit(params, config.r, mode, corrected).exact();
        if (mode == Mode::kWeak) {
          cells.value_limit_uncorrected =
              value_limit(params, config.r, mode, false).exact();
        }
        if (n >= 2) {
          cells.position_leading =
              position_leading(params, n, config.r, mode).real().to_double();
        }
        row.asymptotic = std::move(cells);
      }

      if (config.paths.mc) {
        const RecordQuery query(n, config.r, mode);
        McCells cells;
        const McResult mc =
            mc_estimate(params, query, config.trials, config.seed, config.threads);
        cells.pi_hat = mc.pi_hat;
        cells.value_hat = mc.value_hat;
        cells.position_hat = mc.position_hat;
        row.mc = std::move(cells);
      }

      if (row.oracle && row.analytic) {
        const OracleCells& o = *row.oracle;
        const AnalyticCells& a = *row.analytic;
        const Rational d_pi(abs(Rational(a.pi - o.pi)));
        const Rational d_value(abs(Rational(a.value_partial - o.value_partial)));
        const Rational d_position(abs(Rational(a.position_partial - o.position_partial)));
        row.residual_analytic_vs_oracle =
            std::max({mpq_get_d(d_pi.get_mpq_t()), mpq_get_d(d_value.get_mpq_t()),
                      mpq_get_d(d_position.get_mpq_t())});
        if (d_pi > o.tail_bound) {
          row.invariant_ok = false;
          row.invariant_message = "pi residual exceeds oracle tail bound";
        } else if (d_value > o.value_tail_bound) {
          row.invariant_ok = false;
          row.invariant_message = "value residual exceeds oracle value tail bound";
        } else if (d_position > o.position_tail_bound) {
          row.invariant_ok = false;
          row.invariant_message = "position residual exceeds oracle position tail bound";
        }
      }

      if (row.asymptotic && (row.analytic || row.oracle)) {
        const Rational value_cond =
            row.analytic ? row.analytic->value_conditional : row.oracle->value_conditional;
        double residual = rational_distance(value_cond, row.asymptotic->value_limit);
        if (row.asymptotic->position_leading) {
          const Rational pos_cond = row.analytic ? row.analytic->position_conditional
                                                 : row.oracle->position_conditional;
          const double d = std::abs(mpq_get_d(pos_cond.get_mpq_t()) -
                                    *row.asymptotic->position_leading);
          residual = std::max(residual, d);
        }
        row.residual_conditional_vs_asymptotic = residual;
      }

      report.all_invariants_pass = report.all_invariants_pass && row.invariant_ok;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

namespace {

void csv_cell(std::ostream& out, const std::optional<Rational>& value, bool last = false) {
  if (value) out << to_string(*value);
  out << (last ? "\n" : ",");
}

void csv_real(std::ostream& out, const std::optional<double>& value, bool last = false) {
  if (value) out << format_real(*value);
  out << (last ? "\n" : ",");
}

}  // namespace

void emit_csv(const ComparisonReport& report, std::ostream& out) {
  out << "p,n,r,mode,pi_oracle,pi_analytic,value_partial_oracle,value_partial_analytic,"
         "value_conditional,value_asymptote,pos_partial_oracle,pos_partial_analytic,"
         "pos_conditional,pos_asymptote,mc_pi,mc_value,mc_position,tail_bound\n";
  for (const auto& row : report.rows) {
    out << to_string(row.p) << ',' << row.n << ',' << row.r << ','
        << mode_name(row.mode) << ',';
    const auto& o = row.oracle;
    const auto& a = row.analytic;
    csv_cell(out, o ? std::optional<Rational>(o->pi) : std::nullopt);
    csv_cell(out, a ? std::optional<Rational>(a->pi) : std::nullopt);
    csv_cell(out, o ? std::optional<Rational>(o->value_partial) : std::nullopt);
    csv_cell(out, a ? std::optional<Rational>(a->value_partial) : std::nullopt);
    // Conditionals prefer the analytic path; the oracle fills in otherwise.
    std::optional<Rational> value_cond, pos_cond;
    if (a) {
      value_cond = a->value_conditional;
      pos_cond = a->position_conditional;
    } else if (o) {
      value_cond = o->value_conditional;
      pos_cond = o->position_conditional;
    }
    csv_cell(out, value_cond);
    csv_cell(out, row.asymptotic ? std::optional<Rational>(row.asymptotic->value_limit)
                                 : std::nullopt);
    csv_cell(out, o ? std::optional<Rational>(o->position_partial) : std::nullopt);
    csv_cell(out, a ? std::optional<Rational>(a->position_partial) : std::nullopt);
    csv_cell(out, pos_cond);
    csv_real(out, row.asymptotic ? row.asymptotic->position_leading : std::nullopt);
    const auto& mc = row.mc;
    csv_real(out, mc ? std::optional<double>(mc->pi_hat.mean) : std::nullopt);
    csv_real(out, mc && mc->value_hat.available ? std::optional<double>(mc->value_hat.mean)
                                                : std::nullopt);
    csv_real(out, mc && mc->position_hat.available
                      ? std::optional<double>(mc->position_hat.mean)
                      : std::nullopt);
    csv_cell(out, o ? std::optional<Rational>(o->tail_bound) : std::nullopt, true);
  }
}

namespace {

using nlohmann::json;

json estimate_json(const McEstimate& e) {
  json j;
  j["mean"] = e.mean;
  j["stderr"] = e.stderr_;
  j["ci95_low"] = e.ci95_low;
  j["ci95_high"] = e.ci95_high;
  j["trials"] = e.trials;
  j["conditioning_count"] = e.conditioning_count;
  j["available"] = e.available;
  return j;
}

}  // namespace

void emit_json(const ComparisonReport& report, std::ostream& out) {
  json j;
  json& meta = j["metadata"];
  meta["tool_version"] = report.metadata.tool_version;
  meta["rng"] = report.metadata.rng;
  meta["seed"] = report.metadata.seed;
  meta["trials"] = report.metadata.trials;
  meta["epsilon"] = to_string(report.metadata.epsilon);
  meta["weak_shift"] = report.metadata.weak_shift;
  meta["corrected_f2"] = report.metadata.corrected_f2;
  meta["threads"] = report.metadata.threads;
  meta["annotations"] = report.metadata.annotations;
  j["all_invariants_pass"] = report.all_invariants_pass;

  j["rows"] = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["p"] = to_string(row.p);
    r["n"] = row.n;
    r["r"] = row.r;
    r["mode"] = mode_name(row.mode);
    if (row.oracle) {
      const auto& o = *row.oracle;
      json jo;
      jo["pi"] = to_string(o.pi);
      jo["value_partial"] = to_string(o.value_partial);
      jo["position_partial"] = to_string(o.position_partial);
      jo["value_conditional"] = to_string(o.value_conditional);
      jo["position_conditional"] = to_string(o.position_conditional);
      jo["tail_bound"] = to_string(o.tail_bound);
      jo["value_tail_bound"] = to_string(o.value_tail_bound);
      jo["position_tail_bound"] = to_string(o.position_tail_bound);
      jo["cutoff_M"] = o.cutoff_M;
      r["oracle"] = std::move(jo);
    }
    if (row.analytic) {
      const auto& a = *row.analytic;
      json ja;
      ja["pi"] = to_string(a.pi);
      ja["value_partial"] = to_string(a.value_partial);
      ja["position_partial"] = to_string(a.position_partial);
      ja["value_conditional"] = to_string(a.value_conditional);
      ja["position_conditional"] = to_string(a.position_conditional);
      r["analytic"] = std::move(ja);
    }
    if (row.asymptotic) {
      const auto& s = *row.asymptotic;
      json js;
      js["value_limit"] = to_string(s.value_limit);
      if (s.value_limit_uncorrected) {
        js["value_limit_uncorrected"] = to_string(*s.value_limit_uncorrected);
      }
      if (s.position_leading) js["position_leading"] = *s.position_leading;
      r["asymptotic"] = std::move(js);
    }
    if (row.mc) {
      json jm;
      jm["pi"] = estimate_json(row.mc->pi_hat);
      jm["value"] = estimate_json(row.mc->value_hat);
      jm["position"] = estimate_json(row.mc->position_hat);
      r["mc"] = std::move(jm);
    }
    json res;
    if (row.residual_analytic_vs_oracle) {
      res["analytic_vs_oracle"] = *row.residual_analytic_vs_oracle;
    }
    if (row.residual_conditional_vs_asymptotic) {
      res["conditional_vs_asymptotic"] = *row.residual_conditional_vs_asymptotic;
    }
    r["residuals"] = std::move(res);
    r["invariant_ok"] = row.invariant_ok;
    if (!row.invariant_message.empty()) r["invariant_message"] = row.invariant_message;
    j["rows"].push_back(std::move(r));
  }
  out << j.dump(2) << '\n';
}

void emit(const ComparisonReport& report, OutputFormat format, const std::string& path) {
  const auto write = [&](std::ostream& out) {
    if (format == OutputFormat::kCsv) {
      emit_csv(report, out);
    } else {
      emit_json(report, out);
    }
  };
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open output path: " + path);
  write(file);
}

}  // namespace georec
