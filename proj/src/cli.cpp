#include "rhn/cli.hpp"

#include <climits>
#include <ostream>

#include <CLI11.hpp>

#include "rhn/analysis.hpp"
#include "rhn/errors.hpp"
#include "rhn/harmonic.hpp"
#include "rhn/io_formats.hpp"
#include "rhn/verify.hpp"

namespace rhn::cli {

namespace {

struct Options {
  int n = 0;
  int m = 0;
  int n_max = 0;
  int m_max = 0;
  int repetitions = 3;
  std::string strategy = "table";
  std::string format;
};

const CLI::Range kPositive(1, INT_MAX);
const CLI::Range kNonNegative(0, INT_MAX);

void print_plain(std::ostream& out, const ErrorReport& r) {
  out << "n: " << r.n << "\n"
      << "m: " << r.m << "\n"
      << "exact: " << r.exact.to_display_string() << "\n";
  out << "float_value: " << format_float(r.float_value) << "\n"
      << "abs_error: " << format_float(r.abs_error) << "\n"
      << "rel_error: " << format_float(r.rel_error) << "\n"
      << "largest_term_magnitude: " << format_float(r.largest_term_magnitude) << "\n";
}

int cmd_eval(const Options& o, std::ostream& out) {
  auto strategy = parse_strategy(o.strategy);
  auto format = parse_format(o.format);
  out << render_value(eval(o.n, o.m, *strategy), *format) << "\n";
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  out << render_table(build_table(o.n_max, o.m_max), *parse_format(o.format));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const VerifyReport report = verify_properties(o.n_max, o.m_max);
  long checked = 0;
  long failed = 0;
  for (const auto& p : report.properties) {
    checked += p.checked;
    failed += p.failed;
    out << (p.failed == 0 ? "PASS  " : "FAIL  ") << p.name << "  checked=" << p.checked
        << " failed=" << p.failed;
    if (p.counterexample) {
      out << "  counterexample n=" << p.counterexample->first << " m=" << p.counterexample->second;
      err << "verify: " << p.name << " fails at n=" << p.counterexample->first
          << ", m=" << p.counterexample->second << "\n";
    }
    out << "\n";
  }
  out << "total: " << report.properties.size() << " properties, " << checked << " checks, " << failed
      << " failed\n";
  return report.passed() ? kExitOk : kExitFailure;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<EvalStrategy> strategies;
  if (o.strategy == "all") {
    strategies.assign(std::begin(kAllStrategies), std::end(kAllStrategies));
  } else {
    strategies.push_back(*parse_strategy(o.strategy));
  }
  const RenderFormat format = *parse_format(o.format);
  const bool stream = format == RenderFormat::Csv;

  std::vector<BenchReport> reports;
  if (stream) out << csv_header<BenchReport>() << std::flush;
  int status = kExitOk;
  for (long n = 1; n <= o.n_max; n *= 2) {
    for (int m = 0; m <= o.m_max; ++m) {
      std::optional<ExactRational> first;
      for (EvalStrategy s : strategies) {
        BenchReport r = bench(s, static_cast<int>(n), m, o.repetitions);
        if (!first) {
          first = r.value;
        } else if (r.value != *first) {
          err << "bench: strategies disagree at n=" << n << ", m=" << m << "\n";
          status = kExitFailure;
        }
        if (stream) {
          out << csv_row(r) << std::flush;
        } else {
          reports.push_back(std::move(r));
        }
      }
    }
  }
  if (!stream) out << render_reports(std::span<const BenchReport>(reports), format);
  return status;
}

int cmd_float_error(const Options& o, std::ostream& out) {
  const ErrorReport r = error_report(o.n, o.m);
  const RenderFormat format = *parse_format(o.format);
  if (format == RenderFormat::Plain) {
    print_plain(out, r);
  } else {
    out << render_reports(std::span<const ErrorReport>(&r, 1), format);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact recursive harmonic numbers H(n, m)", args.empty() ? "rhn" : args.front()};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> strategies = {"definition", "table", "binomial"};
  const std::vector<std::string> strategies_or_all = {"definition", "table", "binomial", "all"};
  const std::vector<std::string> all_formats = {"plain", "csv", "json", "latex"};
  const std::vector<std::string> report_formats = {"csv", "json"};
  const std::vector<std::string> float_formats = {"plain", "csv", "json"};

  auto* eval = app.add_subcommand("eval", "Evaluate one H(n, m)");
  eval->add_option("--n", o.n, "n >= 1")->required()->check(kPositive);
  eval->add_option("--m", o.m, "m >= 0")->required()->check(kNonNegative);
  eval->add_option("--strategy", o.strategy, "definition|table|binomial")
      ->check(CLI::IsMember(strategies))->capture_default_str();
  eval->add_option("--format", o.format, "plain|csv|json|latex")->check(CLI::IsMember(all_formats));

  auto* table = app.add_subcommand("table", "Emit the table of H(n, m)");
  table->add_option("--n-max", o.n_max, "n_max >= 1")->required()->check(kPositive);
  table->add_option("--m-max", o.m_max, "m_max >= 0")->required()->check(kNonNegative);
  table->add_option("--format", o.format, "plain|csv|json|latex")->check(CLI::IsMember(all_formats));

  auto* verify = app.add_subcommand("verify", "Check the harmonic invariants up to the given bounds");
  verify->add_option("--n-max", o.n_max, "n_max >= 1")->required()->check(kPositive);
  verify->add_option("--m-max", o.m_max, "m_max >= 0")->required()->check(kNonNegative);

  auto* bench_cmd = app.add_subcommand("bench", "Time strategies over n = 1, 2, 4, ... <= n_max and m <= m_max");
  bench_cmd->add_option("--n-max", o.n_max, "n_max >= 1")->required()->check(kPositive);
  bench_cmd->add_option("--m-max", o.m_max, "m_max >= 0")->required()->check(kNonNegative);
  bench_cmd->add_option("--strategy", o.strategy, "definition|table|binomial|all")
      ->check(CLI::IsMember(strategies_or_all));
  bench_cmd->add_option("--repetitions", o.repetitions, "timed runs per cell")
      ->check(kPositive)->capture_default_str();
  bench_cmd->add_option("--format", o.format, "csv|json")->check(CLI::IsMember(report_formats));

  auto* float_error = app.add_subcommand("float-error", "Binary64 error of the alternating binomial sum");
  float_error->add_option("--n", o.n, "n >= 1")->required()->check(kPositive);
  float_error->add_option("--m", o.m, "m >= 0")->required()->check(kNonNegative);
  float_error->add_option("--format", o.format, "plain|csv|json")->check(CLI::IsMember(float_formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      if (o.format.empty()) o.format = "plain";
      return cmd_eval(o, out);
    }
    if (table->parsed()) {
      if (o.format.empty()) o.format = "plain";
      return cmd_table(o, out);
    }
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (bench_cmd->parsed()) {
      if (o.format.empty()) o.format = "csv";
      if (bench_cmd->count("--strategy") == 0) o.strategy = "all";
      return cmd_bench(o, out, err);
    }
    if (o.format.empty()) o.format = "plain";
    return cmd_float_error(o, out);
  } catch (const InvalidIndex& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Overflow& e) {
    err << "overflow: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace rhn::cli
