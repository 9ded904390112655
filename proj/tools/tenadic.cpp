// Command-line front end: construct the sparse 10-adic power of two, emit
// the statistics tables, and run the verification and oracle suites.

#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tenadic/forceability.hpp"
#include "tenadic/greedy_engine.hpp"
#include "tenadic/oracle.hpp"
#include "tenadic/record_io.hpp"
#include "tenadic/stats_report.hpp"
#include "tenadic/verify.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

void handle_sigint(int) { g_interrupted.store(true); }

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

void apply_kernel_choice(const std::string& kernel) {
  using tenadic::kernel::Simd;
  if (kernel == "auto") return;
  const Simd want = kernel == "avx2" ? Simd::kAvx2 : Simd::kScalar;
  if (!tenadic::kernel::select(want)) {
    throw std::runtime_error("kernel '" + kernel +
                             "' is not supported on this CPU");
  }
}

struct StatsArgs {
  std::string record_path;
  std::string table = "all";
  std::string slice = "q4";
  int prefix = 0;
  bool include_seed = false;
  std::string format = "text";
  std::string output;
};

std::string render_gap_text(const tenadic::GapHistogram& hist) {
  std::string out = "Gap Size  Frequency  Weighted Sum\n";
  const int max_gap = hist.counts.empty() ? 0 : hist.counts.rbegin()->first;
  char line[64];
  for (int g = 0; g <= max_gap; ++g) {
    const auto it = hist.counts.find(g);
    const long long c = it == hist.counts.end() ? 0 : it->second;
    std::snprintf(line, sizeof line, "%8d %10lld %13lld\n", g, c, c * g);
    out += line;
  }
  out += "Average   " + tenadic::format_rational(hist.average, 9) + "\n";
  return out;
}

std::string render_digit_text(
    const std::map<int, tenadic::DigitFrequency>& freq) {
  std::string out = "Digit  Frequency  Proportion\n";
  long long total = 0;
  char line[64];
  for (const auto& [digit, f] : freq) {
    std::snprintf(line, sizeof line, "%5d %10lld       %s\n", digit, f.count,
                  tenadic::format_rational(f.proportion, 3).c_str());
    out += line;
    total += f.count;
  }
  out += "Total " + std::to_string(total) + "\n";
  return out;
}

std::string render_matrix_text(const tenadic::DigitGapMatrix& matrix,
                               bool probabilities) {
  std::string out = "Digit";
  char cell[32];
  for (int g = 2; g <= matrix.max_gap; ++g) {
    std::snprintf(cell, sizeof cell, "%7d", g);
    out += cell;
  }
  out += "\n";
  for (const auto& [digit, row] : matrix.counts) {
    std::snprintf(cell, sizeof cell, "%5d", digit);
    out += cell;
    for (int g = 2; g <= matrix.max_gap; ++g) {
      if (probabilities) {
        std::snprintf(
            cell, sizeof cell, "%7s",
            tenadic::format_rational(matrix.probability(digit, g), 3).c_str());
      } else {
        std::snprintf(cell, sizeof cell, "%7lld", matrix.cell(digit, g));
      }
      out += cell;
    }
    out += "\n";
  }
  return out;
}

int cmd_stats(const StatsArgs& args) {
  const tenadic::RunRecord record = tenadic::load_record(args.record_path);
  const tenadic::Slice slice = tenadic::slice_from_name(args.slice);
  std::string text;
  tenadic::OrderedJson bundle = tenadic::OrderedJson::array();

  const bool want_gaps = args.table == "gaps" || args.table == "all";
  const bool want_digits = args.table == "digits" || args.table == "all";
  const bool want_matrix = args.table == "matrix" || args.table == "all";
  const bool want_probs =
      args.table == "probabilities" || args.table == "all";

  if (want_gaps) {
    const auto hist = tenadic::gap_histogram(record, slice, args.prefix);
    if (args.format == "csv") {
      text += tenadic::gap_table_csv(hist);
    } else if (args.format == "json") {
      bundle.push_back(tenadic::gap_table_json(hist, args.slice));
    } else {
      text += render_gap_text(hist);
    }
  }
  if (want_digits) {
    const auto freq =
        tenadic::digit_frequency(record, args.prefix, args.include_seed);
    if (args.format == "csv") {
      if (!text.empty()) text += "\n";
      text += tenadic::digit_table_csv(freq);
    } else if (args.format == "json") {
      bundle.push_back(tenadic::digit_table_json(freq));
    } else {
      if (!text.empty()) text += "\n";
      text += render_digit_text(freq);
    }
  }
  if (want_matrix || want_probs) {
    const auto matrix = tenadic::digit_gap_matrix(record, args.prefix);
    for (const bool probabilities : {false, true}) {
      if (probabilities && !want_probs) continue;
      if (!probabilities && !want_matrix) continue;
      if (args.format == "csv") {
        if (!text.empty()) text += "\n";
        text += tenadic::matrix_csv(matrix, probabilities);
      } else if (args.format == "json") {
        bundle.push_back(tenadic::matrix_json(matrix, probabilities));
      } else {
        if (!text.empty()) text += "\n";
        text += render_matrix_text(matrix, probabilities);
      }
    }
  }
  if (args.format == "json") {
    text = bundle.dump(2) + "\n";
  }
  write_output(text, args.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Greedy construction of a 10-adic power of two with locally maximal "
      "zero runs, with statistics, verification, and brute-force oracle"};
  app.require_subcommand(1);
  std::string kernel = "auto";
  app.add_option("--kernel", kernel, "Limb kernel: auto, scalar, avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  // run ----------------------------------------------------------------
  auto* run_cmd =
      app.add_subcommand("run", "Run the greedy construction, write a record");
  tenadic::RunConfig run_config;
  std::string run_output;
  bool run_quiet = false;
  run_cmd->add_option("--p1", run_config.p1, "Seed exponent (default 3)");
  run_cmd->add_option("--digits", run_config.target_digits,
                      "Total nonzero digits to construct, seed included");
  run_cmd->add_option("--lookahead", run_config.lookahead,
                      "Forced-run cap per candidate probe");
  run_cmd->add_option("--tie-depth", run_config.tie_depth,
                      "Extra lookahead when probes tie at the cap");
  run_cmd->add_option("--headroom", run_config.headroom,
                      "Working digits kept beyond the frontier");
  run_cmd->add_option("--working-digits", run_config.working_digits,
                      "Override the working precision (0 = automatic)");
  run_cmd->add_option("--output,-o", run_output,
                      "Record file path ('-' for stdout)");
  run_cmd->add_flag("--quiet", run_quiet, "Suppress progress on stderr");

  // stats --------------------------------------------------------------
  auto* stats_cmd =
      app.add_subcommand("stats", "Emit statistics tables from a record");
  StatsArgs stats_args;
  stats_cmd->add_option("--record,-r", stats_args.record_path, "Record file")
      ->required();
  stats_cmd
      ->add_option("--table", stats_args.table,
                   "gaps, digits, matrix, probabilities, or all")
      ->check(
          CLI::IsMember({"gaps", "digits", "matrix", "probabilities", "all"}));
  stats_cmd->add_option("--slice", stats_args.slice,
                        "Cumulative quartile: q1..q4 or full")
      ->check(CLI::IsMember({"q1", "q2", "q3", "q4", "full"}));
  stats_cmd->add_option("--prefix", stats_args.prefix,
                        "Use only the first N found digits (0 = all)");
  stats_cmd->add_flag("--include-seed", stats_args.include_seed,
                      "Count the seed digit in the frequency table");
  stats_cmd->add_option("--format", stats_args.format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  stats_cmd->add_option("--output,-o", stats_args.output, "Output path");

  // verify ---------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check run invariants, forceability structure, and consistency");
  std::string verify_record_path;
  std::vector<std::uint64_t> verify_p1{3};
  int verify_digits = 200;
  bool verify_fresh_flag = false;
  bool verify_rerun = false;
  bool verify_no_corollaries = false;
  std::string verify_output;
  verify_cmd->add_option("--record,-r", verify_record_path,
                         "Record file to verify");
  verify_cmd->add_flag("--fresh", verify_fresh_flag,
                       "Run the engine fresh instead of loading a record");
  verify_cmd->add_option("--p1", verify_p1,
                         "Seed exponent(s) for fresh runs (repeatable)");
  verify_cmd->add_option("--digits", verify_digits,
                         "Total digits for fresh runs");
  verify_cmd->add_flag("--rerun", verify_rerun,
                       "Also re-run the engine and compare byte-for-byte");
  verify_cmd->add_flag("--no-corollaries", verify_no_corollaries,
                       "Skip the per-frontier corollary suite");
  verify_cmd->add_option("--output,-o", verify_output, "Summary output path");

  // oracle ---------------------------------------------------------------
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Brute-force verification against full integers");
  tenadic::oracle::SuiteConfig oracle_config;
  std::string oracle_output;
  oracle_cmd->add_option("--bound", oracle_config.bound,
                         "Largest exponent scanned exhaustively");
  oracle_cmd->add_option("--max-k", oracle_config.max_k,
                         "Deepest trailing-digit precision in the scan");
  oracle_cmd->add_option("--prefix-depth", oracle_config.prefix_depth,
                         "Greedy prefix depth to confirm (1..4)");
  oracle_cmd->add_option("--parity-samples", oracle_config.parity_samples,
                         "Random five-candidate parity cases");
  oracle_cmd->add_option("--seed", oracle_config.seed,
                         "Seed for the randomized echo");
  oracle_cmd->add_option("--output,-o", oracle_output, "Summary output path");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_kernel_choice(kernel);

    if (*run_cmd) {
      std::signal(SIGINT, handle_sigint);
      long long reported = 0;
      tenadic::FrontierObserver progress;
      if (!run_quiet) {
        progress = [&](const tenadic::Frontier& frontier) {
          if (frontier.digit_count() - reported >= 50) {
            reported = frontier.digit_count();
            std::cerr << "digits " << frontier.digit_count() << ", level "
                      << frontier.position() << "\n";
          }
        };
      }
      const tenadic::RunRecord record =
          tenadic::run(run_config, progress, &g_interrupted);
      if (record.incomplete) {
        std::cerr << "interrupted; writing partial record\n";
      }
      write_output(tenadic::record_to_string(record), run_output);
      if (!run_quiet) {
        std::cerr << "done: " << record.digits.size() << " digits, level "
                  << (record.digits.back().position + record.gaps.back() + 1)
                  << "\n";
      }
      return record.incomplete ? 3 : 0;
    }

    if (*stats_cmd) {
      return cmd_stats(stats_args);
    }

    if (*verify_cmd) {
      tenadic::VerifyOptions options;
      options.check_corollaries = !verify_no_corollaries;
      options.check_rerun_determinism = verify_rerun;
      std::string text;
      bool pass = true;
      if (verify_fresh_flag || verify_record_path.empty()) {
        for (const std::uint64_t p1 : verify_p1) {
          tenadic::RunConfig cfg;
          cfg.p1 = p1;
          cfg.target_digits = verify_digits;
          const tenadic::VerifySummary summary =
              tenadic::verify_fresh(cfg, options);
          text += "p1=" + std::to_string(p1) + "\n" + summary.to_text();
          pass = pass && summary.pass;
        }
      } else {
        const tenadic::RunRecord record =
            tenadic::load_record(verify_record_path);
        const tenadic::VerifySummary summary =
            tenadic::verify_record(record, options);
        text = summary.to_text();
        pass = summary.pass;
      }
      write_output(text, verify_output);
      return pass ? 0 : 1;
    }

    if (*oracle_cmd) {
      const tenadic::oracle::OracleReport report =
          tenadic::oracle::default_suite(oracle_config);
      std::string text = "scope: " + report.scope + "\n";
      for (const auto& check : report.checks) {
        text += std::string(check.pass ? "[pass] " : "[FAIL] ") + check.name +
                " (" + check.params + "): " + check.witness + "\n";
      }
      text += report.all_pass() ? "oracle suite passed\n"
                                : "ORACLE SUITE FAILED\n";
      write_output(text, oracle_output);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
