// Copyright 2026 The qcost authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qcost/bench.hpp"
#include "qcost/cost.hpp"
#include "qcost/io.hpp"
#include "qcost/passes.hpp"
#include "qcost/simulate.hpp"
#include "qcost/templates.hpp"

namespace {

constexpr int kExitNotEquivalent = 1;
constexpr int kExitParseError = 2;
constexpr int kExitVerification = 3;
constexpr int kExitOracleTooLarge = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qcost::ParseError(0, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

struct OptimizeJob {
  std::string input;
  std::string circuit_text;
  qcost::CostReport report;
  qcost::PassTrace trace;
  int final_cost = 0;
};

OptimizeJob run_optimize(const std::string& path,
                         const std::vector<qcost::Template>& extra,
                         const qcost::PassOptions& opts) {
  OptimizeJob job;
  job.input = path;
  const qcost::Circuit circuit = qcost::parse_circuit(read_file(path));
  qcost::PipelineOutcome outcome = qcost::run_pipeline(circuit, extra, opts);
  job.final_cost = qcost::quantum_cost(outcome.circuit);
  job.report.gate_count = static_cast<int>(outcome.pre_optimized.size());
  job.report.linear_cost = qcost::linear_cost(outcome.pre_optimized);
  job.report.quantum_cost = job.final_cost;
  job.report.garbage_bits = static_cast<int>(outcome.circuit.garbage_count());
  job.report.constant_inputs =
      static_cast<int>(outcome.circuit.constant_count());
  job.report.total_cost =
      job.report.gate_count + job.report.garbage_bits + job.report.quantum_cost;
  job.trace = std::move(outcome.trace);
  job.circuit_text = qcost::write_circuit(outcome.circuit, /*allow_merged=*/true);
  return job;
}

int classify_exception(const std::exception& e) {
  if (dynamic_cast<const qcost::OracleTooLarge*>(&e)) return kExitOracleTooLarge;
  if (dynamic_cast<const qcost::VerificationError*>(&e)) return kExitVerification;
  if (dynamic_cast<const qcost::ParseError*>(&e)) return kExitParseError;
  if (dynamic_cast<const qcost::Error*>(&e)) return kExitParseError;
  return kExitParseError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum cost minimizer for reversible and quantum circuits"};
  app.require_subcommand(1);

  // ---- optimize ----
  auto* cmd_opt = app.add_subcommand(
      "optimize", "run the full cost-minimization pipeline on circuit files");
  std::vector<std::string> opt_inputs;
  std::string opt_out, opt_out_dir, opt_report, opt_report_dir, opt_templates;
  std::string opt_mode = "full";
  bool opt_skip_pre = false, opt_no_verify = false;
  int opt_max_iters = 20, opt_move_window = 8;
  cmd_opt->add_option("inputs", opt_inputs, "circuit file(s)")->required();
  cmd_opt->add_option("-o,--out", opt_out, "optimized circuit output (single input)");
  cmd_opt->add_option("--out-dir", opt_out_dir, "directory for optimized circuits");
  cmd_opt->add_option("--report", opt_report, "JSON report path (single input)");
  cmd_opt->add_option("--report-dir", opt_report_dir, "directory for JSON reports");
  cmd_opt->add_option("--templates", opt_templates, "extra template file");
  cmd_opt->add_flag("--skip-pre-opt", opt_skip_pre,
                    "skip the reversible-level pre-optimization");
  cmd_opt->add_option("--max-iters", opt_max_iters, "rewrite round limit");
  cmd_opt->add_option("--move-window", opt_move_window,
                      "commutation moves allowed when searching adjacency");
  cmd_opt->add_flag("--no-verify", opt_no_verify,
                    "skip the per-pass equivalence checks");
  cmd_opt->add_option("--mode", opt_mode, "verification mode: full|primary")
      ->check(CLI::IsMember({"full", "primary"}));

  // ---- cost ----
  auto* cmd_cost = app.add_subcommand(
      "cost", "print the raw cost report (decompose + merge, no rewriting)");
  std::string cost_input;
  cmd_cost->add_option("input", cost_input, "circuit file")->required();

  // ---- check ----
  auto* cmd_check =
      app.add_subcommand("check", "decide functional equivalence of two circuits");
  std::string check_a, check_b, check_mode = "full";
  cmd_check->add_option("a", check_a, "first circuit file")->required();
  cmd_check->add_option("b", check_b, "second circuit file")->required();
  cmd_check->add_option("--mode", check_mode, "full|primary")
      ->check(CLI::IsMember({"full", "primary"}));

  // ---- templates ----
  auto* cmd_tmpl =
      app.add_subcommand("templates", "list built-in or validate user templates");
  std::string tmpl_library = "all", tmpl_file;
  cmd_tmpl->add_option("--library", tmpl_library, "nct|ncv|all")
      ->check(CLI::IsMember({"nct", "ncv", "all"}));
  cmd_tmpl->add_option("--file", tmpl_file, "template file to validate");

  // ---- bench ----
  auto* cmd_bench = app.add_subcommand(
      "bench", "reproduce the shipped cost fixtures and report pass/fail");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_opt) {
      qcost::PassOptions opts;
      opts.skip_pre_optimization = opt_skip_pre;
      opts.max_iterations = opt_max_iters;
      opts.move_window = opt_move_window;
      opts.verify_each_pass = !opt_no_verify;
      std::vector<qcost::Template> extra;
      if (!opt_templates.empty())
        extra = qcost::load_templates(read_file(opt_templates));

      std::vector<std::future<OptimizeJob>> futures;
      for (const auto& path : opt_inputs)
        futures.push_back(std::async(std::launch::async, run_optimize, path,
                                     extra, opts));
      for (std::size_t i = 0; i < futures.size(); ++i) {
        OptimizeJob job = futures[i].get();
        const auto stem =
            std::filesystem::path(job.input).stem().string();
        std::string out_path = opt_out;
        if (!opt_out_dir.empty())
          out_path = (std::filesystem::path(opt_out_dir) / (stem + ".opt.real"))
                         .string();
        if (!out_path.empty()) write_file(out_path, job.circuit_text);
        std::string report_path = opt_report;
        if (!opt_report_dir.empty())
          report_path =
              (std::filesystem::path(opt_report_dir) / (stem + ".report.json"))
                  .string();
        if (!report_path.empty())
          write_file(report_path, qcost::write_report(job.report, job.trace));
        if (opt_inputs.size() > 1) std::cout << job.input << ": ";
        std::cout << "quantum_cost " << job.final_cost << "\n";
      }
      return 0;
    }

    if (*cmd_cost) {
      const qcost::Circuit circuit = qcost::parse_circuit(read_file(cost_input));
      std::cout << qcost::write_report(qcost::report(circuit), {});
      return 0;
    }

    if (*cmd_check) {
      const qcost::Circuit a = qcost::parse_circuit(read_file(check_a));
      const qcost::Circuit b = qcost::parse_circuit(read_file(check_b));
      const auto mode = check_mode == "full"
                            ? qcost::EquivalenceMode::kFull
                            : qcost::EquivalenceMode::kPrimaryOutputs;
      const bool same = qcost::equivalent(a, b, mode);
      std::cout << (same ? "equivalent" : "not equivalent") << "\n";
      return same ? 0 : kExitNotEquivalent;
    }

    if (*cmd_tmpl) {
      std::vector<qcost::Template> all;
      if (tmpl_library == "nct" || tmpl_library == "all")
        for (const auto& t : qcost::builtin_set(qcost::TemplateLibrary::NCT))
          all.push_back(t);
      if (tmpl_library == "ncv" || tmpl_library == "all")
        for (const auto& t : qcost::builtin_set(qcost::TemplateLibrary::NCV))
          all.push_back(t);
      if (!tmpl_file.empty())
        for (const auto& t : qcost::load_templates(read_file(tmpl_file)))
          all.push_back(t);
      for (const auto& t : all) {
        std::cout << t.id << " " << qcost::library_name(t.library) << " arity "
                  << t.arity << " gates " << t.gates.size() << " "
                  << (qcost::validate(t) ? "ok" : "INVALID") << "\n";
      }
      return 0;
    }

    if (*cmd_bench) {
      const auto rows = qcost::run_bench();
      bool all_ok = true;
      std::printf("%-20s %10s %6s  %s\n", "fixture", "expected", "got", "status");
      for (const auto& row : rows) {
        std::printf("%-20s %9s%d %6d  %s\n", row.name.c_str(),
                    row.upper_bound ? "<=" : "", row.expected, row.got,
                    row.passed ? "pass" : "FAIL");
        all_ok = all_ok && row.passed;
      }
      return all_ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_exception(e);
  }
  return 0;
}
