// Copyright 2026 The qadd Authors.
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

// qadd: build, evaluate, verify and analyze quaternary adder netlists.
//
// Exit status: 0 success, 1 mismatch or output failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qadd/qadd.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct output_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

qadd::adder_kind parse_kind(const std::string& text) {
  auto kind = qadd::adder_kind_from_string(text);
  if (!kind) {
    throw usage_error("unknown adder kind '" + text + "'");
  }
  return *kind;
}

struct spec_flags {
  std::string kind;
  std::size_t width = 0;
  std::size_t sparsity = 4;
  std::optional<std::size_t> block;

  void attach(CLI::App* app) {
    app->add_option("--kind", kind, "ripple | single | tree | sparse | hybrid")->required();
    app->add_option("--width", width, "number of qudits")->required();
    app->add_option("--sparsity", sparsity, "sparse adder: qudits per block")->capture_default_str();
    app->add_option("--block", block, "hybrid adder: qudits per block (default min(4, width))");
  }

  qadd::adder_spec spec() const {
    qadd::adder_spec s{parse_kind(kind), width, sparsity, block.value_or(std::min<std::size_t>(4, width))};
    s.validate();
    return s;
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw output_error("cannot open '" + path + "' for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw output_error("write to '" + path + "' failed");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw usage_error("cannot read '" + path + "'");
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Accepts "a..b", "a,b,c" or a single width.
std::vector<std::size_t> parse_widths(const std::string& text) {
  std::vector<std::size_t> out;
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw usage_error("bad width '" + s + "' in '" + text + "'");
    }
    const auto v = std::stoull(s);
    if (v < 1) {
      throw usage_error("widths must be positive");
    }
    return v;
  };
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = number(text.substr(0, dots));
    const auto hi = number(text.substr(dots + 2));
    if (lo > hi) {
      throw usage_error("empty width range '" + text + "'");
    }
    for (auto n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    out.push_back(number(item));
  }
  if (out.empty()) {
    throw usage_error("no widths given");
  }
  return out;
}

int cmd_build(const spec_flags& flags, const std::string& out, const std::string& format) {
  const auto spec = flags.spec();
  const auto nl = qadd::build(spec);
  const auto conv = qadd::documented_conventions(spec.kind);
  const auto timing = qadd::measure(nl, conv.delay_scope, conv.delay);
  std::size_t gates = 0;
  for (const auto& n : nl.nodes()) {
    if (!qadd::is_source(n.kind)) ++gates;
  }
  const auto document = format == "dot" ? qadd::export_dot(nl) : qadd::export_json(nl);
  std::ostringstream summary;
  summary << qadd::to_string(spec.kind) << " width=" << spec.width << " gates=" << gates
          << " depth=" << timing.stage_depth << '\n';
  if (out.empty()) {
    std::cout << document;
    std::cerr << summary.str();
  } else {
    write_file(out, document);
    std::cout << summary.str();
  }
  return exit_ok;
}

int cmd_eval(const std::string& path, const std::string& a_text, const std::string& b_text, int cin) {
  const auto nl = qadd::import_json(read_file(path));
  const auto a = qadd::qword::from_msd_string(a_text);
  const auto b = qadd::qword::from_msd_string(b_text);
  if (a.width() != nl.width() || b.width() != nl.width()) {
    throw usage_error("operands must have exactly " + std::to_string(nl.width()) + " digits (got " +
                      std::to_string(a.width()) + " and " + std::to_string(b.width()) + ")");
  }
  const auto result = nl.run(a, b, qadd::qudit{cin});
  std::cout << "S=" << result.sum.to_msd_string() << " C=" << result.cout << '\n';
  return exit_ok;
}

int cmd_verify(const spec_flags& flags, bool exhaustive, std::optional<std::uint64_t> trials, std::uint64_t seed,
               std::size_t bound, const std::string& out) {
  const auto spec = flags.spec();
  if (exhaustive == trials.has_value()) {
    throw usage_error("choose exactly one of --exhaustive or --random T");
  }
  const auto nl = qadd::build(spec);
  const auto report = exhaustive ? qadd::check_exhaustive(nl, bound) : qadd::check_random(nl, *trials, seed);
  const auto text = qadd::export_json(report);
  std::cout << text;
  if (!out.empty()) {
    write_file(out, text);
  }
  return report.passed() ? exit_ok : exit_mismatch;
}

void print_notes(const qadd::comparison_row& row) {
  for (const auto& note : row.notes) {
    std::cout << "# " << note << '\n';
  }
}

int cmd_analyze(const spec_flags& flags, const std::string& csv) {
  const auto spec = flags.spec();
  const auto row = qadd::compare(spec);
  std::ostringstream table;
  table << qadd::sweep_header() << '\n' << qadd::csv_line(row) << '\n';
  std::cout << table.str();
  print_notes(row);
  if (!csv.empty()) {
    write_file(csv, table.str());
  }
  const bool delay_ok = !row.delay_dev || row.delay_dev->absolute == 0;
  return delay_ok ? exit_ok : exit_mismatch;
}

int cmd_sweep(const std::string& kinds_text, const std::string& widths_text, const std::string& csv,
              const std::string& mask, std::size_t sparsity, std::size_t block, unsigned threads) {
  std::vector<qadd::adder_kind> kinds;
  std::stringstream ss(kinds_text);
  for (std::string item; std::getline(ss, item, ',');) {
    kinds.push_back(parse_kind(item));
  }
  if (kinds.empty()) {
    throw usage_error("no kinds given");
  }
  qadd::sweep_options options;
  options.sparsity = sparsity;
  options.block = block;
  options.threads = threads;
  if (mask == "included") {
    options.mask = qadd::mask_counting::included;
  } else if (mask == "excluded") {
    options.mask = qadd::mask_counting::excluded;
  } else if (!mask.empty()) {
    throw usage_error("--mask must be included or excluded");
  }
  const auto rows = qadd::sweep(kinds, parse_widths(widths_text), options);
  std::ostringstream table;
  qadd::write_csv(table, rows);
  if (csv.empty()) {
    std::cout << table.str();
  } else {
    write_file(csv, table.str());
    std::cout << rows.size() << " rows written to " << csv << '\n';
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternary adder laboratory"};
  app.require_subcommand(1);

  spec_flags build_flags;
  std::string build_out, build_format = "json";
  auto* build = app.add_subcommand("build", "generate an adder netlist");
  build_flags.attach(build);
  build->add_option("--out", build_out, "output path (default: standard output)");
  build->add_option("--format", build_format, "json | dot")->check(CLI::IsMember({"json", "dot"}));

  std::string eval_path, eval_a, eval_b;
  int eval_cin = 0;
  auto* eval = app.add_subcommand("eval", "evaluate a netlist document on one input");
  eval->add_option("--netlist", eval_path, "netlist document")->required();
  eval->add_option("--a", eval_a, "operand A, most significant digit first")->required();
  eval->add_option("--b", eval_b, "operand B, most significant digit first")->required();
  eval->add_option("--cin", eval_cin, "carry-in")->required()->check(CLI::IsMember({0, 1}));

  spec_flags verify_flags;
  bool verify_exhaustive = false;
  std::optional<std::uint64_t> verify_trials;
  std::uint64_t verify_seed = 1;
  std::size_t verify_bound = qadd::default_exhaustive_bound;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "check a generated adder against integer addition");
  verify_flags.attach(verify);
  verify->add_flag("--exhaustive", verify_exhaustive, "all input assignments");
  verify->add_option("--random", verify_trials, "number of random vectors")->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "random seed")->capture_default_str();
  verify->add_option("--bound", verify_bound, "largest width allowed in exhaustive mode")->capture_default_str();
  verify->add_option("--out", verify_out, "also write the report here");

  spec_flags analyze_flags;
  std::string analyze_csv;
  auto* analyze = app.add_subcommand("analyze", "compare a measured netlist with its closed form");
  analyze_flags.attach(analyze);
  analyze->add_option("--csv", analyze_csv, "also write the row here");

  std::string sweep_kinds, sweep_widths, sweep_csv, sweep_mask;
  std::size_t sweep_sparsity = 4, sweep_block = 4;
  unsigned sweep_threads = 0;
  auto* sweep = app.add_subcommand("sweep", "tabulate closed forms and measurements over widths");
  sweep->add_option("--kinds", sweep_kinds, "comma-separated kinds")->required();
  sweep->add_option("--widths", sweep_widths, "range a..b or list")->required();
  sweep->add_option("--csv", sweep_csv, "output path (default: standard output)");
  sweep->add_option("--mask", sweep_mask, "override mask counting: included | excluded");
  sweep->add_option("--sparsity", sweep_sparsity, "sparse adder block size")->capture_default_str();
  sweep->add_option("--block", sweep_block, "hybrid block size, clipped to the width")->capture_default_str();
  sweep->add_option("--threads", sweep_threads, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*build) return cmd_build(build_flags, build_out, build_format);
    if (*eval) return cmd_eval(eval_path, eval_a, eval_b, eval_cin);
    if (*verify) {
      return cmd_verify(verify_flags, verify_exhaustive, verify_trials, verify_seed, verify_bound, verify_out);
    }
    if (*analyze) return cmd_analyze(analyze_flags, analyze_csv);
    if (*sweep) {
      return cmd_sweep(sweep_kinds, sweep_widths, sweep_csv, sweep_mask, sweep_sparsity, sweep_block, sweep_threads);
    }
  } catch (const output_error& e) {
    std::cerr << "qadd: " << e.what() << '\n';
    return exit_mismatch;
  } catch (const usage_error& e) {
    std::cerr << "qadd: " << e.what() << '\n';
    return exit_usage;
  } catch (const qadd::error& e) {
    std::cerr << "qadd: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
