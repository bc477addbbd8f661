// bnmat: verification, benchmarking, operation counting and format conversion
// for packed vs dense boolean matrices.

#include <bnmat/commands.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packed vs dense boolean matrix toolkit"};
  app.require_subcommand(1);

  int status = bnmat::exit_ok;

  bnmat::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check packed operations against the dense oracle");
  verify->add_option("--sizes", verify_opts.sizes, "Matrix sizes")->delimiter(',');
  verify->add_option("--trials", verify_opts.trials, "Random trials per size");
  verify->add_option("--seed", verify_opts.seed, "Generator seed");

  bnmat::BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Time one operation (CSV on stdout)");
  bench->add_option("--op", bench_opts.op, "and|or|not|transpose|product|compare|assign");
  bench->add_option("--impl", bench_opts.impl, "packed|dense|both");
  bench->add_option("--sizes", bench_opts.sizes, "Matrix sizes")->delimiter(',');
  bench->add_option("--reps", bench_opts.reps, "Timed repetitions");
  bench->add_option("--warmup", bench_opts.warmup, "Discarded warm-up repetitions");
  bench->add_option("--seed", bench_opts.seed, "Generator seed");
  bench->add_option("--format", bench_opts.format, "Output format (csv)");
  bench->add_flag("--mem", bench_opts.mem, "Print payload bytes per implementation to stderr");
  bench->add_flag("--with-counts", bench_opts.with_counts, "Fill total_ops from the cost model");

  bnmat::CountOptions count_opts;
  auto* count = app.add_subcommand("count", "Count primitive operations and fit the growth exponent");
  count->add_option("--op", count_opts.op, "and|or|not|not-fast|transpose|product|compare|compare-worst|assign");
  count->add_option("--impl", count_opts.impl, "packed|dense");
  count->add_option("--sizes", count_opts.sizes, "Matrix sizes (at least 3)")->delimiter(',');
  count->add_option("--seed", count_opts.seed, "Generator seed");

  std::string from = "grid";
  std::string to = "tuple";
  std::string convert_input;
  auto* convert = app.add_subcommand("convert", "Convert between grid and tuple text formats");
  convert->add_option("--from", from, "grid|tuple");
  convert->add_option("--to", to, "grid|tuple");
  convert->add_option("input", convert_input, "Input file")->required();

  std::int64_t power_k = 1;
  std::string power_input;
  auto* power = app.add_subcommand("power", "Boolean k-th power of a grid matrix");
  power->add_option("--k", power_k, "Exponent (>= 0)")->required();
  power->add_option("input", power_input, "Input grid file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bnmat::exit_usage;
  }

  auto with_input = [&](const std::string& path, auto run) {
    const auto text = read_file(path);
    if (!text) {
      std::cerr << "error: cannot read " << path << '\n';
      return bnmat::exit_failure;
    }
    return run(*text);
  };

  if (*verify) {
    status = bnmat::cmd_verify(verify_opts, std::cout, std::cerr);
  } else if (*bench) {
    status = bnmat::cmd_bench(bench_opts, std::cout, std::cerr);
  } else if (*count) {
    status = bnmat::cmd_count(count_opts, std::cout, std::cerr);
  } else if (*convert) {
    status = with_input(convert_input,
                        [&](const std::string& text) { return bnmat::cmd_convert(from, to, text, std::cout, std::cerr); });
  } else if (*power) {
    status = with_input(power_input,
                        [&](const std::string& text) { return bnmat::cmd_power(power_k, text, std::cout, std::cerr); });
  }
  return status;
}
