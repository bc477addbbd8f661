#pragma once

// Implementations of the bnmat command-line subcommands. Each returns the
// process exit status: 0 success, 1 verification or parse failure, 2 usage
// error. Argument parsing lives in tools/bnmat.cpp.

#include <bnmat/bench.hpp>
#include <bnmat/bit_matrix.hpp>
#include <bnmat/cost_model.hpp>
#include <bnmat/errors.hpp>
#include <bnmat/matrix_io.hpp>
#include <bnmat/verify.hpp>

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bnmat {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

inline int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err, const PackedOps& packed = {}) {
  VerifyResult result;
  try {
    result = verify(opts, packed);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  if (const auto& m = result.failure) {
    err << "MISMATCH op=" << m->op << " n=" << m->a.dimension() << " trial=" << m->trial << '\n';
    err << "expected (dense oracle):\n" << m->expected;
    if (m->op == "compare") err << '\n';
    err << "actual (packed):\n" << m->actual;
    if (m->op == "compare") err << '\n';
    err << "reproducer operands follow on standard output in grid format\n";
    out << emit_grid(m->a);
    if (m->b) out << emit_grid(*m->b);
    return exit_failure;
  }
  out << "verified " << result.random_cases << " random cases over " << opts.sizes.size() << " sizes";
  if (opts.exhaustive_n2) out << " and " << result.exhaustive_cases << " exhaustive n=2 pairs";
  out << ", " << verified_ops.size() << " operations each: OK\n";
  return exit_ok;
}

struct BenchOptions {
  std::string op = "product";
  std::string impl = "both";
  std::vector<std::size_t> sizes = {64};
  std::size_t reps = 10;
  std::size_t warmup = 3;
  std::uint64_t seed = 1;
  std::string format = "csv";
  bool mem = false;
  bool with_counts = false;
};

inline std::vector<Impl> parse_impl_list(std::string_view impl) {
  if (impl == "both") return {Impl::packed, Impl::dense};
  return {parse_impl(impl)};
}

/// Runs the benchmark grid and writes CSV; records are also returned through
/// `records` when non-null.
inline int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err,
                     std::vector<BenchRecord>* records = nullptr) {
  std::vector<Impl> impls;
  try {
    require_bench_op(opts.op);
    impls = parse_impl_list(opts.impl);
    if (opts.format != "csv") throw UsageError("unsupported --format '" + opts.format + "' (only csv)");
    if (opts.reps < 1) throw UsageError("--reps must be at least 1");
    if (opts.sizes.empty()) throw UsageError("--sizes must name at least one size");
    for (const auto n : opts.sizes)
      if (n < 1 || n > BitMatrix::max_dimension) throw UsageError("size " + std::to_string(n) + " out of range");
    if (opts.with_counts)
      for (const auto n : opts.sizes)
        if (n > max_counted_dimension) throw UsageError("--with-counts supports sizes up to 4096");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  out << bench_csv_header << '\n';
  for (const auto n : opts.sizes) {
    for (const auto impl : impls) {
      if (opts.mem) err << "mem impl=" << to_string(impl) << " n=" << n << " payload_bytes=" << payload_bytes(impl, n) << '\n';
      const BenchRecord rec =
          run_benchmark({impl, opts.op, n, opts.reps, opts.warmup, opts.seed, opts.with_counts});
      out << to_csv_row(rec) << '\n';
      if (records) records->push_back(rec);
    }
  }
  return exit_ok;
}

struct CountOptions {
  std::string op = "product";
  std::string impl = "packed";
  std::vector<std::size_t> sizes = {8, 16, 32, 64};
  std::uint64_t seed = 1;
};

inline int cmd_count(const CountOptions& opts, std::ostream& out, std::ostream& err, double* exponent = nullptr) {
  std::vector<CountReport> reports;
  double fit = 0;
  try {
    const Impl impl = parse_impl(opts.impl);
    if (opts.sizes.size() < 3) throw UsageError("--sizes needs at least 3 sizes to fit an exponent");
    std::vector<SizeCount> series;
    for (const auto n : opts.sizes) {
      reports.push_back(counted_run(impl, opts.op, n, opts.seed));
      series.push_back({static_cast<double>(n), static_cast<double>(reports.back().total_ops())});
    }
    fit = fit_exponent(series);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  out << count_csv_header() << '\n';
  for (const auto& r : reports) out << to_csv_row(r) << '\n';
  char line[64];
  std::snprintf(line, sizeof line, "fit_exponent=%.6f", fit);
  out << line << '\n';
  if (exponent) *exponent = fit;
  return exit_ok;
}

enum class TextFormat { grid, tuple };

inline TextFormat parse_text_format(std::string_view s) {
  if (s == "grid") return TextFormat::grid;
  if (s == "tuple") return TextFormat::tuple;
  throw UsageError("unknown format '" + std::string(s) + "' (expected grid or tuple)");
}

inline int cmd_convert(std::string_view from, std::string_view to, std::string_view text, std::ostream& out,
                       std::ostream& err) {
  TextFormat src{};
  TextFormat dst{};
  try {
    src = parse_text_format(from);
    dst = parse_text_format(to);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  try {
    const BitMatrix m = src == TextFormat::grid ? parse_grid(text) : parse_tuple(text);
    out << (dst == TextFormat::grid ? emit_grid(m) : emit_tuple(m));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_ok;
}

/// Boolean k-th power of a grid matrix by iterated product.
inline BitMatrix boolean_power(const BitMatrix& m, std::uint64_t k) {
  if (k == 0) return BitMatrix::identity(m.dimension());
  BitMatrix acc = m;
  for (std::uint64_t step = 1; step < k; ++step) acc = product(acc, m);
  return acc;
}

inline int cmd_power(std::int64_t k, std::string_view grid_text, std::ostream& out, std::ostream& err) {
  if (k < 0) {
    err << "error: --k must be non-negative\n";
    return exit_usage;
  }
  try {
    out << emit_grid(boolean_power(parse_grid(grid_text), static_cast<std::uint64_t>(k)));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_ok;
}

}  // namespace bnmat
