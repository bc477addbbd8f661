#pragma once

// Machine-independent cost model: runs the counted instantiation of an
// algorithm on deterministic random input and reports how many primitive
// integer operations it executed, by category.
//
// Counting convention (applied uniformly to both representations):
//   * every arithmetic, shift, bitwise, logical, comparison and assignment
//     operator in the algorithm body counts once; a compound assignment such as
//     |= counts as the operator plus an assignment;
//   * an if (or ?:) counts as one branch, plus its condition's operators;
//   * a for loop counts the initialisation and final bound check once, and an
//     increment plus a bound check per iteration;
//   * allocating the zero-filled result is not counted.

#include <bnmat/bit_matrix.hpp>
#include <bnmat/dense_matrix.hpp>
#include <bnmat/errors.hpp>
#include <bnmat/op_counter.hpp>
#include <bnmat/random.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace bnmat {

enum class Impl { packed, dense };

constexpr std::string_view to_string(Impl impl) noexcept { return impl == Impl::packed ? "packed" : "dense"; }

inline Impl parse_impl(std::string_view s) {
  if (s == "packed") return Impl::packed;
  if (s == "dense") return Impl::dense;
  throw UsageError("unknown implementation '" + std::string(s) + "' (expected packed or dense)");
}

/// Operation names accepted by counted_run. "not" is the per-bit negation on
/// the packed side; "not-fast" is the word-parallel one (packed only).
/// "compare-worst" compares a matrix with an equal copy, forcing a full scan.
inline constexpr std::array<std::string_view, 9> counted_ops = {
    "and", "or", "not", "not-fast", "transpose", "product", "compare", "compare-worst", "assign"};

inline constexpr std::size_t max_counted_dimension = 4096;

/// Per-bit negation: reads every element and writes its complement into a
/// fresh matrix. Same result as negate(); kept to measure the O(n^2) per-bit
/// algorithm.
template <OpCounting Counter>
BitMatrix negate_per_bit(const BitMatrix& a, Counter& ops) {
  const std::size_t n = a.dimension();
  BitMatrix out(n);
  detail::count_loop_frame(ops);
  for (std::size_t i = 0; i < n; ++i) {
    detail::count_loop_frame(ops);
    for (std::size_t j = 0; j < n; ++j) {
      ops.add(OpCategory::branch);
      if (detail::read_bit(a, i, j, ops))
        detail::write_zero(out, i, j, ops);
      else
        detail::write_one(out, i, j, ops);
      detail::count_loop_step(ops);
    }
    detail::count_loop_step(ops);
  }
  return out;
}

inline BitMatrix negate_per_bit(const BitMatrix& a) {
  NullCounter ops;
  return negate_per_bit(a, ops);
}

struct CountReport {
  Impl impl = Impl::packed;
  std::string op;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  OpCounter counts;

  std::uint64_t total_ops() const noexcept { return counts.total(); }

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

inline std::string count_csv_header() {
  std::string h = "impl,op,n,seed,total_ops";
  for (const auto name : op_category_names) {
    h += ',';
    h += name;
  }
  return h;
}

inline std::string to_csv_row(const CountReport& r) {
  std::string row = std::string(to_string(r.impl)) + ',' + r.op + ',' + std::to_string(r.n) + ',' +
                    std::to_string(r.seed) + ',' + std::to_string(r.total_ops());
  for (const auto t : r.counts.tallies()) {
    row += ',';
    row += std::to_string(t);
  }
  return row;
}

namespace detail {

inline bool is_counted_op(std::string_view op) {
  for (const auto known : counted_ops)
    if (known == op) return true;
  return false;
}

template <class Matrix>
struct Operands {
  Matrix a;
  Matrix b;
};

inline Operands<BitMatrix> counted_inputs(std::string_view op, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  BitMatrix a = random_bit_matrix(n, rng);
  BitMatrix b = op == "compare-worst" ? a : random_bit_matrix(n, rng);
  return {std::move(a), std::move(b)};
}

inline void count_packed(std::string_view op, const BitMatrix& a, const BitMatrix& b, OpCounter& ops) {
  if (op == "and") {
    elementwise_and(a, b, ops);
  } else if (op == "or") {
    elementwise_or(a, b, ops);
  } else if (op == "not") {
    negate_per_bit(a, ops);
  } else if (op == "not-fast") {
    negate(a, ops);
  } else if (op == "transpose") {
    transpose(a, ops);
  } else if (op == "product") {
    product(a, b, ops);
  } else if (op == "compare" || op == "compare-worst") {
    compare(a, b, ops);
  } else if (op == "assign") {
    BitMatrix dst(a.dimension());
    copy_into(dst, a, ops);
  }
}

inline void count_dense(std::string_view op, const DenseMatrix& a, const DenseMatrix& b, OpCounter& ops) {
  if (op == "and") {
    dense_and(a, b, ops);
  } else if (op == "or") {
    dense_or(a, b, ops);
  } else if (op == "not") {
    dense_not(a, ops);
  } else if (op == "transpose") {
    dense_transpose(a, ops);
  } else if (op == "product") {
    dense_product(a, b, ops);
  } else if (op == "compare" || op == "compare-worst") {
    dense_compare(a, b, ops);
  } else if (op == "assign") {
    DenseMatrix dst(a.dimension());
    dense_copy_into(dst, a, ops);
  } else {
    throw UsageError("operation '" + std::string(op) + "' has no dense variant");
  }
}

}  // namespace detail

/// Runs the counted variant of `op` for `impl` on inputs drawn from `seed`.
/// Identical arguments always produce identical reports.
inline CountReport counted_run(Impl impl, std::string_view op, std::size_t n, std::uint64_t seed) {
  if (!detail::is_counted_op(op)) throw UsageError("unknown operation '" + std::string(op) + "'");
  if (n < 1 || n > max_counted_dimension)
    throw UsageError("size " + std::to_string(n) + " outside [1, " + std::to_string(max_counted_dimension) + "]");
  CountReport report{impl, std::string(op), n, seed, {}};
  const auto in = detail::counted_inputs(op, n, seed);
  if (impl == Impl::packed)
    detail::count_packed(op, in.a, in.b, report.counts);
  else
    detail::count_dense(op, from_packed(in.a), from_packed(in.b), report.counts);
  return report;
}

struct SizeCount {
  double n;
  double count;
};

/// Least-squares slope of log(count) against log(n).
inline double fit_exponent(std::span<const SizeCount> series) {
  if (series.size() < 3) throw UsageError("exponent fit needs at least 3 points");
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!(series[i].n > 0) || !(series[i].count > 0)) throw UsageError("exponent fit needs positive sizes and counts");
    if (i > 0 && !(series[i].n > series[i - 1].n)) throw UsageError("exponent fit needs strictly increasing sizes");
  }
  const double m = static_cast<double>(series.size());
  double sx = 0, sy = 0;
  for (const auto& p : series) {
    sx += std::log(p.n);
    sy += std::log(p.count);
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxy = 0, sxx = 0;
  for (const auto& p : series) {
    const double dx = std::log(p.n) - mx;
    sxy += dx * (std::log(p.count) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace bnmat
