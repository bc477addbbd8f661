#pragma once

#include <bnmat/bit_matrix.hpp>
#include <bnmat/cost_model.hpp>
#include <bnmat/dense_matrix.hpp>
#include <bnmat/errors.hpp>
#include <bnmat/random.hpp>

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace bnmat {

inline constexpr std::array<std::string_view, 7> bench_ops = {"and",     "or",      "not",   "transpose",
                                                              "product", "compare", "assign"};

/// One timing measurement.
struct BenchRecord {
  Impl impl = Impl::packed;
  std::string op;
  std::size_t n = 0;
  std::size_t reps = 0;
  std::uint64_t total_ns = 0;
  double ns_per_op = 0;
  std::optional<std::uint64_t> total_ops;
  std::uint64_t seed = 0;
};

inline constexpr std::string_view bench_csv_header = "impl,op,n,reps,total_ns,ns_per_op,total_ops,seed";

inline std::string to_csv_row(const BenchRecord& r) {
  char mean[64];
  std::snprintf(mean, sizeof mean, "%.3f", r.ns_per_op);
  return std::string(to_string(r.impl)) + ',' + r.op + ',' + std::to_string(r.n) + ',' + std::to_string(r.reps) +
         ',' + std::to_string(r.total_ns) + ',' + mean + ',' +
         (r.total_ops ? std::to_string(*r.total_ops) : std::string()) + ',' + std::to_string(r.seed);
}

/// Bytes of matrix payload for an n x n matrix in the given representation.
inline std::size_t payload_bytes(Impl impl, std::size_t n) {
  return impl == Impl::packed ? n * BitMatrix::words_for(n) * sizeof(BitMatrix::word_type)
                              : n * n * sizeof(DenseMatrix::cell_type);
}

namespace detail {

// Keeps the optimiser from discarding a benchmarked result.
template <class T>
inline void keep_alive(const T& value) {
  asm volatile("" : : "r"(&value) : "memory");
}

template <class Matrix, class Body>
std::uint64_t time_reps(std::size_t reps, std::size_t warmup, Body body) {
  for (std::size_t r = 0; r < warmup; ++r) body();
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t r = 0; r < reps; ++r) body();
  const auto stop = std::chrono::steady_clock::now();
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

template <class Matrix, class Ops>
std::uint64_t time_op(std::string_view op, const Matrix& a, const Matrix& b, std::size_t reps, std::size_t warmup,
                      Ops ops) {
  if (op == "and") return time_reps<Matrix>(reps, warmup, [&] { keep_alive(ops.and_(a, b)); });
  if (op == "or") return time_reps<Matrix>(reps, warmup, [&] { keep_alive(ops.or_(a, b)); });
  if (op == "not") return time_reps<Matrix>(reps, warmup, [&] { keep_alive(ops.not_(a)); });
  if (op == "transpose") return time_reps<Matrix>(reps, warmup, [&] { keep_alive(ops.transpose(a)); });
  if (op == "product") return time_reps<Matrix>(reps, warmup, [&] { keep_alive(ops.product(a, b)); });
  if (op == "compare") return time_reps<Matrix>(reps, warmup, [&] { keep_alive(ops.compare(a, b)); });
  Matrix dst(a.dimension());
  return time_reps<Matrix>(reps, warmup, [&] {
    ops.assign(dst, a);
    keep_alive(dst);
  });
}

struct PackedBenchOps {
  BitMatrix and_(const BitMatrix& a, const BitMatrix& b) const { return elementwise_and(a, b); }
  BitMatrix or_(const BitMatrix& a, const BitMatrix& b) const { return elementwise_or(a, b); }
  BitMatrix not_(const BitMatrix& a) const { return negate(a); }
  BitMatrix transpose(const BitMatrix& a) const { return bnmat::transpose(a); }
  BitMatrix product(const BitMatrix& a, const BitMatrix& b) const { return bnmat::product(a, b); }
  Ordering compare(const BitMatrix& a, const BitMatrix& b) const { return bnmat::compare(a, b); }
  void assign(BitMatrix& d, const BitMatrix& s) const { copy_into(d, s); }
};

struct DenseBenchOps {
  DenseMatrix and_(const DenseMatrix& a, const DenseMatrix& b) const { return dense_and(a, b); }
  DenseMatrix or_(const DenseMatrix& a, const DenseMatrix& b) const { return dense_or(a, b); }
  DenseMatrix not_(const DenseMatrix& a) const { return dense_not(a); }
  DenseMatrix transpose(const DenseMatrix& a) const { return dense_transpose(a); }
  DenseMatrix product(const DenseMatrix& a, const DenseMatrix& b) const { return dense_product(a, b); }
  Ordering compare(const DenseMatrix& a, const DenseMatrix& b) const { return dense_compare(a, b); }
  void assign(DenseMatrix& d, const DenseMatrix& s) const { dense_copy_into(d, s); }
};

}  // namespace detail

inline void require_bench_op(std::string_view op) {
  for (const auto known : bench_ops)
    if (known == op) return;
  throw UsageError("unknown operation '" + std::string(op) + "'");
}

struct BenchSpec {
  Impl impl = Impl::packed;
  std::string op;
  std::size_t n = 0;
  std::size_t reps = 1;
  std::size_t warmup = 3;
  std::uint64_t seed = 1;
  bool with_counts = false;
};

/// Times `reps` executions of one operation on inputs generated beforehand
/// from the seed. Warm-up executions are discarded.
inline BenchRecord run_benchmark(const BenchSpec& spec) {
  require_bench_op(spec.op);
  if (spec.reps < 1) throw UsageError("--reps must be at least 1");
  if (spec.n < 1 || spec.n > BitMatrix::max_dimension) throw UsageError("size out of range");
  Rng rng(spec.seed);
  const BitMatrix a = random_bit_matrix(spec.n, rng);
  const BitMatrix b = random_bit_matrix(spec.n, rng);

  BenchRecord rec;
  rec.impl = spec.impl;
  rec.op = spec.op;
  rec.n = spec.n;
  rec.reps = spec.reps;
  rec.seed = spec.seed;
  if (spec.impl == Impl::packed) {
    rec.total_ns = detail::time_op(spec.op, a, b, spec.reps, spec.warmup, detail::PackedBenchOps{});
  } else {
    const DenseMatrix da = from_packed(a);
    const DenseMatrix db = from_packed(b);
    rec.total_ns = detail::time_op(spec.op, da, db, spec.reps, spec.warmup, detail::DenseBenchOps{});
  }
  rec.ns_per_op = static_cast<double>(rec.total_ns) / static_cast<double>(spec.reps);
  if (spec.with_counts) {
    // The timed packed "not" is the word-parallel one.
    const std::string counted = spec.impl == Impl::packed && spec.op == "not" ? "not-fast" : spec.op;
    rec.total_ops = counted_run(spec.impl, counted, spec.n, spec.seed).total_ops();
  }
  return rec;
}

}  // namespace bnmat
