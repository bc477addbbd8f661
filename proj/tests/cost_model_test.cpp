#include <bnmat/cost_model.hpp>

#include <gtest/gtest.h>

#include <array>
#include <string>
#include <vector>

namespace bnmat {
namespace {

double fitted(Impl impl, const std::string& op, const std::vector<std::size_t>& sizes, std::uint64_t seed = 1) {
  std::vector<SizeCount> series;
  for (const auto n : sizes)
    series.push_back({static_cast<double>(n), static_cast<double>(counted_run(impl, op, n, seed).total_ops())});
  return fit_exponent(series);
}

TEST(FitExponent, PerfectPowers) {
  const std::array<SizeCount, 3> cubic = {{{1, 1}, {2, 8}, {4, 64}}};
  const std::array<SizeCount, 3> linear = {{{1, 1}, {2, 2}, {4, 4}}};
  const std::array<SizeCount, 3> constant = {{{1, 5}, {2, 5}, {4, 5}}};
  EXPECT_NEAR(fit_exponent(cubic), 3.0, 1e-12);
  EXPECT_NEAR(fit_exponent(linear), 1.0, 1e-12);
  EXPECT_NEAR(fit_exponent(constant), 0.0, 1e-12);
}

TEST(FitExponent, RejectsBadSeries) {
  const std::array<SizeCount, 2> two = {{{1, 1}, {2, 2}}};
  const std::array<SizeCount, 3> zero = {{{1, 1}, {2, 0}, {4, 4}}};
  const std::array<SizeCount, 3> unordered = {{{1, 1}, {4, 2}, {2, 4}}};
  EXPECT_THROW(fit_exponent(two), UsageError);
  EXPECT_THROW(fit_exponent(zero), UsageError);
  EXPECT_THROW(fit_exponent(unordered), UsageError);
}

TEST(CountedRun, DenseProductDoublingRatio) {
  for (std::size_t n : {64, 128, 256}) {
    const double big = static_cast<double>(counted_run(Impl::dense, "product", n, 1).total_ops());
    const double half = static_cast<double>(counted_run(Impl::dense, "product", n / 2, 1).total_ops());
    EXPECT_GE(big / half, 7.0) << n;
    EXPECT_LE(big / half, 9.0) << n;
  }
}

TEST(CountedRun, PackedAndDoublingRatio) {
  for (std::size_t n : {16, 32}) {
    const double big = static_cast<double>(counted_run(Impl::packed, "and", 2 * n, 1).total_ops());
    const double small = static_cast<double>(counted_run(Impl::packed, "and", n, 1).total_ops());
    EXPECT_GE(big / small, 1.7) << n;
    EXPECT_LE(big / small, 2.5) << n;
  }
}

TEST(CountedRun, NonDegenerate) {
  for (const auto op : counted_ops) {
    EXPECT_GE(counted_run(Impl::packed, op, 1, 1).total_ops(), 1u) << op;
    if (op != "not-fast") EXPECT_GE(counted_run(Impl::dense, op, 1, 1).total_ops(), 1u) << op;
  }
}

TEST(CountedRun, UsageErrors) {
  EXPECT_THROW(counted_run(Impl::packed, "bogus", 8, 1), UsageError);
  EXPECT_THROW(counted_run(Impl::dense, "not-fast", 8, 1), UsageError);
  EXPECT_THROW(counted_run(Impl::packed, "and", 0, 1), UsageError);
  EXPECT_THROW(counted_run(Impl::packed, "and", max_counted_dimension + 1, 1), UsageError);
  EXPECT_THROW(parse_impl("sparse"), UsageError);
}

TEST(CountedRun, Deterministic) {
  for (const auto op : counted_ops) {
    EXPECT_EQ(counted_run(Impl::packed, op, 37, 99), counted_run(Impl::packed, op, 37, 99)) << op;
    if (op != "not-fast") EXPECT_EQ(counted_run(Impl::dense, op, 21, 99), counted_run(Impl::dense, op, 21, 99)) << op;
  }
}

TEST(CountedRun, TotalIsSumOfCategories) {
  const auto r = counted_run(Impl::packed, "product", 20, 3);
  std::uint64_t sum = 0;
  for (const auto t : r.counts.tallies()) sum += t;
  EXPECT_EQ(r.total_ops(), sum);
  EXPECT_EQ(r.seed, 3u);
  EXPECT_EQ(r.n, 20u);
  EXPECT_EQ(r.op, "product");
}

TEST(CountedRun, MonotoneInSize) {
  // compare on random input exits at the first differing word, so it is left out.
  for (const auto op : counted_ops) {
    if (op == "compare") continue;
    std::uint64_t prev_packed = 0;
    std::uint64_t prev_dense = 0;
    for (std::size_t n = 1; n <= 80; ++n) {
      const auto packed = counted_run(Impl::packed, op, n, 5).total_ops();
      EXPECT_GE(packed, prev_packed) << op << " n=" << n;
      prev_packed = packed;
      if (op == "not-fast") continue;
      const auto dense = counted_run(Impl::dense, op, n, 5).total_ops();
      EXPECT_GE(dense, prev_dense) << op << " n=" << n;
      prev_dense = dense;
    }
  }
}

TEST(CountedRun, CountedNegationsAgree) {
  Rng rng(4);
  for (std::size_t n : {1, 9, 64, 65}) {
    const auto a = random_bit_matrix(n, rng);
    EXPECT_EQ(negate_per_bit(a), negate(a));
  }
}

TEST(CountedRun, CountingDoesNotChangeResults) {
  Rng rng(6);
  const auto a = random_bit_matrix(70, rng, 3);
  const auto b = random_bit_matrix(70, rng, 3);
  OpCounter ops;
  EXPECT_EQ(product(a, b, ops), product(a, b));
  EXPECT_EQ(transpose(a, ops), transpose(a));
  EXPECT_EQ(compare(a, b, ops), compare(a, b));
  EXPECT_GT(ops.total(), 0u);
}

const std::vector<std::size_t> kSingleWord = {8, 16, 32, 64};

TEST(ExponentWindows, Dense) {
  for (const char* op : {"and", "or", "not", "transpose", "compare-worst", "assign"}) {
    const double e = fitted(Impl::dense, op, kSingleWord);
    EXPECT_GE(e, 1.8) << op;
    EXPECT_LE(e, 2.2) << op;
  }
  const double e = fitted(Impl::dense, "product", kSingleWord);
  EXPECT_GE(e, 2.8);
  EXPECT_LE(e, 3.2);
}

TEST(ExponentWindows, Packed) {
  for (const char* op : {"and", "or", "compare-worst", "assign", "not-fast"}) {
    const double e = fitted(Impl::packed, op, kSingleWord);
    EXPECT_GE(e, 0.8) << op;
    EXPECT_LE(e, 1.3) << op;
  }
  for (const char* op : {"transpose", "not"}) {
    const double e = fitted(Impl::packed, op, kSingleWord);
    EXPECT_GE(e, 1.8) << op;
    EXPECT_LE(e, 2.2) << op;
  }
  const double e = fitted(Impl::packed, "product", kSingleWord);
  EXPECT_GE(e, 1.8);
  EXPECT_LE(e, 2.3);
}

// Absolute bounds under the counting convention in cost_model.hpp. A word loop
// costs 4 primitives per word (operator, store, increment, bound check); a
// product pair costs at most 35 + 5 per word including the per-bit transpose.
TEST(WordOpBounds, Elementwise) {
  for (std::size_t n : {1, 2, 7, 63, 64, 65, 128, 200}) {
    const std::uint64_t w = BitMatrix::words_for(n);
    for (const char* op : {"and", "or"}) {
      const auto total = counted_run(Impl::packed, op, n, 2).total_ops();
      EXPECT_LE(total, 4 * n * w + 4) << op << " n=" << n;
    }
  }
}

TEST(WordOpBounds, Product) {
  for (std::size_t n : {1, 2, 7, 63, 64, 65, 128, 200}) {
    const std::uint64_t w = BitMatrix::words_for(n);
    // All-ones operands make every bit write and every pair hit happen.
    OpCounter ops;
    const auto ones = negate(BitMatrix(n));
    product(ones, ones, ops);
    EXPECT_LE(ops.total(), 40 * n * n * w + 12 * n + 8) << n;
  }
}

TEST(CsvSchema, CountReport) {
  EXPECT_EQ(count_csv_header(), "impl,op,n,seed,total_ops,arith,shift,bitwise,logical,assign,branch,compare");
  CountReport r{Impl::dense, "and", 2, 7, {}};
  r.counts.add(OpCategory::logical, 4);
  r.counts.add(OpCategory::assign, 4);
  EXPECT_EQ(to_csv_row(r), "dense,and,2,7,8,0,0,0,4,4,0,0");
}

}  // namespace
}  // namespace bnmat
