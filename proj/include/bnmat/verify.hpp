#pragma once

// Cross-representation verification: every operation is run through the packed
// implementation and the dense oracle on the same random inputs, and the
// results must agree bit for bit.

#include <bnmat/bit_matrix.hpp>
#include <bnmat/dense_matrix.hpp>
#include <bnmat/errors.hpp>
#include <bnmat/matrix_io.hpp>
#include <bnmat/random.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bnmat {

inline constexpr std::array<std::string_view, 6> verified_ops = {"and", "or", "not", "transpose", "product",
                                                                  "compare"};

/// The packed operations under test. Defaults to the library; tests swap in
/// broken variants to check that the harness catches them.
struct PackedOps {
  std::function<BitMatrix(const BitMatrix&, const BitMatrix&)> and_op = [](const BitMatrix& a, const BitMatrix& b) {
    return elementwise_and(a, b);
  };
  std::function<BitMatrix(const BitMatrix&, const BitMatrix&)> or_op = [](const BitMatrix& a, const BitMatrix& b) {
    return elementwise_or(a, b);
  };
  std::function<BitMatrix(const BitMatrix&)> not_op = [](const BitMatrix& a) { return negate(a); };
  std::function<BitMatrix(const BitMatrix&)> transpose_op = [](const BitMatrix& a) { return transpose(a); };
  std::function<BitMatrix(const BitMatrix&, const BitMatrix&)> product_op = [](const BitMatrix& a,
                                                                               const BitMatrix& b) {
    return product(a, b);
  };
  std::function<Ordering(const BitMatrix&, const BitMatrix&)> compare_op = [](const BitMatrix& a,
                                                                             const BitMatrix& b) {
    return compare(a, b);
  };
};

inline const std::vector<std::size_t>& default_verify_sizes() {
  static const std::vector<std::size_t> sizes = {1, 2, 3, 4, 8, 16, 33, 64, 65, 128};
  return sizes;
}

struct VerifyOptions {
  std::vector<std::size_t> sizes = default_verify_sizes();
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  bool exhaustive_n2 = true;
  /// Upper bound on operation re-evaluations spent shrinking a counterexample.
  std::size_t shrink_budget = 4096;
};

inline bool is_unary_op(std::string_view op) { return op == "not" || op == "transpose"; }

struct Mismatch {
  std::string op;
  std::size_t trial = 0;  // 0-based trial index; exhaustive cases report the pair index
  BitMatrix a;
  std::optional<BitMatrix> b;
  std::string expected;  // oracle result: grid text, or an ordering name
  std::string actual;
};

struct VerifyResult {
  std::size_t random_cases = 0;
  std::size_t exhaustive_cases = 0;
  std::optional<Mismatch> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

struct OpOutcome {
  std::string expected;
  std::string actual;
};

/// Runs one operation through both representations; nullopt when they agree.
inline std::optional<OpOutcome> check_op(std::string_view op, const BitMatrix& a, const BitMatrix& b,
                                         const PackedOps& packed) {
  const DenseMatrix da = from_packed(a);
  const DenseMatrix db = from_packed(b);
  if (op == "compare") {
    const Ordering want = dense_compare(da, db);
    const Ordering got = packed.compare_op(a, b);
    if (want == got) return std::nullopt;
    return OpOutcome{to_string(want), to_string(got)};
  }
  BitMatrix got(a.dimension());
  DenseMatrix want(a.dimension());
  if (op == "and") {
    got = packed.and_op(a, b);
    want = dense_and(da, db);
  } else if (op == "or") {
    got = packed.or_op(a, b);
    want = dense_or(da, db);
  } else if (op == "not") {
    got = packed.not_op(a);
    want = dense_not(da);
  } else if (op == "transpose") {
    got = packed.transpose_op(a);
    want = dense_transpose(da);
  } else if (op == "product") {
    got = packed.product_op(a, b);
    want = dense_product(da, db);
  } else {
    throw UsageError("unknown operation '" + std::string(op) + "'");
  }
  if (got.dimension() == want.dimension() && got.padding_clean() && from_packed(got) == want) return std::nullopt;
  return OpOutcome{emit_grid(to_packed(want)), emit_grid(got)};
}

namespace detail {

// Greedily clears set bits of the operands while the mismatch persists.
inline void shrink(Mismatch& m, const PackedOps& packed, std::size_t budget) {
  const bool unary = is_unary_op(m.op);
  BitMatrix b = m.b.value_or(BitMatrix(m.a.dimension()));
  const std::size_t n = m.a.dimension();
  auto try_clear = [&](BitMatrix& target, std::size_t i, std::size_t j) {
    if (budget == 0 || !target.get(i, j)) return;
    --budget;
    target.set(i, j, false);
    if (auto outcome = check_op(m.op, m.a, b, packed)) {
      m.expected = std::move(outcome->expected);
      m.actual = std::move(outcome->actual);
    } else {
      target.set(i, j, true);
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) try_clear(m.a, i, j);
  if (!unary) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) try_clear(b, i, j);
    m.b = std::move(b);
  }
}

inline std::optional<Mismatch> check_all_ops(const BitMatrix& a, const BitMatrix& b, std::size_t trial,
                                             const PackedOps& packed) {
  for (const auto op : verified_ops) {
    if (auto outcome = check_op(op, a, b, packed)) {
      Mismatch m{std::string(op), trial, a, std::nullopt, std::move(outcome->expected), std::move(outcome->actual)};
      if (!is_unary_op(op)) m.b = b;
      return m;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// All six operations over every ordered pair of 2 x 2 matrices.
inline VerifyResult verify_exhaustive_n2(const PackedOps& packed = {}) {
  VerifyResult result;
  std::vector<BitMatrix> all;
  for (BitMatrix::word_type top = 0; top < 4; ++top)
    for (BitMatrix::word_type bottom = 0; bottom < 4; ++bottom) {
      BitMatrix m(2);
      m.set_row_value(0, top);
      m.set_row_value(1, bottom);
      all.push_back(m);
    }
  for (std::size_t x = 0; x < all.size(); ++x)
    for (std::size_t y = 0; y < all.size(); ++y) {
      ++result.exhaustive_cases;
      if (auto m = detail::check_all_ops(all[x], all[y], x * all.size() + y, packed)) {
        result.failure = std::move(m);
        return result;
      }
    }
  return result;
}

/// Random trials for every size, in the given order, then the exhaustive 2 x 2
/// sweep. Stops at the first disagreement and shrinks it.
inline VerifyResult verify(const VerifyOptions& opts, const PackedOps& packed = {}) {
  if (opts.trials < 1) throw UsageError("--trials must be at least 1");
  if (opts.sizes.empty()) throw UsageError("--sizes must name at least one size");
  for (const auto n : opts.sizes)
    if (n < 1 || n > BitMatrix::max_dimension)
      throw UsageError("size " + std::to_string(n) + " outside [1, " + std::to_string(BitMatrix::max_dimension) + "]");

  VerifyResult result;
  for (const auto n : opts.sizes) {
    Rng rng(opts.seed ^ (std::uint64_t{n} * 0x9E3779B97F4A7C15ull));
    for (std::size_t t = 0; t < opts.trials; ++t) {
      // Vary density so products are neither almost empty nor almost full.
      const unsigned sparsity = 1 + static_cast<unsigned>(t % 6);
      const BitMatrix a = random_bit_matrix(n, rng, sparsity);
      const BitMatrix b = t % 7 == 3 ? a : random_bit_matrix(n, rng, sparsity);
      ++result.random_cases;
      if (auto m = detail::check_all_ops(a, b, t, packed)) {
        detail::shrink(*m, packed, opts.shrink_budget);
        result.failure = std::move(m);
        return result;
      }
    }
  }
  if (opts.exhaustive_n2) {
    auto sweep = verify_exhaustive_n2(packed);
    result.exhaustive_cases = sweep.exhaustive_cases;
    if (sweep.failure) {
      detail::shrink(*sweep.failure, packed, opts.shrink_budget);
      result.failure = std::move(sweep.failure);
    }
  }
  return result;
}

}  // namespace bnmat
