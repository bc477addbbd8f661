// Randomised checks of the boolean-algebra, product and order laws.

#include <bnmat/bit_matrix.hpp>
#include <bnmat/random.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstddef>

#include "support/brute_force.hpp"

namespace bnmat {
namespace {

constexpr std::array<std::size_t, 10> kSizes = {1, 2, 3, 7, 8, 9, 63, 64, 65, 128};
constexpr int kTrials = 200;

class AlgebraLaws : public ::testing::TestWithParam<std::size_t> {
 protected:
  BitMatrix draw() { return random_bit_matrix(GetParam(), rng_, 1 + static_cast<unsigned>(rng_() % 4)); }

  Rng rng_{0xB17'0000 + GetParam()};
};

TEST_P(AlgebraLaws, ConjunctionAndDisjunction) {
  for (int t = 0; t < kTrials; ++t) {
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    ASSERT_EQ(a & b, b & a);
    ASSERT_EQ(a | b, b | a);
    ASSERT_EQ((a & b) & c, a & (b & c));
    ASSERT_EQ((a | b) | c, a | (b | c));
    ASSERT_EQ(a & a, a);
    ASSERT_EQ(a | a, a);
    ASSERT_EQ(a & (a | b), a);
    ASSERT_EQ(a | (a & b), a);
    ASSERT_EQ(a & (b | c), (a & b) | (a & c));
  }
}

TEST_P(AlgebraLaws, DeMorganAndDoubleNegation) {
  for (int t = 0; t < kTrials; ++t) {
    const auto a = draw();
    const auto b = draw();
    ASSERT_EQ(~(a & b), ~a | ~b);
    ASSERT_EQ(~(a | b), ~a & ~b);
    ASSERT_EQ(~~a, a);
    ASSERT_TRUE((~a).padding_clean());
    ASSERT_EQ(a & ~a, BitMatrix(GetParam()));
  }
}

TEST_P(AlgebraLaws, TransposeInvolution) {
  for (int t = 0; t < kTrials; ++t) {
    const auto a = draw();
    ASSERT_EQ(transpose(transpose(a)), a);
    ASSERT_TRUE(transpose(a).padding_clean());
  }
}

TEST_P(AlgebraLaws, ProductLaws) {
  const std::size_t n = GetParam();
  const auto id = BitMatrix::identity(n);
  for (int t = 0; t < kTrials; ++t) {
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(id * a, a);
    ASSERT_EQ(a * id, a);
    ASSERT_EQ(transpose(a * b), transpose(b) * transpose(a));
    ASSERT_TRUE((a * b).padding_clean());
  }
}

TEST_P(AlgebraLaws, OrderAxioms) {
  const std::size_t n = GetParam();
  for (int t = 0; t < 500; ++t) {
    // Small pools and copies make equal and near-equal operands common.
    auto a = draw();
    auto b = t % 5 == 0 ? a : draw();
    auto c = t % 7 == 0 ? b : draw();
    if (t % 3 == 0) b.set(n - 1, n - 1, !b.get(n - 1, n - 1));

    const Ordering ab = compare(a, b);
    const Ordering ba = compare(b, a);
    const Ordering bc = compare(b, c);
    const Ordering ac = compare(a, c);

    // Antisymmetry / trichotomy: exactly one relation holds, mirrored.
    ASSERT_EQ(ab == Ordering::less, ba == Ordering::greater);
    ASSERT_EQ(ab == Ordering::equal, ba == Ordering::equal);
    ASSERT_EQ(ab == Ordering::equal, a == b);
    if (ab == Ordering::less && bc == Ordering::less) ASSERT_EQ(ac, Ordering::less);
    if (ab == Ordering::greater && bc == Ordering::greater) ASSERT_EQ(ac, Ordering::greater);

    const int flat = testing::brute_compare(testing::to_grid(a), testing::to_grid(b));
    ASSERT_EQ(ab, flat < 0 ? Ordering::less : flat == 0 ? Ordering::equal : Ordering::greater);
  }
}

TEST_P(AlgebraLaws, RowBijection) {
  const std::size_t n = GetParam();
  if (n > 64) {
    const auto a = draw();
    EXPECT_THROW(get_row(a, 0), UnsupportedForDimension);
    EXPECT_THROW(set_row(a, 0, 1), UnsupportedForDimension);
    return;
  }
  for (int t = 0; t < kTrials; ++t) {
    const auto a = draw();
    const auto b = draw();
    BitMatrix rebuilt(n);
    bool rows_equal = true;
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = get_row(a, i);
      if (n < 64) ASSERT_LT(r, std::uint64_t{1} << n);
      rebuilt.set_row_value(i, r);
      ASSERT_EQ(rebuilt.row_value(i), r);
      rows_equal = rows_equal && r == get_row(b, i);
    }
    ASSERT_EQ(rebuilt, a);
    ASSERT_EQ(rows_equal, a == b);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, AlgebraLaws, ::testing::ValuesIn(kSizes),
                         [](const auto& info) { return "n" + std::to_string(info.param); });

}  // namespace
}  // namespace bnmat
