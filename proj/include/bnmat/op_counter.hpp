#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string_view>

namespace bnmat {

/// Categories partitioning the primitive integer operations that are counted:
///   arith    + - * / %
///   shift    << >>
///   bitwise  & | ^ ~
///   logical  && || !
///   assign   =
///   branch   if
///   compare  < <= > >= == !=
enum class OpCategory : std::size_t { arith, shift, bitwise, logical, assign, branch, compare };

inline constexpr std::size_t op_category_count = 7;

inline constexpr std::array<std::string_view, op_category_count> op_category_names = {
    "arith", "shift", "bitwise", "logical", "assign", "branch", "compare"};

constexpr std::string_view to_string(OpCategory c) noexcept {
  return op_category_names[static_cast<std::size_t>(c)];
}

/// Counter policy that records nothing. The uninstrumented algorithms are the
/// counted ones instantiated with this type, so the hooks compile away.
struct NullCounter {
  static constexpr bool enabled = false;
  constexpr void add(OpCategory, std::uint64_t = 1) const noexcept {}
};

/// Tallies of executed primitives, one per category.
class OpCounter {
 public:
  static constexpr bool enabled = true;

  constexpr void add(OpCategory c, std::uint64_t k = 1) noexcept {
    tallies_[static_cast<std::size_t>(c)] += k;
  }

  constexpr std::uint64_t operator[](OpCategory c) const noexcept {
    return tallies_[static_cast<std::size_t>(c)];
  }

  constexpr std::uint64_t total() const noexcept {
    return std::accumulate(tallies_.begin(), tallies_.end(), std::uint64_t{0});
  }

  constexpr const std::array<std::uint64_t, op_category_count>& tallies() const noexcept {
    return tallies_;
  }

  constexpr void reset() noexcept { tallies_.fill(0); }

  friend constexpr bool operator==(const OpCounter&, const OpCounter&) = default;

 private:
  std::array<std::uint64_t, op_category_count> tallies_{};
};

template <class C>
concept OpCounting = requires(C& c, OpCategory cat, std::uint64_t k) {
  { C::enabled } -> std::convertible_to<bool>;
  c.add(cat, k);
};

namespace detail {

// One loop iteration: the increment and the bound check.
template <OpCounting Counter>
constexpr void count_loop_step(Counter& ops) noexcept {
  ops.add(OpCategory::arith);
  ops.add(OpCategory::compare);
}

// Loop entry: induction variable initialisation and the final, failing bound check.
template <OpCounting Counter>
constexpr void count_loop_frame(Counter& ops) noexcept {
  ops.add(OpCategory::assign);
  ops.add(OpCategory::compare);
}

}  // namespace detail

}  // namespace bnmat
