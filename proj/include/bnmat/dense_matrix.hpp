#pragma once

// Reference representation: one int cell per element, row-major, with
// definition-literal algorithms. Used as the equivalence oracle for BitMatrix
// and as the slow side of every benchmark; it is deliberately not tuned.

#include <bnmat/bit_matrix.hpp>
#include <bnmat/errors.hpp>
#include <bnmat/op_counter.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bnmat {

class DenseMatrix;

namespace detail {
struct DenseMatrixAccess;
}

class DenseMatrix {
 public:
  using cell_type = int;
  static constexpr std::size_t max_dimension = BitMatrix::max_dimension;

  explicit DenseMatrix(std::size_t n) : n_(checked_dimension(n)), cells_(n_ * n_, 0) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.cells_[i * n + i] = 1;
    return m;
  }

  std::size_t dimension() const noexcept { return n_; }
  std::size_t payload_bytes() const noexcept { return cells_.size() * sizeof(cell_type); }

  bool get(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return cells_[i * n_ + j] != 0;
  }

  void set(std::size_t i, std::size_t j, bool v) {
    check_index(i, j);
    cells_[i * n_ + j] = v ? 1 : 0;
  }

  std::span<const cell_type> cells() const noexcept { return cells_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  friend struct detail::DenseMatrixAccess;

  static std::size_t checked_dimension(std::size_t n) {
    if (n < 1 || n > max_dimension)
      throw DimensionError("dimension " + std::to_string(n) + " outside [1, " + std::to_string(max_dimension) + "]");
    return n;
  }

  void check_index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_)
      throw IndexError("element (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range for n=" +
                       std::to_string(n_));
  }

  std::size_t n_;
  std::vector<cell_type> cells_;
};

enum class ElementwiseOp { and_op, or_op, not_op };

namespace detail {

struct DenseMatrixAccess {
  static std::vector<DenseMatrix::cell_type>& cells(DenseMatrix& m) noexcept { return m.cells_; }
};

template <OpCounting Counter>
void require_same_dimension(const DenseMatrix& a, const DenseMatrix& b, Counter& ops) {
  ops.add(OpCategory::compare);
  ops.add(OpCategory::branch);
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
}

}  // namespace detail

template <OpCounting Counter>
DenseMatrix dense_and(const DenseMatrix& a, const DenseMatrix& b, Counter& ops) {
  detail::require_same_dimension(a, b, ops);
  DenseMatrix out(a.dimension());
  auto& c = detail::DenseMatrixAccess::cells(out);
  const auto x = a.cells();
  const auto y = b.cells();
  detail::count_loop_frame(ops);
  for (std::size_t p = 0; p < c.size(); ++p) {
    c[p] = x[p] && y[p];
    ops.add(OpCategory::logical);
    ops.add(OpCategory::assign);
    detail::count_loop_step(ops);
  }
  return out;
}

template <OpCounting Counter>
DenseMatrix dense_or(const DenseMatrix& a, const DenseMatrix& b, Counter& ops) {
  detail::require_same_dimension(a, b, ops);
  DenseMatrix out(a.dimension());
  auto& c = detail::DenseMatrixAccess::cells(out);
  const auto x = a.cells();
  const auto y = b.cells();
  detail::count_loop_frame(ops);
  for (std::size_t p = 0; p < c.size(); ++p) {
    c[p] = x[p] || y[p];
    ops.add(OpCategory::logical);
    ops.add(OpCategory::assign);
    detail::count_loop_step(ops);
  }
  return out;
}

/// Cell-wise negation into a new matrix; the operand is left untouched.
template <OpCounting Counter>
DenseMatrix dense_not(const DenseMatrix& a, Counter& ops) {
  DenseMatrix out(a.dimension());
  auto& c = detail::DenseMatrixAccess::cells(out);
  const auto x = a.cells();
  detail::count_loop_frame(ops);
  for (std::size_t p = 0; p < c.size(); ++p) {
    c[p] = x[p] ? 0 : 1;
    ops.add(OpCategory::branch);
    ops.add(OpCategory::assign);
    detail::count_loop_step(ops);
  }
  return out;
}

template <OpCounting Counter>
DenseMatrix dense_transpose(const DenseMatrix& a, Counter& ops) {
  const std::size_t n = a.dimension();
  DenseMatrix out(n);
  auto& c = detail::DenseMatrixAccess::cells(out);
  const auto x = a.cells();
  detail::count_loop_frame(ops);
  for (std::size_t i = 0; i < n; ++i) {
    detail::count_loop_frame(ops);
    for (std::size_t j = 0; j < n; ++j) {
      c[i * n + j] = x[j * n + i];
      ops.add(OpCategory::arith, 4);
      ops.add(OpCategory::assign);
      detail::count_loop_step(ops);
    }
    detail::count_loop_step(ops);
  }
  return out;
}

/// Triple loop straight from the definition c_ij = OR_k (a_ik AND b_kj).
/// The inner loop always runs all n steps, even once c_ij is already 1.
template <OpCounting Counter>
DenseMatrix dense_product(const DenseMatrix& a, const DenseMatrix& b, Counter& ops) {
  detail::require_same_dimension(a, b, ops);
  const std::size_t n = a.dimension();
  DenseMatrix out(n);
  auto& c = detail::DenseMatrixAccess::cells(out);
  const auto x = a.cells();
  const auto y = b.cells();
  detail::count_loop_frame(ops);
  for (std::size_t i = 0; i < n; ++i) {
    detail::count_loop_frame(ops);
    for (std::size_t j = 0; j < n; ++j) {
      int acc = 0;
      ops.add(OpCategory::assign);
      detail::count_loop_frame(ops);
      for (std::size_t k = 0; k < n; ++k) {
        const int term = x[i * n + k] && y[k * n + j];
        acc = acc || term;
        ops.add(OpCategory::arith, 4);
        ops.add(OpCategory::logical, 2);
        ops.add(OpCategory::assign);
        detail::count_loop_step(ops);
      }
      c[i * n + j] = acc;
      ops.add(OpCategory::arith, 2);
      ops.add(OpCategory::assign);
      detail::count_loop_step(ops);
    }
    detail::count_loop_step(ops);
  }
  return out;
}

/// Flattened row-major scan; the first differing cell decides.
/// Returns less iff a precedes b.
template <OpCounting Counter>
Ordering dense_compare(const DenseMatrix& a, const DenseMatrix& b, Counter& ops) {
  detail::require_same_dimension(a, b, ops);
  const auto x = a.cells();
  const auto y = b.cells();
  const std::size_t last = x.size() - 1;
  std::size_t p = 0;
  ops.add(OpCategory::arith);
  ops.add(OpCategory::assign, 2);
  while (true) {
    ops.add(OpCategory::compare, 2);
    ops.add(OpCategory::logical);
    if (!(x[p] == y[p] && p < last)) break;
    ++p;
    ops.add(OpCategory::arith);
    ops.add(OpCategory::assign);
  }
  ops.add(OpCategory::compare);
  ops.add(OpCategory::branch);
  if (x[p] == y[p]) return Ordering::equal;
  ops.add(OpCategory::compare);
  return x[p] < y[p] ? Ordering::less : Ordering::greater;
}

template <OpCounting Counter>
void dense_copy_into(DenseMatrix& dst, const DenseMatrix& src, Counter& ops) {
  detail::require_same_dimension(dst, src, ops);
  auto& d = detail::DenseMatrixAccess::cells(dst);
  const auto s = src.cells();
  detail::count_loop_frame(ops);
  for (std::size_t p = 0; p < d.size(); ++p) {
    d[p] = s[p];
    ops.add(OpCategory::assign);
    detail::count_loop_step(ops);
  }
}

/// Dispatches AND / OR (b required) and NOT (b must be null).
template <OpCounting Counter>
DenseMatrix dense_elementwise(ElementwiseOp op, const DenseMatrix& a, const DenseMatrix* b, Counter& ops) {
  switch (op) {
    case ElementwiseOp::and_op:
    case ElementwiseOp::or_op:
      if (b == nullptr) throw UsageError("binary elementwise operation needs a second operand");
      return op == ElementwiseOp::and_op ? dense_and(a, *b, ops) : dense_or(a, *b, ops);
    case ElementwiseOp::not_op:
      if (b != nullptr) throw UsageError("negation takes a single operand");
      return dense_not(a, ops);
  }
  throw UsageError("unknown elementwise operation");
}

inline DenseMatrix dense_elementwise(ElementwiseOp op, const DenseMatrix& a, const DenseMatrix* b = nullptr) {
  NullCounter ops;
  return dense_elementwise(op, a, b, ops);
}

inline DenseMatrix dense_and(const DenseMatrix& a, const DenseMatrix& b) {
  NullCounter ops;
  return dense_and(a, b, ops);
}

inline DenseMatrix dense_or(const DenseMatrix& a, const DenseMatrix& b) {
  NullCounter ops;
  return dense_or(a, b, ops);
}

inline DenseMatrix dense_not(const DenseMatrix& a) {
  NullCounter ops;
  return dense_not(a, ops);
}

inline DenseMatrix dense_transpose(const DenseMatrix& a) {
  NullCounter ops;
  return dense_transpose(a, ops);
}

inline DenseMatrix dense_product(const DenseMatrix& a, const DenseMatrix& b) {
  NullCounter ops;
  return dense_product(a, b, ops);
}

inline Ordering dense_compare(const DenseMatrix& a, const DenseMatrix& b) {
  NullCounter ops;
  return dense_compare(a, b, ops);
}

inline void dense_copy_into(DenseMatrix& dst, const DenseMatrix& src) {
  NullCounter ops;
  dense_copy_into(dst, src, ops);
}

// Representation bridge.

inline BitMatrix to_packed(const DenseMatrix& a) {
  const std::size_t n = a.dimension();
  BitMatrix m(n);
  const auto c = a.cells();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c[i * n + j] != 0) m.set(i, j, true);
  return m;
}

inline DenseMatrix from_packed(const BitMatrix& m) {
  const std::size_t n = m.dimension();
  DenseMatrix a(n);
  auto& c = detail::DenseMatrixAccess::cells(a);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < n; ++j)
      c[i * n + j] = (row[j / BitMatrix::word_bits] & BitMatrix::column_mask(j)) != 0 ? 1 : 0;
  }
  return a;
}

}  // namespace bnmat
