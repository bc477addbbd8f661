#pragma once

// Bit-packed n x n boolean matrices. Each row occupies ceil(n/64) 64-bit words,
// most significant bit first: element (i, j) carries weight 2^(n-1-j) in the
// integer value of row i, so comparing rows as integers is the same as comparing
// them as bit strings. Padding bits past column n-1 are kept at zero.

#include <bnmat/errors.hpp>
#include <bnmat/op_counter.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bnmat {

/// Result of comparing two matrices in row-major lexicographic order.
enum class Ordering { less, equal, greater };

constexpr const char* to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::less:
      return "less";
    case Ordering::equal:
      return "equal";
    case Ordering::greater:
      return "greater";
  }
  return "?";
}

class BitMatrix;

namespace detail {
struct BitMatrixAccess;
}

class BitMatrix {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;
  static constexpr std::size_t max_dimension = std::size_t{1} << 20;

  /// All-zero n x n matrix.
  explicit BitMatrix(std::size_t n) : n_(checked_dimension(n)), w_(words_for(n)), words_(n_ * w_) {}

  static BitMatrix zero(std::size_t n) { return BitMatrix(n); }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.words_[i * m.w_ + i / word_bits] = column_mask(i);
    return m;
  }

  /// Adopts a row-major word buffer. Throws ValueError if the buffer has the
  /// wrong size or carries bits past column n-1.
  static BitMatrix from_words(std::size_t n, std::vector<word_type> words) {
    BitMatrix m(n);
    if (words.size() != m.words_.size())
      throw ValueError("expected " + std::to_string(m.words_.size()) + " words, got " +
                       std::to_string(words.size()));
    m.words_ = std::move(words);
    if (!m.padding_clean()) throw ValueError("padding bits set past column " + std::to_string(n - 1));
    return m;
  }

  std::size_t dimension() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return w_; }

  /// Bytes of matrix payload (the packed rows), excluding the object header.
  std::size_t payload_bytes() const noexcept { return words_.size() * sizeof(word_type); }

  bool get(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return (words_[i * w_ + j / word_bits] & column_mask(j)) != 0;
  }

  void set(std::size_t i, std::size_t j, bool v) {
    check_index(i, j);
    word_type& word = words_[i * w_ + j / word_bits];
    if (v)
      word |= column_mask(j);
    else
      word &= ~column_mask(j);
  }

  /// Row i read as an n-bit unsigned integer. Requires n <= 64.
  word_type row_value(std::size_t i) const {
    require_single_word();
    check_row(i);
    return words_[i] >> (word_bits - n_);
  }

  /// Replaces row i by the n-bit value r. Requires n <= 64 and r < 2^n.
  void set_row_value(std::size_t i, word_type r) {
    require_single_word();
    check_row(i);
    if (n_ < word_bits && (r >> n_) != 0)
      throw ValueError("row value " + std::to_string(r) + " does not fit in " + std::to_string(n_) + " bits");
    words_[i] = r << (word_bits - n_);
  }

  /// Packed words of row i, most significant first. Unchecked.
  std::span<const word_type> row(std::size_t i) const noexcept { return {words_.data() + i * w_, w_}; }

  std::span<const word_type> words() const noexcept { return words_; }

  /// Mask of the payload bits in the last word of each row.
  word_type last_word_mask() const noexcept {
    const std::size_t used = n_ % word_bits;
    return used == 0 ? ~word_type{0} : ~word_type{0} << (word_bits - used);
  }

  bool padding_clean() const noexcept {
    const word_type pad = ~last_word_mask();
    for (std::size_t i = 0; i < n_; ++i)
      if ((words_[i * w_ + w_ - 1] & pad) != 0) return false;
    return true;
  }

  /// Single-bit mask selecting column j within its word.
  static constexpr word_type column_mask(std::size_t j) noexcept {
    return word_type{1} << (word_bits - 1 - j % word_bits);
  }

  static constexpr std::size_t words_for(std::size_t n) noexcept { return (n + word_bits - 1) / word_bits; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  friend struct detail::BitMatrixAccess;

  static std::size_t checked_dimension(std::size_t n) {
    if (n < 1 || n > max_dimension)
      throw DimensionError("dimension " + std::to_string(n) + " outside [1, " + std::to_string(max_dimension) + "]");
    return n;
  }

  void check_row(std::size_t i) const {
    if (i >= n_) throw IndexError("row " + std::to_string(i) + " out of range for n=" + std::to_string(n_));
  }

  void check_index(std::size_t i, std::size_t j) const {
    check_row(i);
    if (j >= n_) throw IndexError("column " + std::to_string(j) + " out of range for n=" + std::to_string(n_));
  }

  void require_single_word() const {
    if (n_ > word_bits)
      throw UnsupportedForDimension("row integers need n <= 64, have n=" + std::to_string(n_));
  }

  std::size_t n_;
  std::size_t w_;
  std::vector<word_type> words_;
};

namespace detail {

struct BitMatrixAccess {
  static std::vector<BitMatrix::word_type>& words(BitMatrix& m) noexcept { return m.words_; }
};

using Word = BitMatrix::word_type;

template <OpCounting Counter>
void require_same_dimension(const BitMatrix& a, const BitMatrix& b, Counter& ops) {
  ops.add(OpCategory::compare);
  ops.add(OpCategory::branch);
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
}

// Unchecked element read: word index i*w + (j>>6), bit 63 - (j&63), mask, test.
template <OpCounting Counter>
bool read_bit(const BitMatrix& m, std::size_t i, std::size_t j, Counter& ops) noexcept {
  ops.add(OpCategory::arith, 3);
  ops.add(OpCategory::shift, 2);
  ops.add(OpCategory::bitwise, 2);
  return (m.words()[i * m.words_per_row() + j / BitMatrix::word_bits] & BitMatrix::column_mask(j)) != 0;
}

template <OpCounting Counter>
void write_one(BitMatrix& m, std::size_t i, std::size_t j, Counter& ops) noexcept {
  ops.add(OpCategory::arith, 3);
  ops.add(OpCategory::shift, 2);
  ops.add(OpCategory::bitwise, 2);
  ops.add(OpCategory::assign);
  BitMatrixAccess::words(m)[i * m.words_per_row() + j / BitMatrix::word_bits] |= BitMatrix::column_mask(j);
}

template <OpCounting Counter>
void write_zero(BitMatrix& m, std::size_t i, std::size_t j, Counter& ops) noexcept {
  ops.add(OpCategory::arith, 3);
  ops.add(OpCategory::shift, 2);
  ops.add(OpCategory::bitwise, 3);
  ops.add(OpCategory::assign);
  BitMatrixAccess::words(m)[i * m.words_per_row() + j / BitMatrix::word_bits] &= ~BitMatrix::column_mask(j);
}

template <OpCounting Counter, class WordOp>
BitMatrix combine_words(const BitMatrix& a, const BitMatrix& b, Counter& ops, WordOp op) {
  require_same_dimension(a, b, ops);
  BitMatrix out(a.dimension());
  auto& dst = BitMatrixAccess::words(out);
  const auto x = a.words();
  const auto y = b.words();
  count_loop_frame(ops);
  for (std::size_t p = 0; p < dst.size(); ++p) {
    dst[p] = op(x[p], y[p]);
    ops.add(OpCategory::bitwise);
    ops.add(OpCategory::assign);
    count_loop_step(ops);
  }
  return out;
}

}  // namespace detail

/// c_ij = a_ij AND b_ij, one word-AND per payload word.
template <OpCounting Counter>
BitMatrix elementwise_and(const BitMatrix& a, const BitMatrix& b, Counter& ops) {
  return detail::combine_words(a, b, ops, [](detail::Word x, detail::Word y) { return x & y; });
}

/// c_ij = a_ij OR b_ij, one word-OR per payload word.
template <OpCounting Counter>
BitMatrix elementwise_or(const BitMatrix& a, const BitMatrix& b, Counter& ops) {
  return detail::combine_words(a, b, ops, [](detail::Word x, detail::Word y) { return x | y; });
}

/// Word-parallel complement; the last word of each row is re-masked.
template <OpCounting Counter>
BitMatrix negate(const BitMatrix& a, Counter& ops) {
  const std::size_t n = a.dimension();
  const std::size_t w = a.words_per_row();
  const detail::Word mask = a.last_word_mask();
  BitMatrix out(n);
  auto& dst = detail::BitMatrixAccess::words(out);
  const auto src = a.words();
  detail::count_loop_frame(ops);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t base = i * w;
    ops.add(OpCategory::arith);
    ops.add(OpCategory::assign);
    detail::count_loop_frame(ops);
    for (std::size_t k = 0; k < w; ++k) {
      dst[base + k] = ~src[base + k];
      ops.add(OpCategory::arith);
      ops.add(OpCategory::bitwise);
      ops.add(OpCategory::assign);
      detail::count_loop_step(ops);
    }
    dst[base + w - 1] &= mask;
    ops.add(OpCategory::arith, 2);
    ops.add(OpCategory::bitwise);
    ops.add(OpCategory::assign);
    detail::count_loop_step(ops);
  }
  return out;
}

/// Bit-by-bit transpose: every set element (i, j) is written to (j, i).
template <OpCounting Counter>
BitMatrix transpose(const BitMatrix& a, Counter& ops) {
  const std::size_t n = a.dimension();
  BitMatrix out(n);
  detail::count_loop_frame(ops);
  for (std::size_t i = 0; i < n; ++i) {
    detail::count_loop_frame(ops);
    for (std::size_t j = 0; j < n; ++j) {
      ops.add(OpCategory::branch);
      if (detail::read_bit(a, i, j, ops)) detail::write_one(out, j, i, ops);
      detail::count_loop_step(ops);
    }
    detail::count_loop_step(ops);
  }
  return out;
}

/// Boolean product over ({0,1}, OR, AND). B is transposed once; then c_ij is set
/// iff row i of A and row j of B^T intersect.
template <OpCounting Counter>
BitMatrix product(const BitMatrix& a, const BitMatrix& b, Counter& ops) {
  detail::require_same_dimension(a, b, ops);
  const std::size_t n = a.dimension();
  const std::size_t w = a.words_per_row();
  const BitMatrix bt = transpose(b, ops);
  BitMatrix out(n);
  detail::count_loop_frame(ops);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ra = a.row(i);
    ops.add(OpCategory::arith);
    ops.add(OpCategory::assign);
    detail::count_loop_frame(ops);
    for (std::size_t j = 0; j < n; ++j) {
      const auto rb = bt.row(j);
      ops.add(OpCategory::arith);
      ops.add(OpCategory::assign);
      detail::Word meet = 0;
      ops.add(OpCategory::assign);
      detail::count_loop_frame(ops);
      for (std::size_t k = 0; k < w; ++k) {
        meet |= ra[k] & rb[k];
        ops.add(OpCategory::bitwise, 2);
        ops.add(OpCategory::assign);
        detail::count_loop_step(ops);
      }
      ops.add(OpCategory::compare);
      ops.add(OpCategory::branch);
      if (meet != 0) detail::write_one(out, i, j, ops);
      detail::count_loop_step(ops);
    }
    detail::count_loop_step(ops);
  }
  return out;
}

/// Row-major lexicographic comparison. Rows are scanned from 0 upward and the
/// words of a row most significant first; the first differing word decides.
template <OpCounting Counter>
Ordering compare(const BitMatrix& a, const BitMatrix& b, Counter& ops) {
  detail::require_same_dimension(a, b, ops);
  const auto x = a.words();
  const auto y = b.words();
  detail::count_loop_frame(ops);
  for (std::size_t p = 0; p < x.size(); ++p) {
    ops.add(OpCategory::compare);
    ops.add(OpCategory::branch);
    if (x[p] != y[p]) {
      ops.add(OpCategory::compare);
      return x[p] < y[p] ? Ordering::less : Ordering::greater;
    }
    detail::count_loop_step(ops);
  }
  return Ordering::equal;
}

/// Word-by-word copy of src into dst; both must have the same dimension.
template <OpCounting Counter>
void copy_into(BitMatrix& dst, const BitMatrix& src, Counter& ops) {
  detail::require_same_dimension(dst, src, ops);
  auto& d = detail::BitMatrixAccess::words(dst);
  const auto s = src.words();
  detail::count_loop_frame(ops);
  for (std::size_t p = 0; p < d.size(); ++p) {
    d[p] = s[p];
    ops.add(OpCategory::assign);
    detail::count_loop_step(ops);
  }
}

inline BitMatrix elementwise_and(const BitMatrix& a, const BitMatrix& b) {
  NullCounter ops;
  return elementwise_and(a, b, ops);
}

inline BitMatrix elementwise_or(const BitMatrix& a, const BitMatrix& b) {
  NullCounter ops;
  return elementwise_or(a, b, ops);
}

inline BitMatrix negate(const BitMatrix& a) {
  NullCounter ops;
  return negate(a, ops);
}

inline BitMatrix transpose(const BitMatrix& a) {
  NullCounter ops;
  return transpose(a, ops);
}

inline BitMatrix product(const BitMatrix& a, const BitMatrix& b) {
  NullCounter ops;
  return product(a, b, ops);
}

inline Ordering compare(const BitMatrix& a, const BitMatrix& b) {
  NullCounter ops;
  return compare(a, b, ops);
}

inline void copy_into(BitMatrix& dst, const BitMatrix& src) {
  NullCounter ops;
  copy_into(dst, src, ops);
}

inline BitMatrix operator&(const BitMatrix& a, const BitMatrix& b) { return elementwise_and(a, b); }
inline BitMatrix operator|(const BitMatrix& a, const BitMatrix& b) { return elementwise_or(a, b); }
inline BitMatrix operator~(const BitMatrix& a) { return negate(a); }
inline BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) { return product(a, b); }

// Value-returning forms of the element and row accessors.

inline bool get_bit(const BitMatrix& m, std::size_t i, std::size_t j) { return m.get(i, j); }

inline BitMatrix set_bit(BitMatrix m, std::size_t i, std::size_t j, bool v) {
  m.set(i, j, v);
  return m;
}

inline BitMatrix::word_type get_row(const BitMatrix& m, std::size_t i) { return m.row_value(i); }

inline BitMatrix set_row(BitMatrix m, std::size_t i, BitMatrix::word_type r) {
  m.set_row_value(i, r);
  return m;
}

}  // namespace bnmat
