#pragma once

// Text codecs.
//
// Grid format:
//   n\n
//   n lines of exactly n characters '0'/'1', each ended by \n
//
// Tuple format (n <= 64):
//   n\n
//   v_0 v_1 ... v_{n-1}\n      v_i is row i read MSB-first, 0 <= v_i < 2^n
//
// Parsing is strict: only text the emitters could have produced is accepted.

#include <bnmat/bit_matrix.hpp>
#include <bnmat/errors.hpp>

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bnmat {

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  /// Next line without its terminator, or nullopt at end of text.
  std::optional<std::string_view> next() {
    if (pos_ == text_.size()) return std::nullopt;
    ++line_;
    const std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) throw ParseError(line_, "line is not terminated by a linefeed");
    const std::string_view line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    return line;
  }

  bool at_end() const noexcept { return pos_ == text_.size(); }

  /// Number of the line most recently returned (1-based).
  std::size_t line() const noexcept { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

// Canonical unsigned decimal: no sign, no leading zeros, no whitespace.
inline std::optional<std::uint64_t> parse_decimal(std::string_view s) {
  if (s.empty() || (s.size() > 1 && s.front() == '0')) return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline std::size_t parse_dimension_line(LineReader& in, std::size_t max_n) {
  const auto line = in.next();
  if (!line) throw ParseError(1, "missing dimension line");
  const auto n = parse_decimal(*line);
  if (!n) throw ParseError(in.line(), "dimension is not a canonical decimal integer");
  if (*n < 1 || *n > max_n)
    throw ParseError(in.line(), "dimension " + std::to_string(*n) + " outside [1, " + std::to_string(max_n) + "]");
  return static_cast<std::size_t>(*n);
}

inline void expect_end(const LineReader& in) {
  if (!in.at_end()) throw ParseError(in.line() + 1, "unexpected content after the matrix");
}

}  // namespace detail

inline BitMatrix parse_grid(std::string_view text) {
  detail::LineReader in(text);
  const std::size_t n = detail::parse_dimension_line(in, BitMatrix::max_dimension);
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto line = in.next();
    if (!line)
      throw ParseError(in.line() + 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(i));
    if (line->size() != n)
      throw ParseError(in.line(), "row has " + std::to_string(line->size()) + " characters, expected " +
                                      std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      const char c = (*line)[j];
      if (c != '0' && c != '1')
        throw ParseError(in.line(), "illegal character at column " + std::to_string(j + 1));
      if (c == '1') m.set(i, j, true);
    }
  }
  detail::expect_end(in);
  return m;
}

inline std::string emit_grid(const BitMatrix& m) {
  const std::size_t n = m.dimension();
  std::string out = std::to_string(n);
  out.reserve(out.size() + 1 + n * (n + 1));
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < n; ++j)
      out += (row[j / BitMatrix::word_bits] & BitMatrix::column_mask(j)) != 0 ? '1' : '0';
    out += '\n';
  }
  return out;
}

inline constexpr std::size_t max_tuple_dimension = BitMatrix::word_bits;

inline BitMatrix parse_tuple(std::string_view text) {
  detail::LineReader in(text);
  const std::size_t n = detail::parse_dimension_line(in, max_tuple_dimension);
  const auto line = in.next();
  if (!line) throw ParseError(2, "missing row values");
  BitMatrix m(n);
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (start > line->size())
      throw ParseError(in.line(), "expected " + std::to_string(n) + " values, found " + std::to_string(i));
    std::size_t end = line->find(' ', start);
    if (end == std::string_view::npos) end = line->size();
    const std::string_view token = line->substr(start, end - start);
    const auto value = detail::parse_decimal(token);
    if (!value) throw ParseError(in.line(), "value " + std::to_string(i + 1) + " is not a canonical decimal integer");
    if (n < BitMatrix::word_bits && (*value >> n) != 0)
      throw ParseError(in.line(), "value " + std::to_string(*value) + " exceeds 2^" + std::to_string(n) + " - 1");
    m.set_row_value(i, *value);
    start = end + 1;
  }
  if (start <= line->size()) throw ParseError(in.line(), "more than " + std::to_string(n) + " values");
  detail::expect_end(in);
  return m;
}

inline std::string emit_tuple(const BitMatrix& m) {
  const std::size_t n = m.dimension();
  if (n > max_tuple_dimension)
    throw UnsupportedForDimension("tuple format needs n <= 64, have n=" + std::to_string(n));
  std::string out = std::to_string(n);
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(m.row_value(i));
  }
  out += '\n';
  return out;
}

}  // namespace bnmat
