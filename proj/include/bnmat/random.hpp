#pragma once

// Deterministic random matrices. Bits come straight from std::mt19937_64 raw
// output (whose sequence is fixed by the standard), so a seed reproduces the
// same matrices on every platform.

#include <bnmat/bit_matrix.hpp>
#include <bnmat/dense_matrix.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace bnmat {

using Rng = std::mt19937_64;

/// Random n x n matrix whose bits are independently 1 with probability
/// 2^-sparsity (sparsity >= 1; 1 gives fair coin flips).
inline BitMatrix random_bit_matrix(std::size_t n, Rng& rng, unsigned sparsity = 1) {
  BitMatrix shape(n);
  const std::size_t w = shape.words_per_row();
  const BitMatrix::word_type mask = shape.last_word_mask();
  std::vector<BitMatrix::word_type> words(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < w; ++k) {
      BitMatrix::word_type word = rng();
      for (unsigned s = 1; s < sparsity; ++s) word &= rng();
      words[i * w + k] = word;
    }
    words[i * w + w - 1] &= mask;
  }
  return BitMatrix::from_words(n, std::move(words));
}

inline DenseMatrix random_dense_matrix(std::size_t n, Rng& rng, unsigned sparsity = 1) {
  return from_packed(random_bit_matrix(n, rng, sparsity));
}

}  // namespace bnmat
