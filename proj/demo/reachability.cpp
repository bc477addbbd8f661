// Reachability in a small directed graph: the transitive-reflexive closure is
// (I | A) squared until it stops changing.

#include <bnmat/bit_matrix.hpp>
#include <bnmat/matrix_io.hpp>

#include <cstddef>
#include <iostream>
#include <utility>

int main() {
  // 0 -> 1 -> 2 -> 0 is a cycle; 3 -> 4 hangs off it via 2 -> 3.
  constexpr std::size_t n = 5;
  const std::pair<std::size_t, std::size_t> edges[] = {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}};

  bnmat::BitMatrix adjacency(n);
  for (const auto& [from, to] : edges) adjacency.set(from, to, true);

  bnmat::BitMatrix reach = adjacency | bnmat::BitMatrix::identity(n);
  for (;;) {
    bnmat::BitMatrix next = reach * reach;
    if (next == reach) break;
    reach = std::move(next);
  }

  std::cout << "adjacency:\n" << bnmat::emit_grid(adjacency);
  std::cout << "reachability:\n" << bnmat::emit_grid(reach);
  std::cout << "as row integers:\n" << bnmat::emit_tuple(reach);
  return 0;
}
