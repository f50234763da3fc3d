#pragma once

#include <vector>

#include "rimforge/presentation.hpp"

namespace rimforge {

struct TietzeResult {
  Presentation presentation;
  /// Caller-supplied words rewritten through every move (same order).
  std::vector<Word> tracked;
  /// For each original generator: its index in the result, or -1 if it was
  /// eliminated.
  std::vector<int> survivors;
  int moves = 0;
};

/// Deterministic budgeted Tietze simplification: free/cyclic reduction,
/// duplicate removal, relator-against-relator subword replacement and
/// shortest-relator-first generator elimination. The result presents an
/// isomorphic group; marks and tracked words are rewritten through every
/// elimination; the final total relator length never exceeds the input's.
TietzeResult tietze_simplify(const Presentation& p, std::vector<Word> tracked = {},
                             int max_moves = 20000);

}  // namespace rimforge
