#pragma once

#include <vector>

#include "rimforge/presentation.hpp"

namespace rimforge {

/// A coset table over the generators of a presentation. Rows are cosets
/// (1-based), columns are signed generators; entry 0 means undefined.
/// Complete verified tables certify the index of the enumerated subgroup.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(int ngens, int ncosets);

  int ngens() const { return ngens_; }
  int cols() const { return 2 * ngens_; }
  int size() const { return ncosets_; }
  bool complete() const { return complete_; }

  /// Column of generator g with sign +1/-1.
  static int column(int gen, int sign) { return 2 * gen + (sign > 0 ? 0 : 1); }
  static int inverse_column(int col) { return col ^ 1; }

  int entry(int coset, int col) const { return tab_[(coset - 1) * cols() + col]; }
  int& entry(int coset, int col) { return tab_[(coset - 1) * cols() + col]; }

  /// Image of a coset under one signed generator (0 if undefined).
  int apply(int coset, int gen, int sign) const { return entry(coset, column(gen, sign)); }
  /// Traces w from coset; returns 0 if an entry is undefined along the way.
  int trace(int coset, const Word& w) const;

  /// Coset action as permutations (0-based images), one per generator.
  /// Requires a complete table.
  std::vector<std::vector<int>> permutations() const;
  /// Permutation of an arbitrary word on a complete table.
  std::vector<int> word_permutation(const Word& w) const;

  /// A word carrying coset 1 to the given coset (breadth-first, fixed
  /// column order; deterministic). Requires a complete table.
  Word coset_word(int coset) const;

  /// Re-checks the completeness certificate: all entries defined, every
  /// column a permutation, every relator tracing to the identity at every
  /// coset and every subgroup generator fixing coset 1.
  bool verify(const Presentation& p, const std::vector<Word>& subgroup_gens) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  int ngens_ = 0;
  int ncosets_ = 0;
  bool complete_ = false;
  std::vector<int> tab_;
  friend class Enumerator;
};

/// Order of a permutation (lcm of cycle lengths).
Int permutation_order(const std::vector<int>& perm);

struct EnumerationResult {
  enum class Status { complete, indeterminate };
  Status status = Status::indeterminate;
  CosetTable table;  // meaningful only when complete
  long cosets_defined = 0;  // total definitions made (diagnostic)

  bool complete() const { return status == Status::complete; }
  int index() const { return table.size(); }
};

/// Todd-Coxeter coset enumeration, HLT strategy with lookahead and a fixed
/// deterministic filling order. With no subgroup generators the coset count
/// is the group order when the enumeration completes. Exhausting max_cosets
/// returns an indeterminate result.
EnumerationResult enumerate_cosets(const Presentation& p,
                                   const std::vector<Word>& subgroup_gens,
                                   int max_cosets = 100000);

}  // namespace rimforge
