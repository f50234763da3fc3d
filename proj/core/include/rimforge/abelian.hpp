#pragma once

#include <string>
#include <vector>

#include "rimforge/common.hpp"
#include "rimforge/word.hpp"

namespace rimforge {

/// Invariant factors of a finitely generated abelian group:
/// Z^free_rank  x  Z/d1 x Z/d2 x ...  with 2 <= d1 | d2 | ...
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Z/d for a single torsion factor and no free part; d=1 when trivial.
  bool is_finite_cyclic() const { return free_rank == 0 && torsion.size() <= 1; }
  Int cyclic_order() const;  // requires is_finite_cyclic()
  /// Product of torsion coefficients (order of the torsion subgroup).
  Int torsion_order() const;
  /// e.g. "Z^2 + Z/2 + Z/4", "Z", "Z/3", "0".
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Smith normal form of an integer matrix, keeping the right transform so
/// that classes of lattice quotients can be evaluated.
///
/// For the quotient Z^n / rowspace(A) the class of a row vector x is read
/// off from y = x * V: (y_i mod d_i) on the torsion coordinates and the
/// remaining y_i on the free coordinates.
struct SmithForm {
  std::vector<Int> diagonal;             // all nonzero entries d1 | d2 | ... (1s included)
  std::vector<std::vector<Int>> V;       // n x n unimodular right transform
  int rows = 0, cols = 0;
};

SmithForm smith_normal_form(std::vector<std::vector<Int>> A, int ncols);

/// The abelianization Z^n / rowspace(A) packaged for repeated class queries.
class AbelianStructure {
 public:
  AbelianStructure() = default;
  /// A: one row of generator exponent sums per relator, n = #generators.
  AbelianStructure(const std::vector<std::vector<Int>>& relator_rows, int ngens);

  const AbelianInvariants& invariants() const { return inv_; }
  int ngens() const { return ngens_; }

  /// Class of a word: torsion residues (one per torsion factor, reduced mod
  /// the factor) followed by free coordinates.
  struct Class {
    std::vector<Int> torsion;
    std::vector<Int> free;
    bool zero() const;
    friend bool operator==(const Class&, const Class&) = default;
  };
  Class class_of(const Word& w) const;

  /// For finite cyclic H1 of order d: the residue of w as a multiple of the
  /// canonical generator. Requires invariants().is_finite_cyclic().
  Int cyclic_class(const Word& w) const;

 private:
  int ngens_ = 0;
  AbelianInvariants inv_;
  SmithForm snf_;
  std::vector<std::size_t> torsion_cols_;  // SNF columns with d_i >= 2
  std::vector<std::size_t> free_cols_;     // SNF columns beyond rank
};

}  // namespace rimforge
