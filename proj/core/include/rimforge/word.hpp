#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rimforge/common.hpp"

namespace rimforge {

/// A freely reduced word in the signed generators of a free group.
///
/// Letters are stored as nonzero integers: +(g+1) for generator g, -(g+1)
/// for its inverse. The empty word is the identity. Every constructor and
/// operation maintains free reduction, so two Words are equal as free-group
/// elements iff their letter vectors are equal.
class Word {
 public:
  Word() = default;

  /// Builds a word from raw signed letters, freely reducing.
  static Word from_letters(const std::vector<int>& signed_letters);
  /// Builds from (generator index, sign) pairs; sign must be +1 or -1.
  static Word from_pairs(const std::vector<std::pair<int, int>>& pairs);
  /// Single letter g^sign.
  static Word letter(int gen, int sign = 1);
  /// g^exp for any integer exp.
  static Word power_of(int gen, long exp);

  const std::vector<int>& letters() const { return ls_; }
  bool empty() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }

  /// Generator index of letter i (0-based) and its sign.
  int gen_at(std::size_t i) const { return (ls_[i] > 0 ? ls_[i] : -ls_[i]) - 1; }
  int sign_at(std::size_t i) const { return ls_[i] > 0 ? 1 : -1; }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(long k) const;
  /// by^-1 * w * by
  Word conjugated(const Word& by) const;
  /// [u,v] = u^-1 v^-1 u v
  static Word commutator(const Word& u, const Word& v);

  /// Largest generator index occurring, or -1 for the identity.
  int max_gen() const;
  /// Net exponent of generator g.
  long exponent_sum(int gen) const;
  /// Net exponent sum over all letters (image under the all-ones degree map).
  long total_degree() const;
  bool contains_gen(int gen) const;
  /// Number of letters equal to g or g^-1.
  int occurrences(int gen) const;

  /// Replaces every generator g by images[g]; images must cover every
  /// occurring generator (entries for unused generators are ignored).
  Word substituted(const std::vector<Word>& images) const;
  /// Renames generator indices; map[g] must be a valid new index.
  Word reindexed(const std::vector<int>& map) const;

  /// Removes conjugating prefix/suffix pairs: w = u r u^-1 -> r.
  Word cyclically_reduced() const;
  /// Canonical representative of the set {rotations of w and of w^-1};
  /// used to compare relators up to cyclic rotation and inversion.
  std::vector<int> cyclic_canonical_key() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.ls_ <=> b.ls_; }

 private:
  std::vector<int> ls_;
  void push_reduced(int letter);
  friend class WordBuilder;
};

}  // namespace rimforge
