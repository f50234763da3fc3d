#pragma once

#include <optional>
#include <vector>

#include "rimforge/presentation.hpp"

namespace rimforge {

/// Presentation of the kernel of an epimorphism G -> Z/d, produced by the
/// Reidemeister-Schreier rewriting over the transversal {t^0, ..., t^(d-1)}
/// for a generator t whose image is a unit mod d.
class SubgroupPresentation {
 public:
  SubgroupPresentation() = default;

  const Presentation& presentation() const { return pres_; }
  int degree() const { return d_; }
  /// Ambient generator used for the transversal.
  int transversal_gen() const { return tgen_; }
  /// Subgroup generator index for (coset, ambient generator), or -1 when the
  /// Schreier generator is freely trivial (a transversal prefix edge).
  int schreier_generator(int coset, int ambient_gen) const {
    return sgen_.at(static_cast<std::size_t>(coset) * ngens_amb_ + ambient_gen);
  }
  /// Index of the subgroup generator equal to t^d.
  int tau_gen() const { return schreier_generator(d_ - 1, tgen_); }

  /// Ambient word t^k x t^-k' represented by a subgroup generator.
  Word ambient_word(int subgroup_gen) const;

  /// Rewrites an ambient word lying in the kernel into subgroup generators,
  /// starting from the given transversal coset. Errors if the word does not
  /// lie in the kernel.
  Word rewrite(const Word& ambient, int start_coset = 0) const;

  /// Coset reached from a coset by one ambient letter.
  int step(int coset, int ambient_gen, int sign) const;

 private:
  Presentation pres_;
  int d_ = 0;
  int tgen_ = -1;
  int ngens_amb_ = 0;
  std::vector<int> images_;     // ambient generator -> image in Z/d (0..d-1)
  std::vector<int> unit_inv_;   // cached inverse of images_[tgen_] mod d
  std::vector<int> sgen_;       // (coset, ambient gen) -> subgroup gen or -1
  std::vector<std::pair<int, int>> origin_;  // subgroup gen -> (coset, ambient gen)
  friend SubgroupPresentation reidemeister_schreier(const Presentation&, int,
                                                    const std::vector<int>&,
                                                    std::optional<int>);
};

/// Kernel presentation of the epimorphism sending generator g to images[g]
/// in Z/d. Every relator must map to 0 mod d (checked). The transversal
/// generator may be forced; by default the first generator with unit image
/// is used. Errors when no generator has image coprime to d.
SubgroupPresentation reidemeister_schreier(const Presentation& p, int d,
                                           const std::vector<int>& images,
                                           std::optional<int> transversal_gen = {});

/// The automorphism of the kernel induced by conjugation by the transversal
/// generator: h -> rewrite(t^-1 h t), one image word per subgroup generator.
/// With inverse_direction the opposite orientation t h t^-1 is returned.
std::vector<Word> deck_transformation_action(const SubgroupPresentation& sp,
                                             bool inverse_direction = false);

}  // namespace rimforge
