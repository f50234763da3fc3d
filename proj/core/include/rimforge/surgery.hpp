#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rimforge/coset.hpp"
#include "rimforge/knot.hpp"
#include "rimforge/schreier.hpp"
#include "rimforge/tietze.hpp"

namespace rimforge {

/// How an output group was matched against its expected model.
/// T1: simplified to the identical presentation.
/// T2: order, abelianization and the abelianizations of the cyclic-quotient
///     kernels of index <= d all agree.
/// ASSERTED: construction followed the model but no independent
///     certification completed within budget.
enum class Tier { T1, T2, ASSERTED };
std::string tier_name(Tier t);

struct Certification {
  Tier tier = Tier::ASSERTED;
  bool checked = false;  // a comparison was attempted
  bool agreed = false;   // and it agreed
  std::string detail;
};

/// pi1 of a surface complement with its meridian and pushoff marks, the
/// divisibility d of the surface class (H1 of the complement is Z/d with
/// the meridian a generator) and the construction trace.
struct SurfaceKnotGroup {
  Presentation presentation;
  int divisibility = 1;
  std::vector<std::string> provenance;
  Certification certification;

  const Word& meridian() const { return presentation.mark(Mark::meridian); }
  bool pushoff_trivial() const {
    return presentation.has_mark(Mark::pushoff) && presentation.mark(Mark::pushoff).empty();
  }
};

/// pi1 of a cyclic branched cover together with the deck transformation
/// action (one image word per generator) of the canonical generator.
struct BranchedCoverGroup {
  Presentation presentation;
  std::vector<Word> deck_action;
  int degree = 2;
};

/// Validates a presentation + meridian as a surface knot group: H1 must be
/// finite cyclic with the meridian mapping to a generator. The pushoff is
/// marked trivial (the nullhomotopic-pushoff hypothesis is asserted by the
/// caller).
SurfaceKnotGroup surface_knot_base(const Presentation& p, const Word& meridian,
                                   std::string label = "base");

/// pi1 of the d-fold cyclic branched cover of a knot: the kernel of
/// meridian -> 1 mod d with the lifted meridian killed; the deck action
/// descends. Simplified before returning.
BranchedCoverGroup branched_cover_group(const KnotSpec& k, int d,
                                        const Budget& budget = {});

/// The d-twist construction on a base with cyclic knot group of order d:
/// the split extension of the branched cover group by Z/d acting through
/// the deck transformations, presented as
///   <H-gens, u | H-relators, u^d, u^-1 h u = deck(h)>
/// with meridian u and trivial pushoff. Errors when the base group does not
/// certify cyclic of order d.
SurfaceKnotGroup d_twist_group(const SurfaceKnotGroup& base, const KnotSpec& k,
                               const Budget& budget = {});

/// The general m-twist assembly: base and knot exterior glued with the
/// meridian identification and the twist relators [mu^m, beta] for every
/// exterior generator. Requires the trivial-pushoff mark. Cross-certifies
/// against the semidirect path when m = 0 mod d and the base is cyclic, and
/// against the base itself when gcd(m, d) = 1; the tier achieved is
/// recorded. A failed cross-certification throws.
SurfaceKnotGroup m_twist_group(const SurfaceKnotGroup& base, const KnotSpec& k, long m,
                               const Budget& budget = {});

/// Iterated surgery: left fold of the twist constructions. A step with
/// m = 0 mod d on a certified-cyclic base dispatches to the semidirect
/// path, everything else to the general assembly.
SurfaceKnotGroup iterated_surgery(const SurfaceKnotGroup& base,
                                  const std::vector<std::pair<KnotSpec, long>>& steps,
                                  const Budget& budget = {});

/// T1 test: identical relator multisets (up to rotation and inversion) and
/// identical meridian mark under the positional generator correspondence.
bool presentations_match(const Presentation& a, const Presentation& b);

/// Order + abelianization + cyclic-kernel abelianizations, the T2 data.
struct GroupInvariants {
  bool order_known = false;
  Int order;
  AbelianInvariants abelianization;
  /// For each k | d, k <= d: abelian invariants of the kernel of the
  /// canonical map onto Z/k (sorted multiset).
  std::vector<AbelianInvariants> cyclic_kernel_abelianizations;
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};
GroupInvariants group_invariants(const Presentation& p, int d, const Budget& budget = {});

}  // namespace rimforge
