#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rimforge/surgery.hpp"

namespace rimforge {

/// Result of the K_d check: H1(G) finite cyclic of order d and gamma
/// normally generating.
struct KdResult {
  enum class Status { holds, fails, indeterminate };
  Status status = Status::indeterminate;
  Int d;               // valid when holds
  std::string reason;  // explanation for fails/indeterminate

  bool holds() const { return status == Status::holds; }
};

KdResult check_kd(const Presentation& group, const Word& gamma, const Budget& budget = {});

/// Commutator witnesses for gamma^d: a verified list of pairs (v_i, w_i)
/// with gamma^d = prod [v_i, w_i], or indeterminate on budget exhaustion.
struct WitnessResult {
  enum class Status { found, indeterminate };
  Status status = Status::indeterminate;
  std::vector<std::pair<Word, Word>> witnesses;
  std::string note;

  bool found() const { return status == Status::found; }
};

/// Bounded breadth-first search over the permutation representation for a
/// product of at most budget.witness_max_commutators commutators equal to
/// gamma^d. Deterministic: candidates are expanded in canonical coset-word
/// order, so the first (shortest, lexicographically least) witness wins.
WitnessResult find_commutator_witnesses(const Presentation& group, const Word& gamma,
                                        int d, const Budget& budget = {});

/// Verifies user-supplied witnesses on the permutation representation.
bool verify_witnesses(const Presentation& group, const Word& gamma, int d,
                      const std::vector<std::pair<Word, Word>>& witnesses,
                      const Budget& budget = {});

/// A verified K_d certificate for a group: everything the realization
/// pipeline needs.
struct KdWitness {
  Presentation group;
  Word gamma;
  int d = 1;
  std::vector<std::pair<Word, Word>> commutator_witnesses;
  bool verified = false;
};

/// Builds a KdWitness by running check_kd and the witness search.
/// Throws when the check fails; returns nullopt on budget exhaustion.
std::optional<KdWitness> make_kd_witness(const Presentation& group, const Word& gamma,
                                         const Budget& budget = {});

/// The realization pipeline: the surface-complement group before the kills,
/// the same group after the fiber-sum kills (certified against the input),
/// and the ambient group after additionally killing gamma (certified
/// trivial).
struct SympPipelineResult {
  Presentation xd;           // complement of the surface in the unsummed manifold
  Presentation md;           // after fiber-sum kills: should present the input group
  Presentation m;            // after killing gamma: should be trivial
  Certification md_certification;
  Certification m_certification;
  std::vector<std::string> notes;
};

SympPipelineResult build_symplectic_pipeline(const KdWitness& kd, const Budget& budget = {});

}  // namespace rimforge
