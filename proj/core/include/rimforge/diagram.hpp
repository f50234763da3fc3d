#pragma once

#include <array>
#include <vector>

#include "rimforge/presentation.hpp"

namespace rimforge {

/// A planar diagram code: one quadruple per crossing listing the incident
/// edge labels counterclockwise starting from the incoming under-strand
/// edge. Edges are labeled 1..2n consecutively along the orientation, so
/// the third entry is always the successor of the first and the over-strand
/// pair {2nd, 4th} is {e, e+1} for some e (all mod 2n).
using PdCode = std::vector<std::array<long, 4>>;

/// Validates labeling consistency (single component, orientation); throws
/// with a description when malformed.
void validate_pd(const PdCode& pd);

/// Mirror image: over- and under-strands exchanged at every crossing.
PdCode mirror_pd(const PdCode& pd);

/// Sequentially labeled PD code of the closure of a braid word on `strands`
/// strands. Letters are +-i for the crossing of strands at positions i,i+1
/// (1-based), positive letters putting the left strand on top.
PdCode braid_closure_pd(int strands, const std::vector<int>& braid_word);

struct WirtingerData {
  Presentation presentation;  // marks: meridian (+ longitude)
  int crossings = 0;
  int arcs = 0;
};

/// Wirtinger presentation from a PD code: one generator per arc, one
/// conjugation relator per crossing with the last crossing's relator
/// dropped; the meridian is the generator of the arc through edge 1. The
/// longitude mark is the product of over-arcs met along the knot, corrected
/// by meridian^-writhe.
WirtingerData wirtinger_from_pd(const PdCode& pd);

}  // namespace rimforge
