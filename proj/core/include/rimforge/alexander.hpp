#pragma once

#include <vector>

#include "rimforge/knot.hpp"
#include "rimforge/laurent.hpp"

namespace rimforge {

/// Fox derivative of w with respect to generator g, abelianized to
/// Z[t,t^-1] by sending every generator to t^degrees[g]. For meridional
/// knot presentations every degree is 1. Satisfies the product rule
/// d(uv) = du + abel(u) dv with dg/dg = 1 and d(g^-1)/dg = -t^-deg(g).
LaurentPoly fox_derivative(const Word& w, int gen, const std::vector<int>& degrees);

/// Fox derivative over a marked knot group (all generators map to t).
LaurentPoly fox_derivative(const Word& w, int gen, const MarkedGroup& mg);

/// Alexander matrix of a marked knot group: rows are relators, columns
/// generators, entries abelianized Fox derivatives.
std::vector<std::vector<LaurentPoly>> alexander_matrix(const MarkedGroup& mg);

/// Alexander polynomial: determinant of the Alexander matrix with one
/// generator column deleted, normalized to lowest exponent 0 and positive
/// leading coefficient. Checks Delta(1) = +-1.
AlexNormalForm alexander_polynomial(const KnotSpec& k);

/// |Delta(-1)|, the knot determinant.
Int knot_determinant(const KnotSpec& k);

/// Order of the first homology of the d-fold cyclic branched cover,
/// |Res(Delta, 1 + t + ... + t^(d-1))|; zero resultant means infinite.
struct CoverOrder {
  bool finite = false;
  Int order;  // valid when finite
  friend bool operator==(const CoverOrder&, const CoverOrder&) = default;
};
CoverOrder cyclic_cover_homology_order(const KnotSpec& k, int d);

/// Groups polynomials by their coefficient multisets. Two knots in distinct
/// classes give smoothly inequivalent rim-surgered surfaces whenever the
/// base pair satisfies the gluing hypotheses; that geometric assumption is
/// reported, not verified. Classes are ordered by first occurrence.
std::vector<std::vector<int>> fs_distinguish(const std::vector<AlexNormalForm>& polys);

/// The assumption tag attached to smooth-distinction reports.
extern const char* const kSmoothDistinctionAssumption;

}  // namespace rimforge
