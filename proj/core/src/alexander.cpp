#include "rimforge/alexander.hpp"

#include <map>

namespace rimforge {

const char* const kSmoothDistinctionAssumption =
    "distinct coefficient multisets certify smooth inequivalence assuming the "
    "base pair satisfies the gauge-theoretic gluing hypotheses (not verified here)";

LaurentPoly fox_derivative(const Word& w, int gen, const std::vector<int>& degrees) {
  LaurentPoly out;
  long prefix = 0;  // degree of the prefix before the current letter
  for (std::size_t i = 0; i < w.size(); ++i) {
    int g = w.gen_at(i);
    if (g >= static_cast<int>(degrees.size())) throw error("generator without degree");
    int s = w.sign_at(i);
    if (g == gen) {
      if (s > 0) {
        out = out + LaurentPoly::monomial(1, prefix);
      } else {
        out = out + LaurentPoly::monomial(-1, prefix - degrees[g]);
      }
    }
    prefix += s * degrees[g];
  }
  return out;
}

LaurentPoly fox_derivative(const Word& w, int gen, const MarkedGroup& mg) {
  if (!mg.presentation.has_mark(Mark::meridian))
    throw error("group has no meridian mark; no degree map");
  return fox_derivative(w, gen, std::vector<int>(mg.presentation.ngens(), 1));
}

std::vector<std::vector<LaurentPoly>> alexander_matrix(const MarkedGroup& mg) {
  std::vector<int> degrees(mg.presentation.ngens(), 1);
  std::vector<std::vector<LaurentPoly>> m;
  for (const Word& r : mg.presentation.relators()) {
    std::vector<LaurentPoly> row;
    for (int g = 0; g < mg.presentation.ngens(); ++g)
      row.push_back(fox_derivative(r, g, degrees));
    m.push_back(std::move(row));
  }
  return m;
}

AlexNormalForm alexander_polynomial(const KnotSpec& k) {
  MarkedGroup mg = wirtinger(k);
  int n = mg.presentation.ngens();
  int r = static_cast<int>(mg.presentation.relators().size());
  if (r != n - 1) throw error("internal: knot presentation is not deficiency one");
  auto m = alexander_matrix(mg);
  // delete the last generator column
  for (auto& row : m) row.pop_back();
  LaurentPoly det = laurent_determinant(std::move(m));
  if (det.zero()) throw error("degenerate presentation: zero Alexander determinant");
  AlexNormalForm nf = AlexNormalForm::normalize(det);
  Int at1 = nf.poly.evaluate(1);
  if (at1 != 1 && at1 != -1)
    throw error("Alexander polynomial fails Delta(1) = +-1; diagram error");
  return nf;
}

Int knot_determinant(const KnotSpec& k) {
  Int v = alexander_polynomial(k).poly.evaluate(-1);
  return v < 0 ? Int(-v) : v;
}

CoverOrder cyclic_cover_homology_order(const KnotSpec& k, int d) {
  if (d < 2) throw error("cover degree must be >= 2");
  AlexNormalForm nf = alexander_polynomial(k);
  Int res = cyclotomic_resultant_magnitude(nf.poly, d);
  CoverOrder out;
  out.finite = res != 0;
  if (out.finite) out.order = res;
  return out;
}

std::vector<std::vector<int>> fs_distinguish(const std::vector<AlexNormalForm>& polys) {
  if (polys.empty()) throw error("nothing to distinguish");
  std::vector<std::vector<int>> classes;
  std::map<std::vector<Int>, int> index;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    auto key = polys[i].coefficient_multiset();
    auto it = index.find(key);
    if (it == index.end()) {
      index[key] = static_cast<int>(classes.size());
      classes.push_back({static_cast<int>(i)});
    } else {
      classes[it->second].push_back(static_cast<int>(i));
    }
  }
  return classes;
}

}  // namespace rimforge
