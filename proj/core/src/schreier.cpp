#include "rimforge/schreier.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rimforge {

namespace {

long mod_pos(long x, long d) {
  long r = x % d;
  return r < 0 ? r + d : r;
}

// inverse of u mod d for gcd(u,d)=1, extended Euclid
int mod_inverse(int u, int d) {
  long x0 = 0, x1 = 1, r0 = d, r1 = mod_pos(u, d);
  while (r1 != 0) {
    long q = r0 / r1;
    long x2 = x0 - q * x1;
    long r2 = r0 - q * r1;
    x0 = x1;
    x1 = x2;
    r0 = r1;
    r1 = r2;
  }
  if (r0 != 1) throw error("transversal generator image is not a unit mod d");
  return static_cast<int>(mod_pos(x0, d));
}

}  // namespace

int SubgroupPresentation::step(int coset, int ambient_gen, int sign) const {
  long delta = static_cast<long>(images_[ambient_gen]) * unit_inv_[0] * sign;
  return static_cast<int>(mod_pos(coset + delta, d_));
}

Word SubgroupPresentation::ambient_word(int subgroup_gen) const {
  auto [k, g] = origin_.at(subgroup_gen);
  int k2 = step(k, g, 1);
  Word w = Word::power_of(tgen_, k);
  w = w * Word::letter(g);
  w = w * Word::power_of(tgen_, k2).inverse();
  return w;
}

Word SubgroupPresentation::rewrite(const Word& ambient, int start_coset) const {
  if (ambient.max_gen() >= ngens_amb_)
    throw error("ambient word uses generator index out of range");
  std::vector<int> letters;
  int k = start_coset;
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    int g = ambient.gen_at(i);
    int s = ambient.sign_at(i);
    if (s > 0) {
      int sg = schreier_generator(k, g);
      if (sg >= 0) letters.push_back(sg + 1);
      k = step(k, g, 1);
    } else {
      k = step(k, g, -1);
      int sg = schreier_generator(k, g);
      if (sg >= 0) letters.push_back(-(sg + 1));
    }
  }
  if (k != start_coset)
    throw error("word does not lie in the kernel (nonzero image mod d)");
  return Word::from_letters(letters);
}

SubgroupPresentation reidemeister_schreier(const Presentation& p, int d,
                                           const std::vector<int>& images,
                                           std::optional<int> transversal_gen) {
  if (d < 1) throw error("cover degree must be >= 1");
  if (static_cast<int>(images.size()) != p.ngens())
    throw error("epimorphism must assign an image to every generator");

  SubgroupPresentation sp;
  sp.d_ = d;
  sp.ngens_amb_ = p.ngens();
  sp.images_.resize(p.ngens());
  for (int g = 0; g < p.ngens(); ++g)
    sp.images_[g] = static_cast<int>(mod_pos(images[g], d));

  // relators must map to 0 mod d, otherwise the map is not a homomorphism
  for (const Word& r : p.relators()) {
    long s = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      s += static_cast<long>(r.sign_at(i)) * sp.images_[r.gen_at(i)];
    if (mod_pos(s, d) != 0)
      throw error("relator has nonzero image mod d; not a homomorphism");
  }

  int t = -1;
  if (transversal_gen) {
    t = *transversal_gen;
    if (t < 0 || t >= p.ngens()) throw error("transversal generator out of range");
    if (std::gcd(static_cast<long>(sp.images_[t]), static_cast<long>(d)) != 1)
      throw error("forced transversal generator image is not coprime to d");
  } else {
    for (int g = 0; g < p.ngens(); ++g) {
      if (std::gcd(static_cast<long>(sp.images_[g]), static_cast<long>(d)) == 1) {
        t = g;
        break;
      }
    }
    if (t < 0) throw error("no generator with image coprime to d");
  }
  sp.tgen_ = t;
  sp.unit_inv_.assign(1, d == 1 ? 0 : mod_inverse(sp.images_[t], d));

  // Schreier generators over the transversal {t^0..t^(d-1)}: the prefix
  // edges (k,t) for k < d-1 are freely trivial; everything else is a
  // generator. Naming: <ambient>_<coset>, and <t>_<d> for t^d; suffixed
  // further if an ambient name already looks like that.
  std::vector<std::string> names;
  auto fresh = [&names](std::string base) {
    auto used = [&names](const std::string& s) {
      return std::find(names.begin(), names.end(), s) != names.end();
    };
    if (!used(base)) return base;
    for (int i = 2;; ++i) {
      std::string cand = base + "_" + std::to_string(i);
      if (!used(cand)) return cand;
    }
  };
  sp.sgen_.assign(static_cast<std::size_t>(d) * p.ngens(), -1);
  for (int g = 0; g < p.ngens(); ++g) {
    for (int k = 0; k < d; ++k) {
      if (g == t && k < d - 1) continue;
      int idx = static_cast<int>(names.size());
      sp.sgen_[static_cast<std::size_t>(k) * p.ngens() + g] = idx;
      int label = (g == t) ? d : k;
      names.push_back(fresh(p.name(g) + "_" + std::to_string(label)));
      sp.origin_.push_back({k, g});
    }
  }

  std::vector<Word> relators;
  for (const Word& r : p.relators()) {
    for (int k = 0; k < d; ++k) {
      Word w = sp.rewrite(r, k).cyclically_reduced();
      if (!w.empty()) relators.push_back(std::move(w));
    }
  }
  sp.pres_ = Presentation(std::move(names), std::move(relators));
  return sp;
}

std::vector<Word> deck_transformation_action(const SubgroupPresentation& sp,
                                             bool inverse_direction) {
  std::vector<Word> action;
  int n = sp.presentation().ngens();
  Word t = Word::letter(sp.transversal_gen());
  for (int i = 0; i < n; ++i) {
    Word a = sp.ambient_word(i);
    Word conj = inverse_direction ? t * a * t.inverse() : t.inverse() * a * t;
    action.push_back(sp.rewrite(conj));
  }
  return action;
}

}  // namespace rimforge
