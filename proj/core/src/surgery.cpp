#include "rimforge/surgery.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rimforge/text.hpp"

namespace rimforge {

std::string tier_name(Tier t) {
  switch (t) {
    case Tier::T1: return "T1";
    case Tier::T2: return "T2";
    case Tier::ASSERTED: return "ASSERTED";
  }
  return "?";
}

namespace {

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  if (!used(base)) return base;
  for (int i = 2;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!used(cand)) return cand;
  }
}

void check_surface_marks(const Presentation& p, int d) {
  AbelianStructure ab = p.abelian_structure();
  if (!ab.invariants().is_finite_cyclic())
    throw error("surface knot group has non-cyclic H1: " + ab.invariants().to_string());
  Int got = ab.invariants().cyclic_order();
  if (got != d)
    throw error("surface knot group H1 has order " + got.str() + ", expected " +
                std::to_string(d));
  if (d > 1) {
    Int cls = ab.cyclic_class(p.mark(Mark::meridian));
    if (boost::multiprecision::gcd(cls, Int(d)) != 1)
      throw error("meridian does not generate H1");
  }
}

}  // namespace

bool presentations_match(const Presentation& a, const Presentation& b) {
  if (a.ngens() != b.ngens()) return false;
  auto keyset = [](const Presentation& p) {
    std::vector<std::vector<int>> ks;
    for (const Word& r : p.relators()) ks.push_back(r.cyclic_canonical_key());
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  if (keyset(a) != keyset(b)) return false;
  if (a.has_mark(Mark::meridian) != b.has_mark(Mark::meridian)) return false;
  if (a.has_mark(Mark::meridian) && !(a.mark(Mark::meridian) == b.mark(Mark::meridian)))
    return false;
  return true;
}

GroupInvariants group_invariants(const Presentation& p, int d, const Budget& budget) {
  GroupInvariants gi;
  EnumerationResult er = enumerate_cosets(p, {}, budget.max_cosets);
  if (er.complete()) {
    gi.order_known = true;
    gi.order = er.index();
  }
  AbelianStructure ab = p.abelian_structure();
  gi.abelianization = ab.invariants();
  if (ab.invariants().is_finite_cyclic() && ab.invariants().cyclic_order() == d) {
    for (int k = 2; k <= d; ++k) {
      if (d % k != 0) continue;
      std::vector<int> images(p.ngens());
      bool ok = true;
      for (int g = 0; g < p.ngens(); ++g) {
        Int c = ab.cyclic_class(Word::letter(g)) % k;
        images[g] = static_cast<int>(c.convert_to<long>());
      }
      try {
        SubgroupPresentation sp = reidemeister_schreier(p, k, images);
        gi.cyclic_kernel_abelianizations.push_back(sp.presentation().abelianization());
      } catch (const error&) {
        ok = false;
      }
      if (!ok) gi.cyclic_kernel_abelianizations.push_back(AbelianInvariants{-1, {}});
    }
  }
  return gi;
}

SurfaceKnotGroup surface_knot_base(const Presentation& p, const Word& meridian,
                                   std::string label) {
  if (meridian.max_gen() >= p.ngens())
    throw error("meridian uses generator index out of range");
  AbelianStructure ab = p.abelian_structure();
  if (!ab.invariants().is_finite_cyclic())
    throw error("base H1 is not finite cyclic: " + ab.invariants().to_string());
  Int d = ab.invariants().cyclic_order();
  if (d > 1 && boost::multiprecision::gcd(ab.cyclic_class(meridian), d) != 1)
    throw error("meridian does not generate H1");

  std::map<Mark, Word> marks = p.marks();
  marks[Mark::meridian] = meridian;
  marks[Mark::pushoff] = Word();  // nullhomotopic pushoff asserted

  SurfaceKnotGroup out;
  out.presentation = Presentation(p.names(), p.relators(), marks);
  out.divisibility = static_cast<int>(d.convert_to<long>());
  out.provenance.push_back(label + "(" + print_presentation(out.presentation) +
                           ", meridian=" + print_word(meridian, p.names()) + ")");
  out.certification = {Tier::ASSERTED, false, false, "user-supplied base"};
  return out;
}

BranchedCoverGroup branched_cover_group(const KnotSpec& k, int d, const Budget& budget) {
  if (d < 2) throw error("branched cover degree must be >= 2");
  MarkedGroup mg = wirtinger(k);
  int t = mg.meridian().gen_at(0);
  std::vector<int> images(mg.presentation.ngens(), 1);
  SubgroupPresentation sp = reidemeister_schreier(mg.presentation, d, images, t);

  // kill the lifted meridian t^d and push the deck action to the quotient
  Word tau = Word::letter(sp.tau_gen());
  Presentation quotient = sp.presentation().quotient_by_normal_closure({tau});
  std::vector<Word> deck = deck_transformation_action(sp);
  TietzeResult tz = tietze_simplify(quotient, deck, budget.tietze_moves);

  BranchedCoverGroup out;
  out.presentation = tz.presentation;
  out.degree = d;
  out.deck_action.resize(out.presentation.ngens());
  for (int g = 0; g < static_cast<int>(tz.survivors.size()); ++g) {
    int ng = tz.survivors[g];
    if (ng >= 0) out.deck_action[ng] = tz.tracked[g];
  }
  return out;
}

SurfaceKnotGroup d_twist_group(const SurfaceKnotGroup& base, const KnotSpec& k,
                               const Budget& budget) {
  int d = base.divisibility;
  if (d < 2) throw error("d-twist needs divisibility >= 2");
  EnumerationResult er = enumerate_cosets(base.presentation, {}, budget.max_cosets);
  if (!er.complete())
    throw error("could not certify the base group finite (enumeration indeterminate)");
  if (er.index() != d)
    throw error("base group has order " + std::to_string(er.index()) +
                ", not cyclic of order " + std::to_string(d));

  BranchedCoverGroup bc = branched_cover_group(k, d, budget);
  int nh = bc.presentation.ngens();

  std::vector<std::string> names = bc.presentation.names();
  std::string uname = fresh_name("u", names);
  names.push_back(uname);
  int u = nh;

  std::vector<Word> relators = bc.presentation.relators();
  relators.push_back(Word::power_of(u, d));
  for (int h = 0; h < nh; ++h) {
    Word lhs = Word::letter(h).conjugated(Word::letter(u));
    relators.push_back(lhs * bc.deck_action[h].inverse());
  }
  std::map<Mark, Word> marks{{Mark::meridian, Word::letter(u)}, {Mark::pushoff, Word()}};
  Presentation raw(std::move(names), std::move(relators), std::move(marks));
  TietzeResult tz = tietze_simplify(raw, {}, budget.tietze_moves);

  SurfaceKnotGroup out;
  out.presentation = tz.presentation;
  out.divisibility = d;
  check_surface_marks(out.presentation, d);
  out.provenance = base.provenance;
  out.provenance.push_back("d-twist(" + k.to_string() + ", d=" + std::to_string(d) + ")");

  // split extension sanity: |G| = d * |H| and the meridian has order d
  Certification cert;
  EnumerationResult eh = enumerate_cosets(bc.presentation, {}, budget.max_cosets);
  EnumerationResult eg = enumerate_cosets(out.presentation, {}, budget.max_cosets);
  if (eh.complete() && eg.complete()) {
    bool order_ok = static_cast<long>(eg.index()) == static_cast<long>(d) * eh.index();
    Int mer_order =
        permutation_order(eg.table.word_permutation(out.presentation.mark(Mark::meridian)));
    bool mer_ok = mer_order == d;
    if (!order_ok || !mer_ok)
      throw error("certification failure: split extension identities do not hold");
    cert = {Tier::T2, true, true,
            "|G|=" + std::to_string(eg.index()) + "=d*|H| with |H|=" +
                std::to_string(eh.index()) + ", meridian order " + std::to_string(d)};
  } else {
    cert = {Tier::ASSERTED, true, false, "enumeration indeterminate"};
  }
  out.certification = cert;
  return out;
}

namespace {

SurfaceKnotGroup assemble_m_twist(const SurfaceKnotGroup& base, const MarkedGroup& ek,
                                  long m, const Budget& budget) {
  std::vector<std::string> names = base.presentation.names();
  std::vector<int> emap(ek.presentation.ngens());
  for (int g = 0; g < ek.presentation.ngens(); ++g) {
    std::string nm = fresh_name(ek.presentation.name(g), names);
    emap[g] = static_cast<int>(names.size());
    names.push_back(nm);
  }
  Word mu_k = ek.meridian().reindexed(emap);
  const Word& mu_sigma = base.meridian();

  std::vector<Word> relators = base.presentation.relators();
  for (const Word& r : ek.presentation.relators()) relators.push_back(r.reindexed(emap));
  relators.push_back(mu_k * mu_sigma.inverse());
  Word mu_m = mu_k.pow(m);
  for (int g = 0; g < ek.presentation.ngens(); ++g) {
    Word c = Word::commutator(mu_m, Word::letter(emap[g]));
    if (!c.empty()) relators.push_back(std::move(c));
  }
  std::map<Mark, Word> marks{{Mark::meridian, mu_k}, {Mark::pushoff, Word()}};
  Presentation raw(std::move(names), std::move(relators), std::move(marks));
  TietzeResult tz = tietze_simplify(raw, {}, budget.tietze_moves);

  SurfaceKnotGroup out;
  out.presentation = tz.presentation;
  out.divisibility = base.divisibility;
  check_surface_marks(out.presentation, base.divisibility);
  out.provenance = base.provenance;
  return out;
}

}  // namespace

SurfaceKnotGroup m_twist_group(const SurfaceKnotGroup& base, const KnotSpec& k, long m,
                               const Budget& budget) {
  if (!base.pushoff_trivial())
    throw error("pushoff hypothesis not asserted on the base surface knot");
  MarkedGroup ek = wirtinger(k);
  SurfaceKnotGroup out = assemble_m_twist(base, ek, m, budget);
  out.provenance.push_back("m-twist(" + k.to_string() + ", m=" + std::to_string(m) + ")");
  int d = base.divisibility;

  Certification cert{Tier::ASSERTED, false, false, "modeled construction"};
  if (d >= 2 && m % d == 0) {
    // cross-certify against the semidirect path when the base is cyclic
    EnumerationResult eb = enumerate_cosets(base.presentation, {}, budget.max_cosets);
    if (eb.complete() && eb.index() == d) {
      SurfaceKnotGroup sd = d_twist_group(base, k, budget);
      GroupInvariants a = group_invariants(out.presentation, d, budget);
      GroupInvariants b = group_invariants(sd.presentation, d, budget);
      if (a.order_known && b.order_known) {
        if (!(a == b))
          throw error("certification failure: m-twist model disagrees with the "
                      "semidirect path");
        cert = {Tier::T2, true, true,
                "agrees with the semidirect path (order " + a.order.str() + ")"};
      } else {
        cert = {Tier::ASSERTED, true, false, "enumeration indeterminate"};
      }
    }
  } else if (std::gcd(m, static_cast<long>(d)) == 1) {
    if (presentations_match(out.presentation, base.presentation)) {
      cert = {Tier::T1, true, true, "simplifies to the base presentation"};
    } else {
      GroupInvariants a = group_invariants(out.presentation, d, budget);
      GroupInvariants b = group_invariants(base.presentation, d, budget);
      if (a.order_known && b.order_known) {
        if (!(a == b))
          throw error("certification failure: coprime twist changed the group "
                      "invariants");
        cert = {Tier::T2, true, true,
                "matches the base invariants (order " + a.order.str() + ")"};
      } else {
        cert = {Tier::ASSERTED, true, false, "enumeration indeterminate"};
      }
    }
  }
  out.certification = cert;
  return out;
}

SurfaceKnotGroup iterated_surgery(const SurfaceKnotGroup& base,
                                  const std::vector<std::pair<KnotSpec, long>>& steps,
                                  const Budget& budget) {
  SurfaceKnotGroup cur = base;
  for (const auto& [k, m] : steps) {
    int d = cur.divisibility;
    bool semidirect = false;
    if (d >= 2 && m % d == 0) {
      EnumerationResult eb = enumerate_cosets(cur.presentation, {}, budget.max_cosets);
      semidirect = eb.complete() && eb.index() == d;
    }
    if (semidirect) {
      SurfaceKnotGroup next = d_twist_group(cur, k, budget);
      next.provenance.back() += " [m=" + std::to_string(m) + "]";
      cur = std::move(next);
    } else {
      cur = m_twist_group(cur, k, m, budget);
    }
  }
  return cur;
}

}  // namespace rimforge
