#include "doctest.h"
#include "rimforge/coset.hpp"
#include "rimforge/schreier.hpp"
#include "rimforge/text.hpp"
#include "rimforge/tietze.hpp"

using namespace rimforge;

namespace {

bool perm_equal(const std::vector<int>& a, const std::vector<int>& b) { return a == b; }

Word expand_to_ambient(const SubgroupPresentation& sp, const Word& sub) {
  Word out;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    Word a = sp.ambient_word(sub.gen_at(i));
    out = out * (sub.sign_at(i) > 0 ? a : a.inverse());
  }
  return out;
}

}  // namespace

TEST_CASE("unknot exterior covers are free of rank one") {
  Presentation p = parse_presentation("<m | >");
  for (int d : {2, 3, 5}) {
    SubgroupPresentation sp = reidemeister_schreier(p, d, {1});
    CHECK(sp.presentation().ngens() == 1);
    CHECK(sp.presentation().relators().empty());
    CHECK(sp.presentation().abelianization() == AbelianInvariants{1, {}});
  }
}

TEST_CASE("trefoil double cover kernel has torsion Z/3") {
  Presentation tref = parse_presentation("<u,v | u*v*u*v^-1*u^-1*v^-1>");
  SubgroupPresentation sp = reidemeister_schreier(tref, 2, {1, 1});
  AbelianInvariants ab = sp.presentation().abelianization();
  CHECK(ab.free_rank == 1);
  CHECK(ab.torsion == std::vector<Int>{3});
}

TEST_CASE("trefoil triple cover kernel abelianization is Z + Z/2 + Z/2") {
  Presentation tref = parse_presentation("<u,v | u*v*u*v^-1*u^-1*v^-1>");
  SubgroupPresentation sp = reidemeister_schreier(tref, 3, {1, 1});
  AbelianInvariants ab = sp.presentation().abelianization();
  CHECK(ab.free_rank == 1);
  CHECK(ab.torsion == std::vector<Int>{2, 2});
}

TEST_CASE("relator image check rejects non-homomorphisms") {
  Presentation p = parse_presentation("<a | a^3>");
  CHECK_THROWS_AS(reidemeister_schreier(p, 2, {1}), error);
}

TEST_CASE("no unit image rejected") {
  Presentation p = parse_presentation("<a,b | >");
  CHECK_THROWS_AS(reidemeister_schreier(p, 4, {2, 2}), error);
}

TEST_CASE("index multiplicativity |G| = d * |kernel| on a finite group") {
  // the dicyclic group <a,b | a^6, b^2*a^-3, b^-1*a*b*a>: order 12, onto Z/2
  Presentation g = parse_presentation("<a,b | a^6, b^2*a^-3, b^-1*a*b*a>");
  EnumerationResult full = enumerate_cosets(g, {});
  REQUIRE(full.complete());
  CHECK(full.index() == 12);
  // H1 = Z/4 generated by b; the quotient onto Z/2 sends a -> 0, b -> 1
  SubgroupPresentation sp = reidemeister_schreier(g, 2, {0, 1}, 1);
  EnumerationResult ker = enumerate_cosets(sp.presentation(), {});
  REQUIRE(ker.complete());
  CHECK(2 * ker.index() == full.index());
}

TEST_CASE("rewriting followed by expansion reproduces elements") {
  Presentation g = parse_presentation("<a,b | a^6, b^2*a^-3, b^-1*a*b*a>");
  EnumerationResult full = enumerate_cosets(g, {});
  REQUIRE(full.complete());
  SubgroupPresentation sp = reidemeister_schreier(g, 2, {0, 1}, 1);
  // kernel words: even total b-exponent
  std::vector<Word> kernel_words{
      Word::letter(0),
      Word::power_of(1, 2),
      Word::letter(1) * Word::letter(0) * Word::letter(1),
      Word::power_of(1, 2) * Word::letter(0) * Word::power_of(1, -2),
  };
  for (const Word& w : kernel_words) {
    Word sub = sp.rewrite(w);
    Word back = expand_to_ambient(sp, sub);
    CHECK(perm_equal(full.table.word_permutation(w), full.table.word_permutation(back)));
  }
  // non-kernel words rejected
  CHECK_THROWS_AS(sp.rewrite(Word::letter(1)), error);
}

TEST_CASE("deck action on the unknot kernel is the identity") {
  Presentation p = parse_presentation("<m | >");
  for (int d : {2, 4}) {
    SubgroupPresentation sp = reidemeister_schreier(p, d, {1});
    std::vector<Word> act = deck_transformation_action(sp);
    REQUIRE(act.size() == 1);
    CHECK(act[0] == Word::letter(0));  // t^-1 t^d t = t^d
  }
}

TEST_CASE("deck action: order divides d and both orientations invert each other") {
  Presentation tref = parse_presentation("<u,v | u*v*u*v^-1*u^-1*v^-1>");
  SubgroupPresentation sp = reidemeister_schreier(tref, 2, {1, 1});
  std::vector<Word> fwd = deck_transformation_action(sp, false);
  std::vector<Word> bwd = deck_transformation_action(sp, true);
  // fwd then bwd is conjugation by t t^-1 = identity
  for (int g = 0; g < sp.presentation().ngens(); ++g) {
    Word round = fwd[g].substituted(bwd);
    CHECK(round == Word::letter(g));
  }
}
