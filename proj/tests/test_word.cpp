#include <random>

#include "doctest.h"
#include "rimforge/text.hpp"
#include "rimforge/word.hpp"

using namespace rimforge;

namespace {

// independent reduction oracle: repeatedly delete the first cancelling pair
std::vector<int> slow_reduce(std::vector<int> v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == -v[i + 1]) {
        v.erase(v.begin() + i, v.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return v;
}

}  // namespace

TEST_CASE("free reduction basics") {
  // a a^-1 b -> b
  CHECK(Word::from_letters({1, -1, 2}) == Word::letter(1));
  // empty -> empty
  CHECK(Word::from_letters({}).empty());
  // a b b^-1 a -> a a
  CHECK(Word::from_letters({1, 2, -2, 1}) == Word::from_letters({1, 1}));
}

TEST_CASE("free reduction is idempotent and length-nonincreasing") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> len(0, 40), gen(1, 3), sgn(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) raw.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
    Word w = Word::from_letters(raw);
    CHECK(w.size() <= raw.size());
    CHECK(Word::from_letters(w.letters()) == w);
    CHECK(w.letters() == slow_reduce(raw));
  }
}

TEST_CASE("substitution") {
  // w = [a,b], a -> x, b -> y gives [x,y]
  Word w = Word::commutator(Word::letter(0), Word::letter(1));
  std::vector<Word> ren{Word::letter(2), Word::letter(3)};
  CHECK(w.substituted(ren) == Word::commutator(Word::letter(2), Word::letter(3)));

  // w = a^2, a -> b^-1 gives b^-2
  CHECK(Word::power_of(0, 2).substituted({Word::letter(1, -1)}) == Word::power_of(1, -2));

  // w = a*b, a -> x*y, b -> y^-1 gives x  (hand-reduced oracle)
  Word ab = Word::letter(0) * Word::letter(1);
  std::vector<Word> im{Word::letter(2) * Word::letter(3), Word::letter(3, -1)};
  CHECK(ab.substituted(im) == Word::letter(2));

  CHECK_THROWS_AS(Word::letter(5).substituted(im), error);
}

TEST_CASE("substitution composes as assignment composition") {
  std::mt19937 rng(999);
  std::uniform_int_distribution<int> len(0, 12), gen(1, 3), sgn(0, 1);
  auto random_word = [&]() {
    std::vector<int> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) raw.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
    return Word::from_letters(raw);
  };
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_word();
    std::vector<Word> f{random_word(), random_word(), random_word()};
    std::vector<Word> g{random_word(), random_word(), random_word()};
    std::vector<Word> comp;
    for (const Word& fi : f) comp.push_back(fi.substituted(g));
    CHECK(w.substituted(f).substituted(g) == w.substituted(comp));
  }
}

TEST_CASE("substitution respects inverses") {
  Word w = Word::from_letters({1, 2, -1});
  std::vector<Word> im{Word::from_letters({2, 3}), Word::from_letters({-3, 1})};
  CHECK(w.inverse().substituted(im) == w.substituted(im).inverse());
}

TEST_CASE("cyclic reduction and canonical keys") {
  // a b a^-1 cyclically reduces to b
  Word w = Word::from_letters({1, 2, -1});
  CHECK(w.cyclically_reduced() == Word::letter(1));
  // rotations and inverses share a canonical key
  Word r1 = Word::from_letters({1, 2, -1, 3});
  Word r2 = Word::from_letters({-1, 3, 1, 2});
  CHECK(r1.cyclic_canonical_key() == r2.cyclic_canonical_key());
  CHECK(r1.cyclic_canonical_key() == r1.inverse().cyclic_canonical_key());
}

TEST_CASE("word printing and parsing round-trip") {
  Presentation p({"a", "b", "c"}, {});
  Word w = Word::from_letters({1, 1, -2, 3, 3, 3});
  std::string s = print_word(w, p.names());
  CHECK(s == "a^2*b^-1*c^3");
  CHECK(parse_word(s, p) == w);
  CHECK(parse_word("1", p).empty());
  CHECK(parse_word("[a,b]", p) == Word::commutator(Word::letter(0), Word::letter(1)));
  CHECK(parse_word("(a*b)^2", p) == Word::from_letters({1, 2, 1, 2}));
  CHECK_THROWS_AS(parse_word("a*q", p), error);
}
