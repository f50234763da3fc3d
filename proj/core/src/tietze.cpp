#include "rimforge/tietze.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rimforge {

namespace {

struct State {
  std::vector<std::string> names;
  std::vector<Word> relators;
  std::map<Mark, Word> marks;
  std::vector<Word> tracked;
  std::vector<int> survivors;  // original gen -> current index or -1

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const Word& r : relators) n += r.size();
    return n;
  }
  int ngens() const { return static_cast<int>(names.size()); }

  Presentation to_presentation() const { return Presentation(names, relators, marks); }
};

struct Simplifier {
  State st;
  std::size_t input_total;
  int budget;
  int moves = 0;

  // smallest state whose total length stays within the input's (fallback
  // that keeps the length contract; the first normalized state qualifies)
  State best_small;
  bool has_small = false;

  void snapshot() {
    std::size_t tot = st.total_length();
    if (tot <= input_total &&
        (!has_small || st.ngens() < best_small.ngens() ||
         (st.ngens() == best_small.ngens() && tot <= best_small.total_length()))) {
      best_small = st;
      has_small = true;
    }
  }

  bool spend() {
    if (moves >= budget) return false;
    ++moves;
    return true;
  }

  void normalize() {
    std::vector<Word> out;
    std::set<std::vector<int>> seen;
    for (const Word& r : st.relators) {
      Word c = r.cyclically_reduced();
      if (c.empty()) continue;
      auto key = c.cyclic_canonical_key();
      if (seen.insert(key).second) out.push_back(std::move(c));
    }
    st.relators = std::move(out);
    snapshot();
  }

  // Replace in target a cyclic subword that covers more than half of source
  // (or of its inverse) by the shorter complementary piece.
  bool reduce_with(Word& target, const Word& source) {
    const auto& t = target.letters();
    std::size_t nt = t.size(), ns = source.size();
    if (nt == 0 || ns == 0) return false;
    std::size_t need = ns / 2 + 1;  // strict majority of source
    if (nt < need) return false;

    const Word sinv = source.inverse();
    for (const Word* sw : {&source, &sinv}) {
      const auto& s = sw->letters();
      for (std::size_t ts = 0; ts < nt; ++ts) {      // start in target (cyclic)
        for (std::size_t ss = 0; ss < ns; ++ss) {    // start in source (cyclic)
          std::size_t m = 0;
          std::size_t limit = std::min(nt, ns);
          while (m < limit && t[(ts + m) % nt] == s[(ss + m) % ns]) ++m;
          if (m < need) continue;
          // matched segment equals inverse of the source remainder
          std::vector<int> rep;
          for (std::size_t k = ns; k > m; --k) rep.push_back(-s[(ss + k - 1) % ns]);
          std::vector<int> out = rep;
          for (std::size_t k = m; k < nt; ++k) out.push_back(t[(ts + k) % nt]);
          Word w = Word::from_letters(out).cyclically_reduced();
          if (w.size() < nt) {
            target = w;
            return true;
          }
        }
      }
    }
    return false;
  }

  bool subword_pass() {
    bool any = false;
    for (std::size_t i = 0; i < st.relators.size(); ++i) {
      for (std::size_t j = 0; j < st.relators.size(); ++j) {
        if (i == j) continue;
        if (st.relators[i].size() < st.relators[j].size()) continue;
        while (reduce_with(st.relators[i], st.relators[j])) {
          any = true;
          if (!spend()) return any;
          if (st.relators[i].empty()) break;
        }
      }
    }
    return any;
  }

  // One generator elimination: pick the shortest relator containing some
  // generator exactly once; among ties the highest generator index wins.
  bool eliminate_one() {
    int bi = -1, bg = -1;
    std::size_t blen = 0;
    for (std::size_t i = 0; i < st.relators.size(); ++i) {
      const Word& r = st.relators[i];
      for (int g = 0; g < st.ngens(); ++g) {
        if (r.occurrences(g) != 1) continue;
        if (bi < 0 || r.size() < blen || (r.size() == blen && g > bg)) {
          bi = static_cast<int>(i);
          bg = g;
          blen = r.size();
        }
      }
    }
    if (bi < 0) return false;
    if (!spend()) return false;

    // rotate so the g-letter is last: r = C g^e, hence g = C^-1 (e=+1) or C (e=-1)
    const Word& r = st.relators[bi];
    std::size_t pos = 0;
    while (r.gen_at(pos) != bg) ++pos;
    std::vector<int> rot;
    for (std::size_t k = 1; k <= r.size(); ++k) rot.push_back(r.letters()[(pos + k) % r.size()]);
    int e = rot.back() > 0 ? 1 : -1;
    rot.pop_back();
    Word c = Word::from_letters(rot);
    Word image = e > 0 ? c.inverse() : c;

    // guard against runaway growth; the best snapshot keeps earlier states
    std::size_t grown = 0;
    for (std::size_t i = 0; i < st.relators.size(); ++i) {
      if (i == static_cast<std::size_t>(bi)) continue;
      grown += st.relators[i].size() +
               static_cast<std::size_t>(st.relators[i].occurrences(bg)) * image.size();
    }
    if (grown > 4 * std::max<std::size_t>(input_total, 64) + 4 * st.total_length())
      return false;

    std::vector<Word> images;
    for (int g = 0; g < st.ngens(); ++g)
      images.push_back(g == bg ? image : Word::letter(g));

    std::vector<Word> rel;
    for (std::size_t i = 0; i < st.relators.size(); ++i) {
      if (i == static_cast<std::size_t>(bi)) continue;
      rel.push_back(st.relators[i].substituted(images));
    }
    st.relators = std::move(rel);
    for (auto& [m, w] : st.marks) w = w.substituted(images);
    for (Word& w : st.tracked) w = w.substituted(images);

    // drop generator bg and reindex
    std::vector<int> remap(st.ngens(), -1);
    for (int g = 0, n = 0; g < st.ngens(); ++g) {
      if (g != bg) remap[g] = n++;
    }
    std::vector<std::string> names;
    for (int g = 0; g < st.ngens(); ++g) {
      if (g != bg) names.push_back(st.names[g]);
    }
    st.names = std::move(names);
    for (Word& w : st.relators) w = w.reindexed(remap);
    for (auto& [m, w] : st.marks) w = w.reindexed(remap);
    for (Word& w : st.tracked) w = w.reindexed(remap);
    for (int& s : st.survivors) {
      if (s >= 0) s = remap[s];
    }
    return true;
  }

  void run() {
    normalize();
    while (moves < budget) {
      bool changed = subword_pass();
      normalize();
      if (moves >= budget) break;
      if (eliminate_one()) {
        changed = true;
        normalize();
      }
      if (!changed) break;
    }
  }
};

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, std::vector<Word> tracked,
                             int max_moves) {
  for (const Word& w : tracked) {
    if (w.max_gen() >= p.ngens())
      throw error("tracked word uses generator index out of range");
  }
  Simplifier s;
  s.st.names = p.names();
  s.st.relators = p.relators();
  s.st.marks = p.marks();
  s.st.tracked = std::move(tracked);
  s.st.survivors.resize(p.ngens());
  for (int g = 0; g < p.ngens(); ++g) s.st.survivors[g] = g;
  s.input_total = p.total_relator_length();
  s.budget = max_moves;

  s.run();

  // Generator eliminations never add length-increasing states at the end of
  // a pass without the subword pass getting a chance to shrink them, but a
  // budget cut can still leave the final state long; fall back to the best
  // snapshot within the input length in that case.
  const State* pick = &s.st;
  if (s.st.total_length() > s.input_total && s.has_small) pick = &s.best_small;

  TietzeResult out;
  out.presentation = pick->to_presentation();
  out.tracked = pick->tracked;
  out.survivors = pick->survivors;
  out.moves = s.moves;
  return out;
}

}  // namespace rimforge
