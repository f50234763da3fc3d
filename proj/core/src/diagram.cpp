#include "rimforge/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace rimforge {

namespace {

long succ(long e, long two_n) { return e % two_n + 1; }

struct CrossingInfo {
  long a, b, c, d;
  bool over_b_to_d;  // over-strand direction; false means d -> b
  int sign() const { return over_b_to_d ? -1 : 1; }
};

std::vector<CrossingInfo> analyze(const PdCode& pd) {
  if (pd.empty()) throw error("diagram code has no crossings");
  long n = static_cast<long>(pd.size());
  long two_n = 2 * n;
  std::vector<int> uses(two_n + 1, 0);
  for (const auto& q : pd) {
    for (long e : q) {
      if (e < 1 || e > two_n)
        throw error("diagram edge label " + std::to_string(e) + " out of range 1.." +
                    std::to_string(two_n));
      ++uses[e];
    }
  }
  for (long e = 1; e <= two_n; ++e) {
    if (uses[e] != 2)
      throw error("diagram edge label " + std::to_string(e) +
                  " must occur exactly twice (multiple components or bad code)");
  }
  std::vector<CrossingInfo> out;
  std::vector<int> incoming(two_n + 1, 0), outgoing(two_n + 1, 0);
  for (const auto& q : pd) {
    CrossingInfo ci{q[0], q[1], q[2], q[3], false};
    if (ci.c != succ(ci.a, two_n))
      throw error("under-strand edges " + std::to_string(ci.a) + "," + std::to_string(ci.c) +
                  " are not consecutive (non-planar consistency)");
    if (ci.d == succ(ci.b, two_n)) {
      ci.over_b_to_d = true;
    } else if (ci.b == succ(ci.d, two_n)) {
      ci.over_b_to_d = false;
    } else {
      throw error("over-strand edges " + std::to_string(ci.b) + "," + std::to_string(ci.d) +
                  " are not consecutive (non-planar consistency)");
    }
    ++incoming[ci.a];
    ++outgoing[ci.c];
    ++incoming[ci.over_b_to_d ? ci.b : ci.d];
    ++outgoing[ci.over_b_to_d ? ci.d : ci.b];
    out.push_back(ci);
  }
  // every edge runs from exactly one crossing to exactly one crossing; with
  // the successor checks above this forces a single component
  for (long e = 1; e <= two_n; ++e) {
    if (incoming[e] != 1 || outgoing[e] != 1)
      throw error("diagram edge " + std::to_string(e) +
                  " lacks a coherent orientation (multiple components or bad code)");
  }
  return out;
}

}  // namespace

void validate_pd(const PdCode& pd) { analyze(pd); }

PdCode mirror_pd(const PdCode& pd) {
  auto info = analyze(pd);
  PdCode out;
  for (const auto& ci : info) {
    if (ci.over_b_to_d) {
      out.push_back({ci.b, ci.c, ci.d, ci.a});
    } else {
      out.push_back({ci.d, ci.a, ci.b, ci.c});
    }
  }
  validate_pd(out);
  return out;
}

WirtingerData wirtinger_from_pd(const PdCode& pd) {
  auto info = analyze(pd);
  long n = static_cast<long>(pd.size());
  long two_n = 2 * n;

  // arcs break after every under-in edge
  std::vector<char> break_after(two_n + 1, 0);
  for (const auto& ci : info) break_after[ci.a] = 1;

  std::vector<int> arc_of(two_n + 1, -1);
  int aid = 0;
  for (long e = 1; e <= two_n; ++e) {
    arc_of[e] = aid;
    if (break_after[e]) ++aid;
  }
  if (!break_after[two_n]) {
    // the run through the wrap merges with the arc of edge 1; its id is the
    // highest assigned, so the surviving ids stay contiguous
    int last = arc_of[two_n];
    for (long e = 1; e <= two_n; ++e) {
      if (arc_of[e] == last) arc_of[e] = 0;
    }
  }
  int arcs = aid;  // one arc per undercrossing

  std::vector<std::string> names;
  for (int i = 1; i <= arcs; ++i) names.push_back("x" + std::to_string(i));

  std::vector<Word> relators;
  for (std::size_t k = 0; k < info.size(); ++k) {
    const auto& ci = info[k];
    int A = arc_of[ci.a], C = arc_of[ci.c], O = arc_of[ci.b];
    if (O != arc_of[ci.d]) throw error("internal: over edges in different arcs");
    if (k + 1 == info.size()) break;  // one relator is a consequence of the rest
    int e = ci.sign();
    relators.push_back(Word::from_letters({-(C + 1), e * (O + 1), A + 1, -e * (O + 1)}));
  }

  // longitude: over-arcs met while running under, corrected by the writhe
  std::vector<int> lonletters;
  std::map<long, const CrossingInfo*> under_at;  // edge -> crossing it under-enters
  int writhe = 0;
  for (const auto& ci : info) {
    under_at[ci.a] = &ci;
    writhe += ci.sign();
  }
  for (long e = 1; e <= two_n; ++e) {
    auto it = under_at.find(e);
    if (it == under_at.end()) continue;
    const auto& ci = *it->second;
    int O = arc_of[ci.b];
    lonletters.push_back(ci.sign() * (O + 1));
  }
  // with the relator convention x_out = y x_in y^-1, the telescoped product
  // commuting with the meridian is y_n ... y_1
  std::reverse(lonletters.begin(), lonletters.end());
  Word longitude = Word::from_letters(lonletters) * Word::power_of(0, -writhe);

  std::map<Mark, Word> marks;
  marks[Mark::meridian] = Word::letter(arc_of[1]);
  marks[Mark::longitude] = longitude;

  WirtingerData out;
  out.presentation = Presentation(std::move(names), std::move(relators), std::move(marks));
  out.crossings = static_cast<int>(n);
  out.arcs = arcs;
  return out;
}

PdCode braid_closure_pd(int strands, const std::vector<int>& braid_word) {
  if (strands < 2) throw error("braid needs at least 2 strands");
  for (int l : braid_word) {
    int i = std::abs(l);
    if (i < 1 || i >= strands) throw error("braid letter position out of range");
  }
  if (braid_word.empty()) throw error("empty braid word");

  struct Crossing {
    int slot[4];     // edge segment ids, ccw: in-left, out-left, out-right, in-right
    bool under_a;    // under pair is (slot0, slot2)? else (slot1, slot3)
  };
  std::vector<Crossing> xs;
  int nseg = 0;
  std::vector<int> top(strands), cur(strands);
  for (int j = 0; j < strands; ++j) top[j] = cur[j] = nseg++;

  for (int l : braid_word) {
    int i = std::abs(l) - 1;  // 0-based left position
    int il = cur[i], ir = cur[i + 1];
    int ol = nseg++, orr = nseg++;
    Crossing c{};
    c.slot[0] = il;
    c.slot[1] = ol;
    c.slot[2] = orr;
    c.slot[3] = ir;
    // positive letter: left strand (il -> or) on top, so the under strand
    // is ir -> ol, occupying slots 3 and 1
    c.under_a = (l < 0);
    xs.push_back(c);
    cur[i] = ol;
    cur[i + 1] = orr;
  }

  // closure: identify bottom segments with the top ones
  std::vector<int> uf(nseg);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int j = 0; j < strands; ++j) {
    int a = find(top[j]), b = find(cur[j]);
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  }

  // incidences of each merged edge: (crossing, slot) pairs in fixed order
  std::map<int, std::vector<std::pair<int, int>>> inc;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    for (int s = 0; s < 4; ++s) inc[find(xs[k].slot[s])].push_back({static_cast<int>(k), s});
  }
  for (const auto& [e, ps] : inc) {
    if (ps.size() != 2) throw error("braid closure is not a knot diagram");
  }

  // trace the knot, labeling edges 1..2n in traversal order
  long two_n = 2 * static_cast<long>(xs.size());
  std::map<int, long> label;
  std::vector<std::array<long, 4>> edge_label(xs.size(), {0, 0, 0, 0});
  std::vector<std::array<char, 4>> arrived(xs.size(), {0, 0, 0, 0});

  int e0 = find(xs[0].slot[0]);
  auto arrival0 = inc[e0][0];
  int edge = e0;
  std::pair<int, int> arrival = arrival0;
  long next_label = 1;
  while (true) {
    label[edge] = next_label++;
    auto [k, s] = arrival;
    arrived[k][s] = 1;
    int exit_slot = (s + 2) % 4;
    int nxt = find(xs[k].slot[exit_slot]);
    // the next arrival is the other incidence of nxt
    auto& ps = inc[nxt];
    std::pair<int, int> other = (ps[0] == std::make_pair(k, exit_slot)) ? ps[1] : ps[0];
    if (nxt == e0 && other == arrival0) break;
    if (label.count(nxt)) throw error("braid closure is not a knot diagram");
    edge = nxt;
    arrival = other;
  }
  if (static_cast<long>(label.size()) != two_n)
    throw error("braid closure has multiple components");

  PdCode out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    for (int s = 0; s < 4; ++s) edge_label[k][s] = label[find(xs[k].slot[s])];
    int u;  // arrival slot on the under pair
    if (xs[k].under_a) {
      u = arrived[k][0] ? 0 : 2;
    } else {
      u = arrived[k][1] ? 1 : 3;
    }
    out.push_back({edge_label[k][u], edge_label[k][(u + 1) % 4], edge_label[k][(u + 2) % 4],
                   edge_label[k][(u + 3) % 4]});
  }
  validate_pd(out);
  return out;
}

}  // namespace rimforge
