#include "rimforge/symplectic.hpp"

#include <algorithm>
#include <map>

#include "rimforge/text.hpp"

namespace rimforge {

KdResult check_kd(const Presentation& group, const Word& gamma, const Budget& budget) {
  KdResult out;
  if (gamma.max_gen() >= group.ngens()) throw error("gamma uses generator out of range");
  AbelianInvariants ab = group.abelianization();
  if (ab.free_rank > 0) {
    out.status = KdResult::Status::fails;
    out.reason = "H1 not finite cyclic (free rank " + std::to_string(ab.free_rank) + ")";
    return out;
  }
  if (ab.torsion.size() > 1) {
    out.status = KdResult::Status::fails;
    out.reason = "H1 not cyclic: " + ab.to_string();
    return out;
  }
  Presentation q = group.quotient_by_normal_closure({gamma});
  EnumerationResult er = enumerate_cosets(q, {}, budget.max_cosets);
  if (!er.complete()) {
    out.status = KdResult::Status::indeterminate;
    out.reason = "normal generation check exhausted the coset budget";
    return out;
  }
  if (er.index() != 1) {
    out.status = KdResult::Status::fails;
    out.reason = "gamma does not normally generate (quotient has order " +
                 std::to_string(er.index()) + ")";
    return out;
  }
  out.status = KdResult::Status::holds;
  out.d = ab.cyclic_order();
  return out;
}

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  // right action: (a then b)
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

std::vector<int> invert(const std::vector<int>& a) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

bool is_identity(const std::vector<int>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != static_cast<int>(i)) return false;
  }
  return true;
}

}  // namespace

WitnessResult find_commutator_witnesses(const Presentation& group, const Word& gamma,
                                        int d, const Budget& budget) {
  WitnessResult out;
  EnumerationResult er = enumerate_cosets(group, {}, budget.max_cosets);
  if (!er.complete()) {
    out.note = "group order not certified within the coset budget";
    return out;
  }
  long n = er.index();
  if (n > budget.witness_group_cap) {
    out.note = "group order exceeds the witness search cap";
    return out;
  }
  const CosetTable& tab = er.table;
  std::vector<int> target = tab.word_permutation(gamma.pow(d));
  if (is_identity(target)) {
    out.status = WitnessResult::Status::found;
    out.note = "gamma^d is trivial; empty commutator product";
    return out;
  }

  // elements in canonical coset order with their representative words
  std::vector<std::vector<int>> elts(n);
  std::vector<Word> words(n);
  for (long i = 0; i < n; ++i) {
    words[i] = tab.coset_word(static_cast<int>(i + 1));
    elts[i] = tab.word_permutation(words[i]);
  }

  long ops = 0;
  struct Entry {
    std::vector<std::pair<int, int>> pairs;  // witness indices so far
  };
  std::map<std::vector<int>, Entry> level;  // value -> first witness
  std::map<std::vector<int>, Entry> all;
  // level 1: all commutator values in canonical pair order
  std::vector<std::pair<std::vector<int>, Entry>> ordered_level;
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      if (++ops > budget.witness_search_ops) {
        out.note = "witness search budget exhausted";
        return out;
      }
      std::vector<int> c = compose(compose(invert(elts[i]), invert(elts[j])),
                                   compose(elts[i], elts[j]));
      if (is_identity(c)) continue;
      Entry e{{{static_cast<int>(i), static_cast<int>(j)}}};
      if (all.emplace(c, e).second) ordered_level.push_back({c, e});
    }
  }
  std::vector<std::pair<std::vector<int>, Entry>> commutators = ordered_level;

  for (int depth = 1; depth <= budget.witness_max_commutators; ++depth) {
    for (const auto& [val, entry] : ordered_level) {
      if (val == target) {
        out.status = WitnessResult::Status::found;
        for (auto [i, j] : entry.pairs) out.witnesses.push_back({words[i], words[j]});
        return out;
      }
    }
    if (depth == budget.witness_max_commutators) break;
    std::vector<std::pair<std::vector<int>, Entry>> next;
    for (const auto& [val, entry] : ordered_level) {
      for (const auto& [cval, centry] : commutators) {
        if (++ops > budget.witness_search_ops) {
          out.note = "witness search budget exhausted";
          return out;
        }
        std::vector<int> prod = compose(val, cval);
        Entry e = entry;
        e.pairs.push_back(centry.pairs[0]);
        if (all.emplace(prod, e).second) next.push_back({prod, e});
      }
    }
    ordered_level = std::move(next);
    if (ordered_level.empty()) break;
  }
  out.note = "no witness within " + std::to_string(budget.witness_max_commutators) +
             " commutators";
  return out;
}

bool verify_witnesses(const Presentation& group, const Word& gamma, int d,
                      const std::vector<std::pair<Word, Word>>& witnesses,
                      const Budget& budget) {
  EnumerationResult er = enumerate_cosets(group, {}, budget.max_cosets);
  if (!er.complete()) throw error("witness verification needs a certified finite group");
  Word prod;
  for (const auto& [v, w] : witnesses) prod = prod * Word::commutator(v, w);
  return er.table.word_permutation(gamma.pow(d)) == er.table.word_permutation(prod);
}

std::optional<KdWitness> make_kd_witness(const Presentation& group, const Word& gamma,
                                         const Budget& budget) {
  KdResult kd = check_kd(group, gamma, budget);
  if (kd.status == KdResult::Status::fails)
    throw error("condition K_d fails: " + kd.reason);
  if (kd.status == KdResult::Status::indeterminate) return std::nullopt;
  if (kd.d > 1000000) throw error("H1 order too large for the realization pipeline");
  int d = static_cast<int>(kd.d.convert_to<long>());
  WitnessResult wr = find_commutator_witnesses(group, gamma, d, budget);
  if (!wr.found()) return std::nullopt;
  KdWitness out;
  out.group = group;
  out.gamma = gamma;
  out.d = d;
  out.commutator_witnesses = wr.witnesses;
  out.verified = verify_witnesses(group, gamma, d, wr.witnesses, budget);
  if (!out.verified) throw error("internal: witness verification failed");
  return out;
}

SympPipelineResult build_symplectic_pipeline(const KdWitness& kd, const Budget& budget) {
  if (!kd.verified) throw error("pipeline needs a verified K_d witness");
  const int l = kd.group.ngens();
  const int n = static_cast<int>(kd.commutator_witnesses.size());
  const int d = kd.d;
  if (d < 1) throw error("pipeline needs d >= 1");

  // generators: alpha, beta, x1..xl, y1..yl, a1..an, b1..bn, g1..gd
  std::vector<std::string> names{"alpha", "beta"};
  const int alpha = 0, beta = 1;
  auto add = [&](const std::string& stem, int count) {
    int first = static_cast<int>(names.size());
    for (int i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
    return first;
  };
  const int x0 = add("x", l);
  const int y0 = add("y", l);
  const int a0 = n ? add("a", n) : static_cast<int>(names.size());
  const int b0 = n ? add("b", n) : static_cast<int>(names.size());
  const int g0 = add("g", d);
  const int ngen = static_cast<int>(names.size());

  // input words rewritten onto the x block
  std::vector<int> xmap(l);
  for (int i = 0; i < l; ++i) xmap[i] = x0 + i;
  auto onto_x = [&](const Word& w) { return w.reindexed(xmap); };

  std::vector<Word> relators;
  for (int g = 0; g < ngen; ++g) {
    if (g == alpha) continue;
    relators.push_back(Word::commutator(Word::letter(alpha), Word::letter(g)));
  }
  for (int i = 0; i < l; ++i) {
    relators.push_back(Word::commutator(Word::letter(beta), Word::letter(x0 + i)));
    relators.push_back(Word::commutator(Word::letter(beta), Word::letter(y0 + i)));
  }
  for (int j = 0; j < n; ++j) {
    relators.push_back(Word::commutator(Word::letter(beta), Word::letter(a0 + j)));
    relators.push_back(Word::commutator(Word::letter(beta), Word::letter(b0 + j)));
  }
  // monodromy of the punctures: g_k^beta = g_{k+1}, g_d^beta = eta g_1 eta^-1
  Word b = Word::letter(beta);
  for (int k = 0; k + 1 < d; ++k) {
    relators.push_back(Word::letter(g0 + k).conjugated(b) *
                       Word::letter(g0 + k + 1).inverse());
  }
  Word eta;
  for (int k = d - 1; k >= 0; --k) eta = eta * Word::letter(g0 + k);
  relators.push_back(Word::letter(g0 + d - 1).conjugated(b) *
                     (eta * Word::letter(g0) * eta.inverse()).inverse());
  // surface relation: prod [x_i,y_i] prod [a_j,b_j] = g_d ... g_1
  Word comm;
  for (int i = 0; i < l; ++i)
    comm = comm * Word::commutator(Word::letter(x0 + i), Word::letter(y0 + i));
  for (int j = 0; j < n; ++j)
    comm = comm * Word::commutator(Word::letter(a0 + j), Word::letter(b0 + j));
  relators.push_back(comm * eta.inverse());

  std::map<Mark, Word> marks{{Mark::gamma, Word::letter(g0)}};
  SympPipelineResult out;
  out.xd = Presentation(names, relators, marks);

  // fiber-sum kills: alpha, beta, y_i, input relators, a_j^-1 v_j,
  // b_j^-1 w_j, and g_1^-1 w
  std::vector<Word> kills{Word::letter(alpha), Word::letter(beta)};
  for (int i = 0; i < l; ++i) kills.push_back(Word::letter(y0 + i));
  for (const Word& r : kd.group.relators()) kills.push_back(onto_x(r));
  for (int j = 0; j < n; ++j) {
    kills.push_back(Word::letter(a0 + j).inverse() * onto_x(kd.commutator_witnesses[j].first));
    kills.push_back(Word::letter(b0 + j).inverse() * onto_x(kd.commutator_witnesses[j].second));
  }
  kills.push_back(Word::letter(g0).inverse() * onto_x(kd.gamma));

  Presentation md_raw = out.xd.quotient_by_normal_closure(kills);
  TietzeResult md_tz = tietze_simplify(md_raw, {}, budget.tietze_moves);
  out.md = md_tz.presentation;

  // certify md against the input group
  if (presentations_match(out.md, kd.group)) {
    out.md_certification = {Tier::T1, true, true, "identical presentation after kills"};
  } else {
    GroupInvariants a = group_invariants(out.md, d, budget);
    GroupInvariants g = group_invariants(kd.group, d, budget);
    if (a.order_known && g.order_known) {
      if (!(a == g))
        throw error("certification failure: pipeline group does not match the input");
      out.md_certification = {Tier::T2, true, true,
                              "order " + a.order.str() + " and invariants match"};
    } else {
      out.md_certification = {Tier::ASSERTED, true, false, "enumeration indeterminate"};
    }
  }

  // the ambient manifold group: additionally kill gamma
  Presentation m_raw = md_raw.quotient_by_normal_closure({Word::letter(g0)});
  TietzeResult m_tz = tietze_simplify(m_raw, {}, budget.tietze_moves);
  out.m = m_tz.presentation;
  EnumerationResult em = enumerate_cosets(out.m, {}, budget.max_cosets);
  if (em.complete()) {
    if (em.index() != 1)
      throw error("certification failure: ambient group is not trivial");
    out.m_certification = {Tier::T2, true, true, "enumerates to the trivial group"};
  } else {
    out.m_certification = {Tier::ASSERTED, true, false, "enumeration indeterminate"};
  }

  out.notes.push_back(
      "torus stabilizations used to embed the kill curves add generator pairs that are "
      "immediately killed; modeled as a net no-op");
  return out;
}

}  // namespace rimforge
