#include "rimforge/coset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace rimforge {

CosetTable::CosetTable(int ngens, int ncosets)
    : ngens_(ngens), ncosets_(ncosets), tab_(static_cast<std::size_t>(ncosets) * 2 * ngens, 0) {}

int CosetTable::trace(int coset, const Word& w) const {
  int c = coset;
  for (std::size_t i = 0; i < w.size(); ++i) {
    c = apply(c, w.gen_at(i), w.sign_at(i));
    if (c == 0) return 0;
  }
  return c;
}

std::vector<std::vector<int>> CosetTable::permutations() const {
  if (!complete_) throw error("coset table is not complete");
  std::vector<std::vector<int>> ps(ngens_, std::vector<int>(ncosets_));
  for (int g = 0; g < ngens_; ++g) {
    for (int c = 1; c <= ncosets_; ++c) ps[g][c - 1] = entry(c, column(g, 1)) - 1;
  }
  return ps;
}

std::vector<int> CosetTable::word_permutation(const Word& w) const {
  if (!complete_) throw error("coset table is not complete");
  std::vector<int> perm(ncosets_);
  for (int c = 1; c <= ncosets_; ++c) perm[c - 1] = trace(c, w) - 1;
  return perm;
}

Word CosetTable::coset_word(int coset) const {
  if (!complete_) throw error("coset table is not complete");
  if (coset < 1 || coset > ncosets_) throw error("coset out of range");
  std::vector<int> parent(ncosets_ + 1, 0), via(ncosets_ + 1, 0);
  std::deque<int> q{1};
  parent[1] = 1;
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    if (c == coset) break;
    for (int col = 0; col < cols(); ++col) {
      int d = entry(c, col);
      if (d != 0 && parent[d] == 0) {
        parent[d] = c;
        via[d] = col + 1;
        q.push_back(d);
      }
    }
  }
  std::vector<int> letters;
  for (int c = coset; c != 1; c = parent[c]) {
    int col = via[c] - 1;
    int gen = col / 2;
    letters.push_back(col % 2 == 0 ? gen + 1 : -(gen + 1));
  }
  std::reverse(letters.begin(), letters.end());
  return Word::from_letters(letters);
}

bool CosetTable::verify(const Presentation& p, const std::vector<Word>& subgroup_gens) const {
  if (!complete_ || p.ngens() != ngens_) return false;
  for (int c = 1; c <= ncosets_; ++c) {
    for (int col = 0; col < cols(); ++col) {
      int d = entry(c, col);
      if (d < 1 || d > ncosets_) return false;
      if (entry(d, inverse_column(col)) != c) return false;
    }
  }
  // column bijectivity
  for (int col = 0; col < cols(); ++col) {
    std::vector<char> hit(ncosets_ + 1, 0);
    for (int c = 1; c <= ncosets_; ++c) {
      int d = entry(c, col);
      if (hit[d]) return false;
      hit[d] = 1;
    }
  }
  for (const Word& r : p.relators()) {
    for (int c = 1; c <= ncosets_; ++c) {
      if (trace(c, r) != c) return false;
    }
  }
  for (const Word& h : subgroup_gens) {
    if (trace(1, h) != 1) return false;
  }
  // transitivity (reachability from coset 1)
  std::vector<char> seen(ncosets_ + 1, 0);
  std::deque<int> q{1};
  seen[1] = 1;
  int count = 1;
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    for (int col = 0; col < cols(); ++col) {
      int d = entry(c, col);
      if (!seen[d]) {
        seen[d] = 1;
        ++count;
        q.push_back(d);
      }
    }
  }
  return count == ncosets_;
}

Int permutation_order(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  Int order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    order = boost::multiprecision::lcm(order, len);
  }
  return order;
}

namespace {
struct CapacityHit {};
}  // namespace

/// HLT enumerator with lookahead (Todd-Coxeter). Cosets are 1-based;
/// p_[c] < c marks a dead coset whose representative is found by rep().
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgens, int max_cosets)
      : pres_(p), max_(std::max(2, max_cosets)), cols_(2 * p.ngens()) {
    for (const Word& r : p.relators()) {
      std::vector<int> rr;
      Word cr = r.cyclically_reduced();
      for (std::size_t i = 0; i < cr.size(); ++i)
        rr.push_back(CosetTable::column(cr.gen_at(i), cr.sign_at(i)));
      if (!rr.empty()) relators_.push_back(std::move(rr));
    }
    for (const Word& h : subgens) {
      std::vector<int> rr;
      for (std::size_t i = 0; i < h.size(); ++i)
        rr.push_back(CosetTable::column(h.gen_at(i), h.sign_at(i)));
      subgens_.push_back(std::move(rr));
    }
    tab_.assign(static_cast<std::size_t>(max_ + 1) * std::max(cols_, 1), 0);
    p_.assign(max_ + 1, 0);
    nalive_ = 1;
    nrows_ = 1;
    p_[1] = 1;
  }

  EnumerationResult run() {
    EnumerationResult out;
    if (cols_ == 0) {
      // free group on zero generators: trivial group, one coset
      out.status = EnumerationResult::Status::complete;
      out.table = CosetTable(0, 1);
      out.table.complete_ = true;
      return out;
    }
    long last_lookahead_alive = -1;
    int lookaheads = 0;
    while (true) {
      try {
        hlt_pass();
        break;  // completed
      } catch (CapacityHit&) {
        lookahead();
        compact();
        ++lookaheads;
        if (nalive_ >= max_ - 1 ||
            (last_lookahead_alive >= 0 && nalive_ >= last_lookahead_alive) ||
            lookaheads > 20) {
          out.status = EnumerationResult::Status::indeterminate;
          out.cosets_defined = defined_;
          return out;
        }
        last_lookahead_alive = nalive_;
      }
    }
    compact();
    out.status = EnumerationResult::Status::complete;
    out.cosets_defined = defined_;
    out.table = standardized();
    if (!out.table.verify(pres_, subgens_words())) throw error("internal: coset table failed verification");
    return out;
  }

 private:
  const Presentation& pres_;
  int max_;
  int cols_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgens_;
  std::vector<int> tab_;
  std::vector<int> p_;
  std::deque<int> q_;
  long nalive_ = 0;
  int nrows_ = 0;
  long defined_ = 0;

  std::vector<Word> subgens_words() const {
    std::vector<Word> ws;
    for (const auto& s : subgens_) {
      std::vector<int> letters;
      for (int col : s) letters.push_back(col % 2 == 0 ? col / 2 + 1 : -(col / 2 + 1));
      ws.push_back(Word::from_letters(letters));
    }
    return ws;
  }

  int& tau(int c, int col) { return tab_[static_cast<std::size_t>(c) * cols_ + col]; }
  int tau(int c, int col) const { return tab_[static_cast<std::size_t>(c) * cols_ + col]; }
  bool alive(int c) const { return p_[c] == c; }

  int rep(int c) {
    int r = c;
    while (p_[r] != r) r = p_[r];
    while (p_[c] != r) {
      int nxt = p_[c];
      p_[c] = r;
      c = nxt;
    }
    return r;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    --nalive_;
    q_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!q_.empty()) {
      int e = q_.front();
      q_.pop_front();
      for (int col = 0; col < cols_; ++col) {
        int f = tau(e, col);
        if (f == 0) continue;
        tau(f, CosetTable::inverse_column(col)) = 0;
        int e1 = rep(e);
        int f1 = rep(f);
        if (int t = tau(e1, col); t != 0) {
          merge(f1, t);
        } else if (int u = tau(f1, CosetTable::inverse_column(col)); u != 0) {
          merge(e1, u);
        } else {
          tau(e1, col) = f1;
          tau(f1, CosetTable::inverse_column(col)) = e1;
        }
      }
    }
  }

  int define(int c, int col) {
    if (nrows_ >= max_) throw CapacityHit{};
    int d = ++nrows_;
    ++defined_;
    p_[d] = d;
    ++nalive_;
    tau(c, col) = d;
    tau(d, CosetTable::inverse_column(col)) = c;
    return d;
  }

  /// Scans word w at coset a, defining cosets to fill gaps (HLT).
  void scan_and_fill(int a, const std::vector<int>& w) {
    if (w.empty()) return;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    int f = a, b = a;
    while (true) {
      while (i <= j && tau(f, w[i]) != 0) f = tau(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tau(b, CosetTable::inverse_column(w[j])) != 0)
        b = tau(b, CosetTable::inverse_column(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {  // deduction closes the gap
        tau(f, w[i]) = b;
        tau(b, CosetTable::inverse_column(w[i])) = f;
        return;
      }
      f = define(f, w[i++]);
    }
  }

  /// Scan without filling; used during lookahead to harvest coincidences.
  void scan(int a, const std::vector<int>& w) {
    if (w.empty()) return;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    int f = a, b = a;
    while (i <= j && tau(f, w[i]) != 0) f = tau(f, w[i++]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && tau(b, CosetTable::inverse_column(w[j])) != 0)
      b = tau(b, CosetTable::inverse_column(w[j--]));
    if (j == i) {
      tau(f, w[i]) = b;
      tau(b, CosetTable::inverse_column(w[i])) = f;
    } else if (j < i) {
      coincidence(f, b);
    }
  }

  void hlt_pass() {
    for (const auto& h : subgens_) {
      if (alive(1)) scan_and_fill(1, h);
    }
    for (int a = 1; a <= nrows_; ++a) {
      if (!alive(a)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(rep(a), r);
        if (!alive(a)) break;
      }
      if (!alive(a)) continue;
      for (int col = 0; col < cols_; ++col) {
        int c = rep(a);
        if (tau(c, col) == 0) define(c, col);
      }
    }
  }

  void lookahead() {
    for (int a = 1; a <= nrows_; ++a) {
      if (!alive(a)) continue;
      for (const auto& r : relators_) {
        scan(rep(a), r);
        if (!alive(a)) break;
      }
    }
  }

  /// Renumbers live cosets consecutively, dropping dead rows.
  void compact() {
    std::vector<int> newid(nrows_ + 1, 0);
    int next = 0;
    for (int c = 1; c <= nrows_; ++c) {
      if (alive(c)) newid[c] = ++next;
    }
    for (int c = 1; c <= nrows_; ++c) {
      if (!alive(c)) continue;
      int nc = newid[c];
      for (int col = 0; col < cols_; ++col) {
        int d = tau(c, col);
        tab_[static_cast<std::size_t>(nc) * cols_ + col] = d == 0 ? 0 : newid[rep(d)];
      }
    }
    nrows_ = next;
    nalive_ = next;
    for (int c = 0; c <= nrows_; ++c) p_[c] = c;
    std::fill(tab_.begin() + static_cast<std::size_t>(nrows_ + 1) * cols_, tab_.end(), 0);
  }

  /// BFS renumbering from coset 1 in column order: canonical table.
  CosetTable standardized() const {
    CosetTable t(pres_.ngens(), nrows_);
    std::vector<int> order(nrows_ + 1, 0);  // old -> new
    std::vector<int> bfs{1};
    order[1] = 1;
    int next = 1;
    for (std::size_t k = 0; k < bfs.size(); ++k) {
      int c = bfs[k];
      for (int col = 0; col < cols_; ++col) {
        int d = tau(c, col);
        if (d != 0 && order[d] == 0) {
          order[d] = ++next;
          bfs.push_back(d);
        }
      }
    }
    if (next != nrows_) throw error("internal: coset table not transitive");
    for (int c = 1; c <= nrows_; ++c) {
      for (int col = 0; col < cols_; ++col) {
        int d = tau(c, col);
        t.entry(order[c], col) = d == 0 ? 0 : order[d];
      }
    }
    t.complete_ = true;
    for (int c = 1; c <= nrows_; ++c) {
      for (int col = 0; col < cols_; ++col) {
        if (t.entry(c, col) == 0) throw error("internal: incomplete table after HLT");
      }
    }
    return t;
  }
};

EnumerationResult enumerate_cosets(const Presentation& p,
                                   const std::vector<Word>& subgroup_gens,
                                   int max_cosets) {
  for (const Word& h : subgroup_gens) {
    if (h.max_gen() >= p.ngens())
      throw error("subgroup generator uses generator index out of range");
  }
  Enumerator e(p, subgroup_gens, max_cosets);
  return e.run();
}

}  // namespace rimforge
