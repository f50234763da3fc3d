#include "rimforge/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace rimforge {

Int AbelianInvariants::cyclic_order() const {
  if (!is_finite_cyclic()) throw error("abelianization is not finite cyclic");
  return torsion.empty() ? Int(1) : torsion[0];
}

Int AbelianInvariants::torsion_order() const {
  Int p = 1;
  for (const Int& d : torsion) p *= d;
  return p;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    os << "Z";
  } else if (free_rank > 1) {
    sep();
    os << "Z^" << free_rank;
  }
  for (const Int& d : torsion) {
    sep();
    os << "Z/" << d;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

struct Worker {
  std::vector<std::vector<Int>>& a;
  std::vector<std::vector<Int>>& v;
  int m, n;

  void swap_rows(int i, int j) {
    if (i != j) std::swap(a[i], a[j]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
  }
  void add_row(int dst, int src, const Int& q) {  // row dst += q * row src
    if (q == 0) return;
    for (int c = 0; c < n; ++c) a[dst][c] += q * a[src][c];
  }
  void add_col(int dst, int src, const Int& q) {  // col dst += q * col src
    if (q == 0) return;
    for (int r = 0; r < m; ++r) a[r][dst] += q * a[r][src];
    for (int r = 0; r < n; ++r) v[r][dst] += q * v[r][src];
  }
  void negate_col(int c) {
    for (int r = 0; r < m; ++r) a[r][c] = -a[r][c];
    for (int r = 0; r < n; ++r) v[r][c] = -v[r][c];
  }

  // Pivot with least absolute value in the submatrix starting at (t,t);
  // ties resolved by row then column order.
  bool find_pivot(int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < m; ++i) {
      for (int j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        Int mag = iabs(a[i][j]);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }

  int diagonalize() {
    int t = 0;
    while (t < m && t < n) {
      int pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        add_row(i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        add_col(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (clean) ++t;
    }
    for (int i = 0; i < t; ++i) {
      if (a[i][i] < 0) negate_col(i);
    }
    return t;  // rank
  }
};

}  // namespace

SmithForm smith_normal_form(std::vector<std::vector<Int>> A, int ncols) {
  SmithForm out;
  out.rows = static_cast<int>(A.size());
  out.cols = ncols;
  for (auto& row : A) {
    if (static_cast<int>(row.size()) != ncols) throw error("ragged matrix");
  }
  out.V.assign(ncols, std::vector<Int>(ncols, 0));
  for (int i = 0; i < ncols; ++i) out.V[i][i] = 1;

  Worker w{A, out.V, out.rows, ncols};
  int rank = w.diagonalize();

  // Enforce the divisibility chain d1 | d2 | ... : whenever it breaks,
  // fold the later entry into the earlier one and re-diagonalize.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < rank; ++i) {
      if (A[i + 1][i + 1] % A[i][i] != 0) {
        w.add_row(i, i + 1, 1);
        rank = w.diagonalize();
        changed = true;
        break;
      }
    }
  }

  out.diagonal.clear();
  for (int i = 0; i < rank; ++i) out.diagonal.push_back(A[i][i]);
  return out;
}

AbelianStructure::AbelianStructure(const std::vector<std::vector<Int>>& relator_rows,
                                   int ngens)
    : ngens_(ngens) {
  snf_ = smith_normal_form(relator_rows, ngens);
  int rank = static_cast<int>(snf_.diagonal.size());
  inv_.free_rank = ngens - rank;
  for (int i = 0; i < rank; ++i) {
    if (snf_.diagonal[i] >= 2) {
      inv_.torsion.push_back(snf_.diagonal[i]);
      torsion_cols_.push_back(i);
    }
  }
  for (int j = rank; j < ngens; ++j) free_cols_.push_back(j);
}

bool AbelianStructure::Class::zero() const {
  for (const Int& t : torsion) {
    if (t != 0) return false;
  }
  for (const Int& f : free) {
    if (f != 0) return false;
  }
  return true;
}

AbelianStructure::Class AbelianStructure::class_of(const Word& w) const {
  if (w.max_gen() >= ngens_) throw error("word uses generator outside presentation");
  std::vector<Int> x(ngens_, 0);
  for (std::size_t i = 0; i < w.size(); ++i) x[w.gen_at(i)] += w.sign_at(i);
  // y = x * V
  std::vector<Int> y(ngens_, 0);
  for (int i = 0; i < ngens_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < ngens_; ++j) y[j] += x[i] * snf_.V[i][j];
  }
  Class c;
  for (std::size_t k = 0; k < torsion_cols_.size(); ++k) {
    const Int& d = inv_.torsion[k];
    Int r = y[torsion_cols_[k]] % d;
    if (r < 0) r += d;
    c.torsion.push_back(r);
  }
  for (std::size_t col : free_cols_) c.free.push_back(y[col]);
  return c;
}

Int AbelianStructure::cyclic_class(const Word& w) const {
  if (!inv_.is_finite_cyclic()) throw error("abelianization is not finite cyclic");
  Class c = class_of(w);
  return c.torsion.empty() ? Int(0) : c.torsion[0];
}

}  // namespace rimforge
