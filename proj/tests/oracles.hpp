// Test-only oracles, independent of the library implementation paths they
// check: minor-gcd Smith form, permutation-group closures, SL(2,q) element
// counts, the torus-knot polynomial formula and Sylvester resultants.
#pragma once

#include <algorithm>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "rimforge/common.hpp"
#include "rimforge/laurent.hpp"

namespace oracles {

using rimforge::Int;
using Rational = boost::multiprecision::cpp_rational;

// invariant-factor products via gcds of k x k minors: d1...dk = gcd(minors_k)
inline Int minor_gcd(const std::vector<std::vector<Int>>& m, int k) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  Int g = 0;
  auto det = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
    // Laplace expansion; k is tiny in tests
    std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a[i][j] = m[rs[i]][cs[j]];
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Int d = 0;
    do {
      int inv = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (perm[i] > perm[j]) ++inv;
      Int term = (inv % 2 == 0) ? 1 : -1;
      for (int i = 0; i < k; ++i) term *= a[i][perm[i]];
      d += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return d;
  };

  std::vector<std::vector<int>> rchoices, cchoices;
  auto gen = [](int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> c(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == k) {
        out.push_back(c);
        return;
      }
      for (int i = start; i < n; ++i) {
        c[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
  };
  gen(rows, k, rchoices);
  gen(cols, k, cchoices);
  for (const auto& rs : rchoices)
    for (const auto& cs : cchoices) g = boost::multiprecision::gcd(g, det(rs, cs));
  return g < 0 ? Int(-g) : g;
}

// invariant factors >= 2 of coker(Z^cols / rows(m)) via minor gcds
inline std::vector<Int> smith_invariants_oracle(const std::vector<std::vector<Int>>& m,
                                                int cols) {
  int rows = static_cast<int>(m.size());
  int kmax = std::min(rows, cols);
  std::vector<Int> inv;
  Int prev = 1;
  for (int k = 1; k <= kmax; ++k) {
    Int g = minor_gcd(m, k);
    if (g == 0) break;
    inv.push_back(g / prev);
    prev = g;
  }
  std::vector<Int> out;
  for (const Int& d : inv)
    if (d >= 2) out.push_back(d);
  return out;
}

// ---- permutation groups ----

using Perm = std::vector<int>;

inline Perm pcompose(const Perm& a, const Perm& b) {  // a then b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

inline long closure_order(const std::vector<Perm>& gens, long cap = 100000) {
  std::set<Perm> seen;
  std::vector<Perm> frontier;
  Perm id(gens.empty() ? 0 : gens[0].size());
  std::iota(id.begin(), id.end(), 0);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& g : gens) {
        Perm q = pcompose(p, g);
        if (seen.insert(q).second) {
          next.push_back(q);
          if (static_cast<long>(seen.size()) > cap) return -1;
        }
      }
    }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

inline std::vector<Perm> dihedral_gens(int p) {  // D_2p on p points
  Perm rot(p), refl(p);
  for (int i = 0; i < p; ++i) rot[i] = (i + 1) % p;
  for (int i = 0; i < p; ++i) refl[i] = (p - i) % p;
  return {rot, refl};
}

// ---- SL(2,q) matrix closures ----

inline long sl2_order(int q) {
  using M = std::array<int, 4>;
  auto mul = [&](const M& a, const M& b) {
    M c{};
    c[0] = (a[0] * b[0] + a[1] * b[2]) % q;
    c[1] = (a[0] * b[1] + a[1] * b[3]) % q;
    c[2] = (a[2] * b[0] + a[3] * b[2]) % q;
    c[3] = (a[2] * b[1] + a[3] * b[3]) % q;
    return c;
  };
  M s{0, 1, q - 1, 0};   // [[0,1],[-1,0]]
  M t{1, 1, 0, 1};       // [[1,1],[0,1]]
  std::set<M> seen;
  std::vector<M> frontier{M{1, 0, 0, 1}};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<M> next;
    for (const M& m : frontier) {
      for (const M& g : {s, t}) {
        M c = mul(m, g);
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

// ---- polynomial oracles ----

// (t^(pq) - 1)(t - 1) / ((t^p - 1)(t^q - 1)) by exact division
inline rimforge::LaurentPoly torus_alexander(long p, long q) {
  using rimforge::LaurentPoly;
  auto cyc = [](long n) {
    LaurentPoly f = LaurentPoly::monomial(1, n) - LaurentPoly(Int(1));
    return f;
  };
  LaurentPoly num = cyc(p * q) * cyc(1);
  LaurentPoly den = cyc(p) * cyc(q);
  return num.divided_exact(den);
}

// |Res(f, 1 + t + ... + t^(d-1))| via the Sylvester matrix determinant,
// with a cofactor-expansion determinant (independent of Bareiss)
inline Int sylvester_resultant_magnitude(const rimforge::LaurentPoly& f, int d) {
  rimforge::LaurentPoly g = f.shifted(-f.low());
  long m = g.high();
  long n = d - 1;
  if (m == 0) {
    Int c = g.coeff(0);
    Int r = 1;
    for (long i = 0; i < n; ++i) r *= c;
    return r < 0 ? Int(-r) : r;
  }
  long size = m + n;
  std::vector<std::vector<Int>> s(size, std::vector<Int>(size, 0));
  for (long r = 0; r < n; ++r)
    for (long k = 0; k <= m; ++k) s[r][r + (m - k)] = g.coeff(k);
  for (long r = 0; r < m; ++r)
    for (long k = 0; k <= n; ++k) s[n + r][r + (n - k)] = 1;  // cyclotomic-sum coeffs
  // Gaussian elimination over exact rationals
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
  for (long i = 0; i < size; ++i)
    for (long j = 0; j < size; ++j) a[i][j] = Rational(s[i][j]);
  Rational det = 1;
  for (long k = 0; k < size; ++k) {
    long piv = k;
    while (piv < size && a[piv][k] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (long i = k + 1; i < size; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (long j = k; j < size; ++j) a[i][j] -= f * a[k][j];
    }
  }
  Int num = boost::multiprecision::numerator(det);
  Int den = boost::multiprecision::denominator(det);
  if (den != 1 && den != -1) throw rimforge::error("oracle: non-integer resultant");
  Int r = num / den;
  return r < 0 ? Int(-r) : r;
}

}  // namespace oracles
