#include "rimforge/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace rimforge {

LaurentPoly::LaurentPoly(Int constant) {
  if (constant != 0) c_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(Int c, long e) {
  LaurentPoly p;
  if (c != 0) p.c_[e] = std::move(c);
  return p;
}

long LaurentPoly::low() const {
  if (zero()) throw error("zero polynomial has no degree");
  return c_.begin()->first;
}

long LaurentPoly::high() const {
  if (zero()) throw error("zero polynomial has no degree");
  return c_.rbegin()->first;
}

Int LaurentPoly::coeff(long e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Int(0) : it->second;
}

bool LaurentPoly::is_unit_monomial() const {
  if (c_.size() != 1) return false;
  const Int& v = c_.begin()->second;
  return v == 1 || v == -1;
}

void LaurentPoly::add_term(long e, const Int& v) {
  if (v == 0) return;
  auto [it, fresh] = c_.try_emplace(e, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, v] : c_) p.c_[e] = -v;
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly p = *this;
  for (const auto& [e, v] : rhs.c_) p.add_term(e, v);
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly p = *this;
  for (const auto& [e, v] : rhs.c_) p.add_term(e, -v);
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly p;
  for (const auto& [e1, v1] : c_) {
    for (const auto& [e2, v2] : rhs.c_) p.add_term(e1 + e2, v1 * v2);
  }
  return p;
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly p;
  for (const auto& [e1, v] : c_) p.c_[e1 + e] = v;
  return p;
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly p;
  for (const auto& [e, v] : c_) p.c_[-e] = v;
  return p;
}

LaurentPoly LaurentPoly::pow(long k) const {
  if (k < 0) throw error("negative polynomial power");
  LaurentPoly out(Int(1));
  for (long i = 0; i < k; ++i) out = out * *this;
  return out;
}

LaurentPoly LaurentPoly::divided_exact(const LaurentPoly& divisor) const {
  if (divisor.zero()) throw error("division by zero polynomial");
  if (zero()) return {};
  LaurentPoly rem = *this;
  LaurentPoly quot;
  long dh = divisor.high();
  const Int& lead = divisor.c_.rbegin()->second;
  long qlow_min = low() - divisor.low();
  while (!rem.zero()) {
    long qe = rem.high() - dh;
    if (qe < qlow_min) throw error("inexact polynomial division");
    Int q = rem.c_.rbegin()->second / lead;
    if (q * lead != rem.c_.rbegin()->second) throw error("inexact polynomial division");
    LaurentPoly m = monomial(q, qe);
    quot = quot + m;
    rem = rem - m * divisor;
  }
  return quot;
}

Int LaurentPoly::evaluate(const Int& x) const {
  if (zero()) return 0;
  if (x == 1) {
    Int s = 0;
    for (const auto& [e, v] : c_) s += v;
    return s;
  }
  if (x == -1) {
    Int s = 0;
    for (const auto& [e, v] : c_) s += (e % 2 == 0) ? v : -v;
    return s;
  }
  if (low() < 0) throw error("cannot evaluate negative exponents at a non-unit");
  // Horner on the dense span
  Int acc = 0;
  long prev = high();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    for (long k = prev; k > it->first; --k) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  for (long k = prev; k > 0; --k) acc *= x;
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    Int mag = v < 0 ? Int(-v) : v;
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

AlexNormalForm AlexNormalForm::normalize(const LaurentPoly& p) {
  AlexNormalForm nf;
  if (p.zero()) return nf;
  LaurentPoly q = p.shifted(-p.low());
  if (q.terms().rbegin()->second < 0) q = -q;
  // palindromic iff the coefficient vector reads the same reversed
  LaurentPoly rev = q.reversed().shifted(q.high());
  nf.palindromic = (rev == q);
  nf.poly = std::move(q);
  return nf;
}

std::vector<Int> AlexNormalForm::coefficient_multiset() const {
  std::vector<Int> cs;
  for (const auto& [e, v] : poly.terms()) cs.push_back(v);
  std::sort(cs.begin(), cs.end());
  return cs;
}

Int integer_determinant(std::vector<std::vector<Int>> m) {
  std::size_t n = m.size();
  for (auto& row : m) {
    if (row.size() != n) throw error("determinant needs a square matrix");
  }
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

LaurentPoly laurent_determinant(std::vector<std::vector<LaurentPoly>> m) {
  std::size_t n = m.size();
  for (auto& row : m) {
    if (row.size() != n) throw error("determinant needs a square matrix");
  }
  LaurentPoly unit(Int(1));
  bool negate = false;

  // phase 1: Laplace elimination on +-t^k pivots (exact, growth-free)
  while (n > 0) {
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m[i][j].is_unit_monomial()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) break;
    const LaurentPoly pivot = m[pi][pj];
    LaurentPoly pivot_inv = LaurentPoly::monomial(pivot.terms().begin()->second, -pivot.low());
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pi || m[i][pj].zero()) continue;
      LaurentPoly f = m[i][pj] * pivot_inv;
      for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i][j] - f * m[pi][j];
    }
    unit = unit * pivot;
    if ((pi + pj) % 2 == 1) negate = !negate;
    // drop row pi and column pj
    m.erase(m.begin() + pi);
    for (auto& row : m) row.erase(row.begin() + pj);
    --n;
  }

  // phase 2: fraction-free Bareiss over Z[t,t^-1]
  LaurentPoly det(Int(1));
  if (n > 0) {
    LaurentPoly prev(Int(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k].zero()) {
        std::size_t r = k + 1;
        while (r < n && m[r][k].zero()) ++r;
        if (r == n) return {};
        std::swap(m[k], m[r]);
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          LaurentPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
          m[i][j] = num.divided_exact(prev);
        }
        m[i][k] = {};
      }
      prev = m[k][k];
    }
    det = m[n - 1][n - 1];
  }
  LaurentPoly out = unit * det;
  return negate ? -out : out;
}

Int cyclotomic_resultant_magnitude(const LaurentPoly& f, int d) {
  if (d < 2) throw error("resultant modulus needs d >= 2");
  if (f.zero()) return 0;
  int n = d - 1;  // degree of 1 + t + ... + t^(d-1)
  // reduce f mod (1 + ... + t^(d-1)) into coefficients of 1..t^(n-1);
  // t^n == -(1 + t + ... + t^(n-1)), and t^-1 == t^(d-1) mod t^d - 1 ...
  // work via t^d == 1 first (valid mod the divisor), then fold t^n.
  std::vector<Int> red(n, 0);
  for (const auto& [e, v] : f.terms()) {
    long r = e % d;
    if (r < 0) r += d;
    if (r < n) {
      red[r] += v;
    } else {  // r == n: fold
      for (int i = 0; i < n; ++i) red[i] -= v;
    }
  }
  // multiplication matrix of red on basis {1, t, ..., t^(n-1)}
  std::vector<std::vector<Int>> mult(n, std::vector<Int>(n, 0));
  for (int b = 0; b < n; ++b) {
    // column b: red * t^b reduced
    std::vector<Int> col(n, 0);
    for (int i = 0; i < n; ++i) {
      if (red[i] == 0) continue;
      int e = (i + b) % d;
      if (e < n) {
        col[e] += red[i];
      } else {
        for (int k = 0; k < n; ++k) col[k] -= red[i];
      }
    }
    for (int i = 0; i < n; ++i) mult[i][b] = col[i];
  }
  Int det = integer_determinant(std::move(mult));
  return det < 0 ? Int(-det) : det;
}

}  // namespace rimforge
