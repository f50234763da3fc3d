#pragma once

#include <map>
#include <string>
#include <vector>

#include "rimforge/common.hpp"

namespace rimforge {

/// Exact integer Laurent polynomial in one variable t. No zero coefficients
/// are stored; the empty map is 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Int constant);
  /// c * t^e
  static LaurentPoly monomial(Int c, long e);

  const std::map<long, Int>& terms() const { return c_; }
  bool zero() const { return c_.empty(); }
  long low() const;   // smallest exponent; requires nonzero
  long high() const;  // largest exponent; requires nonzero
  Int coeff(long e) const;
  std::size_t term_count() const { return c_.size(); }

  /// Single term c*t^e with c = +-1?
  bool is_unit_monomial() const;
  bool is_monomial() const { return c_.size() == 1; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly&) const;
  LaurentPoly operator-(const LaurentPoly&) const;
  LaurentPoly operator*(const LaurentPoly&) const;
  LaurentPoly shifted(long e) const;  // * t^e
  /// t -> t^-1
  LaurentPoly reversed() const;
  LaurentPoly pow(long k) const;

  /// Exact division; throws if the division is not exact.
  LaurentPoly divided_exact(const LaurentPoly& divisor) const;

  Int evaluate(const Int& x) const;  // t = x (integer point); requires low() >= 0 or x = +-1
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Ascending exponents, e.g. "1 - t + t^2", "2*t^-1 + 3".
  std::string to_string() const;

 private:
  std::map<long, Int> c_;
  void add_term(long e, const Int& v);
};

/// A knot-polynomial normal form: exponents shifted so the lowest is 0 and
/// the sign chosen so the leading coefficient is positive. Unique under
/// multiplication by +-t^k.
struct AlexNormalForm {
  LaurentPoly poly;
  bool palindromic = false;

  static AlexNormalForm normalize(const LaurentPoly& p);
  /// Multiset of nonzero coefficients, sorted.
  std::vector<Int> coefficient_multiset() const;
  friend bool operator==(const AlexNormalForm&, const AlexNormalForm&) = default;
};

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
Int integer_determinant(std::vector<std::vector<Int>> m);

/// Determinant of a matrix over Z[t, t^-1]: unit-monomial pivots are
/// eliminated Laplace-style first, the dense remainder goes through
/// fraction-free Bareiss.
LaurentPoly laurent_determinant(std::vector<std::vector<LaurentPoly>> m);

/// |Res(f, 1 + t + ... + t^(d-1))| computed exactly as the determinant of
/// multiplication by f on Z[t]/(1 + t + ... + t^(d-1)).
Int cyclotomic_resultant_magnitude(const LaurentPoly& f, int d);

}  // namespace rimforge
