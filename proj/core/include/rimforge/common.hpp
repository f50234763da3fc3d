#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace rimforge {

/// Exact arbitrary-precision integer used throughout (orders, coefficients,
/// Smith normal forms, resultants).
using Int = boost::multiprecision::cpp_int;

/// Library error type. Parse errors carry a byte offset in the message.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Work budgets for the semi-decision procedures. Exhausting a budget yields
/// an INDETERMINATE result, never a wrong answer.
struct Budget {
  int max_cosets = 100000;        // coset enumeration table cap
  int tietze_moves = 20000;       // simplification move cap
  long witness_search_ops = 2000000;  // commutator-witness search op cap
  int witness_max_commutators = 4;
  long witness_group_cap = 10000;  // only search groups certified up to this order
};

}  // namespace rimforge
