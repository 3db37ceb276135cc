// Solution counting for a1*x + a2*y = n over nonnegative integers, and the
// t-Frobenius number of a coprime pair.
#pragma once

#include "sumset/core.hpp"

namespace sumset {

class CoprimePair {
public:
  // Requires 0 < a1 < a2 with gcd(a1, a2) = 1; throws NotCoprime / InputError.
  CoprimePair(Int a1, Int a2);

  Int a1() const { return a1_; }
  Int a2() const { return a2_; }

private:
  Int a1_;
  Int a2_;
};

// Exact number of (x, y) >= 0 with a1*x + a2*y = n; 0 for n < 0.
// Constant arithmetic steps from one Bezout solution.
Int count_solutions(const CoprimePair &pair, Int n);

// Largest n with fewer than t solutions, found by upward scan. The scan
// stops once a1*a2 consecutive values all reach count >= t, which is
// permanent because count(n + a1*a2) = count(n) + 1. Returns -1 when every
// n >= 0 already has t solutions (a1 = 1, t = 1).
Int t_frobenius(const CoprimePair &pair, Int t);

// t*a1*a2 - a1 - a2, used as a cross-check property for the search.
Int t_frobenius_closed_form(const CoprimePair &pair, Int t);

} // namespace sumset
