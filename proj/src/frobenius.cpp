#include "sumset/frobenius.hpp"

#include <numeric>

namespace sumset {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

} // namespace

CoprimePair::CoprimePair(Int a1, Int a2) : a1_(a1), a2_(a2) {
  if (a1 < 1 || a2 < 1)
    throw InputError("pair elements must be positive");
  if (a1 >= a2)
    throw InputError("pair must satisfy a1 < a2");
  if (std::gcd(a1, a2) != 1)
    throw NotCoprime(a1, a2);
}

Int count_solutions(const CoprimePair &pair, Int n) {
  if (n < 0)
    return 0;
  const Int a1 = pair.a1(), a2 = pair.a2();

  // a1 * u = 1 (mod a2), so x0 = u*n mod a2 gives a solution with 0 <= x0 < a2.
  const Bezout b = ext_gcd(a1, a2);
  Int x0 = checked_mul(b.x % a2, n % a2) % a2;
  if (x0 < 0)
    x0 += a2;
  const Int y0 = (n - checked_mul(a1, x0)) / a2;

  // Integer k with x0 + k*a2 >= 0 and y0 - k*a1 >= 0.
  const Int k_min = floor_div(-1 - x0, a2) + 1;
  const Int k_max = ceil_div(y0 + 1, a1) - 1;
  return k_max < k_min ? 0 : k_max - k_min + 1;
}

Int t_frobenius(const CoprimePair &pair, Int t) {
  if (t < 1)
    throw InputError("t must be >= 1");
  const Int period = checked_mul(pair.a1(), pair.a2());

  Int last_deficient = -1;
  Int consecutive_good = 0;
  for (Int n = 0; consecutive_good < period; ++n) {
    if (count_solutions(pair, n) < t) {
      last_deficient = n;
      consecutive_good = 0;
    } else {
      ++consecutive_good;
    }
  }
  return last_deficient;
}

Int t_frobenius_closed_form(const CoprimePair &pair, Int t) {
  if (t < 1)
    throw InputError("t must be >= 1");
  return checked_sub(
      checked_sub(checked_mul(t, checked_mul(pair.a1(), pair.a2())),
                  pair.a1()),
      pair.a2());
}

} // namespace sumset
