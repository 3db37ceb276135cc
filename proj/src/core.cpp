#include "sumset/core.hpp"

#include <algorithm>
#include <numeric>

namespace sumset {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowBudgetExceeded("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowBudgetExceeded("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowBudgetExceeded("integer overflow in multiplication");
  return r;
}

GeneratorSet GeneratorSet::canonical(std::vector<Int> elements) {
  if (elements.size() < 2)
    throw InputError("canonical set needs k >= 1 nonzero generators");
  if (elements.front() != 0)
    throw InputError("canonical set must start at 0");
  Int g = 0;
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i] <= elements[i - 1])
      throw InputError("canonical set must be strictly increasing");
    g = std::gcd(g, elements[i]);
  }
  if (g != 1)
    throw InputError("canonical set must have gcd 1");
  return GeneratorSet(std::move(elements));
}

void GeneratorSet::require_k2() const {
  if (k() < 2)
    throw KTooSmall();
}

Int AffineMap::to_raw(Int normalized, Int h) const {
  return checked_add(checked_mul(scale, normalized),
                     checked_mul(h, offset_per_summand));
}

Normalized normalize(std::span<const Int> raw) {
  std::vector<Int> v(raw.begin(), raw.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() < 2)
    throw FewerThanTwoDistinct();

  const Int offset = v.front();
  Int g = 0;
  for (Int &e : v) {
    e = checked_sub(e, offset);
    g = std::gcd(g, e);
  }
  for (Int &e : v)
    e /= g;
  return Normalized{GeneratorSet::canonical(std::move(v)),
                    AffineMap{g, offset}};
}

Normalized normalize(std::initializer_list<Int> raw) {
  return normalize(std::span<const Int>(raw.begin(), raw.size()));
}

ThresholdReport thresholds(const GeneratorSet &a, Int t) {
  a.require_k2();
  if (t < 1)
    throw InputError("t must be >= 1");
  const Int k = static_cast<Int>(a.k());

  ThresholdReport r;
  Int sum = 0;
  for (std::size_t i = 2; i <= a.k(); ++i)
    sum = checked_add(sum, checked_sub(checked_mul(t, a.at(i)), 1));
  r.h_stable = checked_sub(sum, 1);

  r.h_nathanson = checked_add(
      checked_mul(checked_mul(k - 1, checked_sub(checked_mul(t, a.max()), 1)),
                  a.max()),
      1);

  if (t == 1) {
    Int s = 0;
    for (std::size_t i = 2; i <= a.k(); ++i)
      s = checked_add(s, a.at(i));
    r.h_wcc = checked_sub(s, k);
  }

  r.c_prime = anchor_constant(a, t);
  return r;
}

Int anchor_constant(const GeneratorSet &a, Int t) {
  a.require_k2();
  if (t < 1)
    throw InputError("t must be >= 1");
  Int c = 0;
  for (std::size_t i = 1; i < a.k(); ++i)
    c = checked_add(
        c, checked_mul(a.at(i), checked_sub(checked_mul(t, a.at(i + 1)), 1)));
  return c;
}

Bezout ext_gcd(Int a, Int b) {
  // Iterative extended Euclid; coefficients stay below max(|a|, |b|).
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
    tmp = old_y - q * y;
    old_y = y;
    y = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return Bezout{old_r, old_x, old_y};
}

} // namespace sumset
