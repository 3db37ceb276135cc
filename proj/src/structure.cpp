#include "sumset/structure.hpp"

#include <algorithm>
#include <cassert>

namespace sumset {

namespace {

struct Run {
  Int lo;
  Int hi;
};

// Maximal run of consecutive members containing pos.
Run run_around(const Bitmap &bits, Int pos) {
  Int lo = pos, hi = pos;
  while (lo > 0 && bits.test(static_cast<std::size_t>(lo - 1)))
    --lo;
  while (hi + 1 < static_cast<Int>(bits.size()) &&
         bits.test(static_cast<std::size_t>(hi + 1)))
    ++hi;
  return Run{lo, hi};
}

Run longest_run(const Bitmap &bits) {
  Run best{0, -1};
  for (std::size_t n = bits.find_first(); n != Bitmap::npos;) {
    Run cur = run_around(bits, static_cast<Int>(n));
    if (cur.hi - cur.lo > best.hi - best.lo)
      best = cur;
    std::size_t next = static_cast<std::size_t>(cur.hi) + 1;
    n = next < bits.size() ? bits.find_next(cur.hi) : Bitmap::npos;
  }
  return best;
}

SetDiff diff_sets(const Bitmap &described, const Bitmap &actual) {
  SetDiff d;
  for (std::size_t n = 0; n < described.size(); ++n) {
    if (described.test(n) && !actual.test(n))
      d.missing.push_back(static_cast<Int>(n));
    else if (!described.test(n) && actual.test(n))
      d.unexpected.push_back(static_cast<Int>(n));
  }
  return d;
}

bool matches(const Decomposition &stable, const MembershipSet &s) {
  auto described = reconstruct(stable, s.max_value());
  return described && *described == s.bits();
}

} // namespace

Decomposition decompose(const MembershipSet &s, std::optional<Int> anchor) {
  if (s.empty())
    throw EmptySetError();
  Run run{0, -1};
  if (anchor) {
    if (!s.contains(*anchor))
      throw AnchorNotMember(*anchor);
    run = run_around(s.bits(), *anchor);
  } else {
    run = longest_run(s.bits());
  }

  Decomposition dec;
  dec.max_value = s.max_value();
  dec.c = run.lo;
  dec.d = s.max_value() - run.hi;
  for (Int n = 0; n < run.lo; ++n)
    if (s.contains(n))
      dec.low_fringe.push_back(n);
  std::vector<Int> above;
  for (Int n = run.hi + 1; n <= s.max_value(); ++n)
    if (s.contains(n))
      above.push_back(s.max_value() - n);
  std::sort(above.begin(), above.end());
  dec.high_fringe = std::move(above);
  return dec;
}

std::optional<Bitmap> reconstruct(const Decomposition &dec, Int m) {
  if (dec.c < 0 || dec.d < 0)
    return std::nullopt;
  Bitmap bits(static_cast<std::size_t>(m) + 1);
  for (Int n = dec.c; n <= m - dec.d; ++n)
    bits.set(static_cast<std::size_t>(n));
  for (Int x : dec.low_fringe) {
    if (x > m)
      return std::nullopt;
    bits.set(static_cast<std::size_t>(x));
  }
  for (Int x : dec.high_fringe) {
    if (x > m)
      return std::nullopt;
    bits.set(static_cast<std::size_t>(m - x));
  }
  return bits;
}

Int default_horizon(const GeneratorSet &a) {
  return checked_add(checked_mul(2, a.max()), 2);
}

VerificationReport verify_stabilization(const GeneratorSet &a, Int t,
                                        Int horizon, const Budget &budget) {
  a.require_k2();
  if (horizon < 1)
    throw InputError("horizon must be >= 1");

  VerificationReport report;
  report.thresholds = thresholds(a, t);
  const Int h0 = report.thresholds.h_stable;
  const Int cp = report.thresholds.c_prime;
  report.h_lo = h0;
  report.h_hi = checked_add(h0, horizon);

  const MembershipSet base = membership_set(a, h0, t, budget);
  report.stable = decompose(base, cp - 1);

  report.anchor_interval_ok = true;
  for (Int n = cp - a.max() + 1; n <= cp - 1; ++n)
    if (!base.contains(n))
      report.anchor_interval_ok = false;
  report.anchor_constant_ok =
      membership_set(a, h0 + 1, t, budget).contains(cp);

  for (Int h = h0; h <= report.h_hi; ++h) {
    const MembershipSet s = h == h0 ? base : membership_set(a, h, t, budget);
    auto described = reconstruct(report.stable, s.max_value());
    if (!described || *described != s.bits()) {
      report.first_failure = h;
      if (described)
        report.diff = diff_sets(*described, s.bits());
      break;
    }
  }
  return report;
}

Int empirical_threshold(const GeneratorSet &a, Int t, Int horizon,
                        const Budget &budget) {
  a.require_k2();
  if (horizon < 1)
    throw InputError("horizon must be >= 1");
  const ThresholdReport thr = thresholds(a, t);
  const Int h0 = thr.h_stable;
  const Decomposition stable =
      decompose(membership_set(a, h0, t, budget), thr.c_prime - 1);

  for (Int h = h0; h <= checked_add(h0, horizon); ++h)
    if (!matches(stable, membership_set(a, h, t, budget)))
      return h0; // cannot be established even at h_stable

  // Scan downward while the same quadruple still describes the set with a
  // nonempty central interval.
  Int h = h0;
  while (h > 0) {
    const MembershipSet s = membership_set(a, h - 1, t, budget);
    if (stable.c > s.max_value() - stable.d || !matches(stable, s))
      break;
    --h;
  }
  return h;
}

OptimalityReport verify_optimality(Int n, Int t, const Budget &budget) {
  if (n < 3)
    throw NTooSmall();
  if (t < 1)
    throw InputError("t must be >= 1");

  const GeneratorSet a = GeneratorSet::canonical({0, n, n + 1});
  OptimalityReport report;
  report.n = n;
  report.t = t;

  const VerificationReport ver =
      verify_stabilization(a, t, default_horizon(a), budget);
  report.structure_ok = ver.pass();
  report.h_stable = ver.thresholds.h_stable;
  report.c = ver.stable.c;
  report.h_matches = report.h_stable == checked_sub(checked_mul(t, n + 1), 2);
  const Int tnn1 = checked_mul(checked_mul(t, n), n + 1);
  report.c_matches = report.c == tnn1 - 2 * n;

  report.below_bound = tnn1 - 2 * (n + 1);
  const MembershipSet below = membership_set(a, report.h_stable - 1, t, budget);
  if (!below.empty())
    report.below_max = below.max();
  report.below_bounded =
      (!report.below_max || *report.below_max <= report.below_bound) &&
      report.below_bound < report.c;
  return report;
}

std::vector<std::vector<Int>> anchor_window_witnesses(const GeneratorSet &a,
                                                      Int t, Int n) {
  a.require_k2();
  if (t < 1)
    throw InputError("t must be >= 1");
  const Int cp = anchor_constant(a, t);
  if (n <= cp - a.max() || n >= cp)
    throw OutOfWindow(n, cp - a.max(), cp);
  const Int h0 = thresholds(a, t).h_stable;
  const std::size_t k = a.k();

  // One integer solution of sum x_i * a_i = n via a left-to-right gcd fold.
  std::vector<Int> coeff(k + 1, 0);
  coeff[1] = 1;
  Int g = a.at(1);
  for (std::size_t i = 2; i <= k; ++i) {
    const Bezout b = ext_gcd(g, a.at(i));
    for (std::size_t j = 1; j < i; ++j)
      coeff[j] = checked_mul(coeff[j], b.x);
    coeff[i] = b.y;
    g = b.g;
  }
  assert(g == 1);
  std::vector<Int> start(k + 1, 0);
  for (std::size_t i = 1; i <= k; ++i)
    start[i] = checked_mul(coeff[i], n);

  std::vector<std::vector<Int>> witnesses;
  witnesses.reserve(static_cast<std::size_t>(t));
  for (Int s = 1; s <= t; ++s) {
    std::vector<Int> x = start;
    // Reduce x_i into [(s-1)*a_{i+1}, s*a_{i+1} - 1]; the quotient moves to
    // x_{i+1} scaled by a_i, preserving the represented value.
    for (std::size_t i = 1; i < k; ++i) {
      const Int window_lo = checked_mul(s - 1, a.at(i + 1));
      Int q = (x[i] - window_lo) / a.at(i + 1);
      if (x[i] - checked_mul(q, a.at(i + 1)) < window_lo)
        --q; // floor division for negative residuals
      x[i] = checked_sub(x[i], checked_mul(q, a.at(i + 1)));
      x[i + 1] = checked_add(x[i + 1], checked_mul(q, a.at(i)));
    }

    Int value = 0, weight = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (x[i] < 0)
        throw std::logic_error("witness coordinate went negative");
      value = checked_add(value, checked_mul(x[i], a.at(i)));
      weight = checked_add(weight, x[i]);
    }
    if (value != n || weight > h0)
      throw std::logic_error("witness failed value or weight bound");
    witnesses.push_back(std::vector<Int>(x.begin() + 1, x.end()));
  }

  for (std::size_t i = 0; i < witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < witnesses.size(); ++j)
      if (witnesses[i] == witnesses[j])
        throw std::logic_error("witnesses not distinct");
  return witnesses;
}

std::vector<std::vector<Int>> anchor_constant_witnesses(const GeneratorSet &a,
                                                        Int t) {
  a.require_k2();
  if (t < 1)
    throw InputError("t must be >= 1");
  const Int cp = anchor_constant(a, t);
  const Int h0 = thresholds(a, t).h_stable;
  const std::size_t k = a.k();

  std::vector<std::vector<Int>> witnesses;
  witnesses.reserve(static_cast<std::size_t>(t));
  for (Int r = 0; r <= t - 1; ++r) {
    std::vector<Int> p(k);
    p[0] = checked_sub(checked_mul(t - r, a.at(2)), 1);
    for (std::size_t i = 2; i + 1 <= k; ++i)
      p[i - 1] = checked_add(
          checked_sub(checked_mul(t - r, a.at(i + 1)), 1),
          checked_mul(r, a.at(i - 1)));
    p[k - 1] = checked_mul(r, a.at(k - 1));

    Int value = 0, weight = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (p[i] < 0)
        throw std::logic_error("witness coordinate went negative");
      value = checked_add(value, checked_mul(p[i], a.at(i + 1)));
      weight = checked_add(weight, p[i]);
    }
    const Int expected_weight = h0 + 1 - r * (a.max() - a.at(1));
    if (value != cp || weight != expected_weight || weight > h0 + 1)
      throw std::logic_error("witness failed value or weight identity");
    witnesses.push_back(std::move(p));
  }

  for (std::size_t i = 0; i < witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < witnesses.size(); ++j)
      if (witnesses[i] == witnesses[j])
        throw std::logic_error("witnesses not distinct");
  return witnesses;
}

} // namespace sumset
