#include "sumset/repcount.hpp"

#include <algorithm>

namespace sumset {

namespace {

// Index range [0, h*a_k], checked against the table budget.
Int table_range(const GeneratorSet &a, Int h, const Budget &budget) {
  if (h < 0)
    throw InputError("h must be >= 0");
  const Int m = checked_mul(h, a.max());
  if (m > budget.max_table_cells)
    throw OverflowBudgetExceeded("table range " + std::to_string(m) +
                                 " exceeds budget of " +
                                 std::to_string(budget.max_table_cells));
  return m;
}

// Weight levels that can contribute below value cap m: any tuple with value
// <= m uses at most m / a_1 nonzero summands.
Int effective_weight(const GeneratorSet &a, Int h, Int m) {
  return std::min(h, m / a.at(1));
}

void check_working(Int weights, Int values, const Budget &budget) {
  if (checked_mul(weights, values) > budget.max_working_cells)
    throw OverflowBudgetExceeded("DP working set exceeds budget");
}

Int sat_add(Int x, Int y, Int cap) {
  // x, y <= cap, so cap - y cannot underflow.
  return x >= cap - y ? cap : x + y;
}

// f[w][n] = #tuples over the items processed so far with weight exactly w and
// value n, each cell clamped at cap. Items have unbounded multiplicity.
template <typename Cell, typename Add>
std::vector<std::vector<Cell>> weight_value_table(const GeneratorSet &a, Int we,
                                                  Int m, Add add) {
  std::vector<std::vector<Cell>> f(
      static_cast<std::size_t>(we) + 1,
      std::vector<Cell>(static_cast<std::size_t>(m) + 1, Cell(0)));
  f[0][0] = Cell(1);
  for (std::size_t i = 1; i <= a.k(); ++i) {
    const Int ai = a.at(i);
    if (ai > m)
      break;
    for (Int w = 1; w <= we; ++w) {
      auto &row = f[static_cast<std::size_t>(w)];
      const auto &prev = f[static_cast<std::size_t>(w) - 1];
      for (Int n = ai; n <= m; ++n)
        add(row[static_cast<std::size_t>(n)],
            prev[static_cast<std::size_t>(n - ai)]);
    }
  }
  return f;
}

} // namespace

Int MembershipSet::max() const {
  if (bits_.none())
    throw EmptySetError();
  for (std::size_t n = bits_.size(); n-- > 0;)
    if (bits_.test(n))
      return static_cast<Int>(n);
  return 0; // unreachable
}

std::vector<Int> MembershipSet::to_vector() const {
  std::vector<Int> out;
  out.reserve(bits_.count());
  for (std::size_t n = bits_.find_first(); n != Bitmap::npos;
       n = bits_.find_next(n))
    out.push_back(static_cast<Int>(n));
  return out;
}

RepTable rep_count_table(const GeneratorSet &a, Int h, Int cap,
                         const Budget &budget) {
  if (cap < 1)
    throw InputError("cap must be >= 1");
  const Int m = table_range(a, h, budget);
  const Int we = effective_weight(a, h, m);
  check_working(we + 1, m + 1, budget);

  auto f = weight_value_table<Int>(
      a, we, m, [cap](Int &dst, Int src) { dst = sat_add(dst, src, cap); });

  std::vector<Int> counts(static_cast<std::size_t>(m) + 1, 0);
  for (Int w = 0; w <= we; ++w)
    for (Int n = 0; n <= m; ++n)
      counts[static_cast<std::size_t>(n)] =
          sat_add(counts[static_cast<std::size_t>(n)],
                  f[static_cast<std::size_t>(w)][static_cast<std::size_t>(n)],
                  cap);
  return RepTable(h, cap, m, std::move(counts));
}

BigInt exact_rep_count(const GeneratorSet &a, Int h, Int n,
                       const Budget &budget) {
  const Int m = table_range(a, h, budget);
  if (n < 0 || n > m)
    return 0;
  const Int we = effective_weight(a, h, n);
  check_working(we + 1, n + 1, budget);

  auto f = weight_value_table<BigInt>(
      a, we, n, [](BigInt &dst, const BigInt &src) { dst += src; });

  BigInt total = 0;
  for (Int w = 0; w <= we; ++w)
    total += f[static_cast<std::size_t>(w)][static_cast<std::size_t>(n)];
  return total;
}

MembershipSet membership_set(const GeneratorSet &a, Int h, Int t,
                             const Budget &budget) {
  if (t < 1)
    throw InputError("t must be >= 1");
  const RepTable table = rep_count_table(a, h, t, budget);
  Bitmap bits(static_cast<std::size_t>(table.max_value()) + 1);
  for (Int n = 0; n <= table.max_value(); ++n)
    if (table.count(n) >= t)
      bits.set(static_cast<std::size_t>(n));
  return MembershipSet(h, t, table.max_value(), std::move(bits));
}

} // namespace sumset
