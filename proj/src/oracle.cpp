#include "sumset/oracle.hpp"

namespace sumset {
namespace oracle {

namespace {

void check_budget(const GeneratorSet &a, Int weight_bound,
                  const OracleBudget &budget) {
  if (weight_bound < 0)
    throw InputError("weight bound must be >= 0");
  if (a.k() > budget.max_k)
    throw BudgetExceeded("oracle budget: k = " + std::to_string(a.k()) +
                         " exceeds " + std::to_string(budget.max_k));
  if (weight_bound > budget.max_weight)
    throw BudgetExceeded("oracle budget: weight bound " +
                         std::to_string(weight_bound) + " exceeds " +
                         std::to_string(budget.max_weight));
}

void walk(const GeneratorSet &a, std::size_t i, Int weight_left, Int value_left,
          std::vector<Int> &prefix, std::vector<RepresentationTuple> &out) {
  if (i > a.k()) {
    if (value_left == 0) {
      RepresentationTuple tup;
      tup.multiplicities = prefix;
      for (std::size_t j = 0; j < prefix.size(); ++j) {
        tup.weight += prefix[j];
        tup.value += prefix[j] * a.at(j + 1);
      }
      out.push_back(std::move(tup));
    }
    return;
  }
  const Int ai = a.at(i);
  for (Int x = 0; x <= weight_left && x * ai <= value_left; ++x) {
    prefix.push_back(x);
    walk(a, i + 1, weight_left - x, value_left - x * ai, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<RepresentationTuple>
enumerate_representations(const GeneratorSet &a, Int weight_bound, Int n,
                          const OracleBudget &budget) {
  check_budget(a, weight_bound, budget);
  std::vector<RepresentationTuple> out;
  if (n < 0)
    return out;
  std::vector<Int> prefix;
  walk(a, 1, weight_bound, n, prefix, out);
  return out;
}

MembershipSet brute_force_membership(const GeneratorSet &a, Int h, Int t,
                                     const OracleBudget &budget) {
  check_budget(a, h, budget);
  if (t < 1)
    throw InputError("t must be >= 1");
  const Int m = checked_mul(h, a.max());
  if (m + 1 > budget.max_values)
    throw BudgetExceeded("oracle budget: value range exceeds " +
                         std::to_string(budget.max_values));

  Bitmap bits(static_cast<std::size_t>(m) + 1);
  for (Int n = 0; n <= m; ++n) {
    const auto reps = enumerate_representations(a, h, n, budget);
    if (static_cast<Int>(reps.size()) >= t)
      bits.set(static_cast<std::size_t>(n));
  }
  return MembershipSet(h, t, m, std::move(bits));
}

} // namespace oracle
} // namespace sumset
