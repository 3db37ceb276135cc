// Brute-force ground truth for representation counting. Deliberately shares
// no code with the DP engine.
#pragma once

#include "sumset/core.hpp"
#include "sumset/repcount.hpp"

namespace sumset {
namespace oracle {

// One multiplicity vector (x_1 .. x_k) for a generator set.
struct RepresentationTuple {
  std::vector<Int> multiplicities;
  Int weight = 0; // sum x_i
  Int value = 0;  // sum x_i * a_i

  bool operator==(const RepresentationTuple &) const = default;
};

struct OracleBudget {
  std::size_t max_k = 5;
  Int max_weight = 12;
  Int max_values = Int{1} << 16; // h * a_k + 1 walked by membership
};

// Every tuple with the given value and weight <= weight_bound, in
// lexicographic order of (x_1, ..., x_k). Exact and complete.
std::vector<RepresentationTuple>
enumerate_representations(const GeneratorSet &a, Int weight_bound, Int n,
                          const OracleBudget &budget = {});

// Membership by counting enumerations for each n in [0, h*a_k].
MembershipSet brute_force_membership(const GeneratorSet &a, Int h, Int t,
                                     const OracleBudget &budget = {});

} // namespace oracle
} // namespace sumset
