// Representation-count tables r_{A,h}(n) and the derived membership sets
// (hA)^(t), computed by dynamic programming over (weight, value).
#pragma once

#include "sumset/core.hpp"

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace sumset {

using BigInt = boost::multiprecision::cpp_int;
using Bitmap = boost::dynamic_bitset<>;

// Saturated representation counts for n in [0, h*a_k].
// count(n) = min(cap, #{x >= 0 : sum x_i*a_i = n, sum x_i <= h}).
class RepTable {
public:
  RepTable(Int h, Int cap, Int max_value, std::vector<Int> counts)
      : h_(h), cap_(cap), max_value_(max_value), counts_(std::move(counts)) {}

  Int h() const { return h_; }
  Int cap() const { return cap_; }
  Int max_value() const { return max_value_; } // h * a_k

  // 0 outside [0, max_value]; no range guard needed by callers.
  Int count(Int n) const {
    if (n < 0 || n > max_value_)
      return 0;
    return counts_[static_cast<std::size_t>(n)];
  }

private:
  Int h_;
  Int cap_;
  Int max_value_;
  std::vector<Int> counts_;
};

// The set (hA)^(t) = {n : r_{A,h}(n) >= t} as a bitmap over [0, h*a_k].
class MembershipSet {
public:
  MembershipSet(Int h, Int t, Int max_value, Bitmap bits)
      : h_(h), t_(t), max_value_(max_value), bits_(std::move(bits)) {}

  Int h() const { return h_; }
  Int t() const { return t_; }
  Int max_value() const { return max_value_; }

  bool contains(Int n) const {
    return n >= 0 && n <= max_value_ && bits_.test(static_cast<std::size_t>(n));
  }
  bool empty() const { return bits_.none(); }
  std::size_t size() const { return bits_.count(); }

  // Largest member; EmptySetError on an empty set.
  Int max() const;

  std::vector<Int> to_vector() const;
  const Bitmap &bits() const { return bits_; }

private:
  Int h_;
  Int t_;
  Int max_value_;
  Bitmap bits_;
};

RepTable rep_count_table(const GeneratorSet &a, Int h, Int cap,
                         const Budget &budget = {});

// Exact r_{A,h}(n) with arbitrary-precision accumulation, no saturation.
BigInt exact_rep_count(const GeneratorSet &a, Int h, Int n,
                       const Budget &budget = {});

MembershipSet membership_set(const GeneratorSet &a, Int h, Int t,
                             const Budget &budget = {});

} // namespace sumset
