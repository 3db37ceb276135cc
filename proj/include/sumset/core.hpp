// Domain types for finite generator sets and the closed-form threshold
// arithmetic attached to them.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumset {

using Int = std::int64_t;

// Error families map onto CLI exit codes: InputError -> 2, BudgetError -> 3.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
  using Error::Error;
};

class BudgetError : public Error {
public:
  using Error::Error;
};

class FewerThanTwoDistinct final : public InputError {
public:
  FewerThanTwoDistinct() : InputError("need at least 2 distinct integers") {}
};

class KTooSmall final : public InputError {
public:
  KTooSmall() : InputError("operation requires k >= 2 nonzero generators") {}
};

class NTooSmall final : public InputError {
public:
  NTooSmall() : InputError("optimality family requires n >= 3") {}
};

class EmptySetError final : public InputError {
public:
  EmptySetError() : InputError("cannot decompose an empty set") {}
};

class AnchorNotMember final : public InputError {
public:
  explicit AnchorNotMember(Int anchor)
      : InputError("anchor " + std::to_string(anchor) + " is not a member") {}
};

class OutOfWindow final : public InputError {
public:
  OutOfWindow(Int n, Int lo, Int hi)
      : InputError("n = " + std::to_string(n) + " outside the open window (" +
                   std::to_string(lo) + ", " + std::to_string(hi) + ")") {}
};

class NotCoprime final : public InputError {
public:
  NotCoprime(Int a, Int b)
      : InputError("gcd(" + std::to_string(a) + ", " + std::to_string(b) +
                   ") != 1") {}
};

class OverflowBudgetExceeded final : public BudgetError {
public:
  using BudgetError::BudgetError;
};

class BudgetExceeded final : public BudgetError {
public:
  using BudgetError::BudgetError;
};

// Checked i64 arithmetic; throws OverflowBudgetExceeded instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// Resource limits for table construction.
struct Budget {
  // Upper bound on h * a_k, the index range of one table.
  Int max_table_cells = Int{1} << 24;
  // Upper bound on transient DP cells (weight layers x values).
  Int max_working_cells = Int{1} << 27;
};

// A normalized generator set {0 = a_0 < a_1 < ... < a_k}, gcd(a_1..a_k) = 1.
class GeneratorSet {
public:
  // Validates canonical form; use normalize() for arbitrary raw input.
  static GeneratorSet canonical(std::vector<Int> elements);

  std::span<const Int> elements() const { return elems_; }
  Int at(std::size_t i) const { return elems_[i]; } // a_i
  std::size_t k() const { return elems_.size() - 1; }
  Int max() const { return elems_.back(); } // a_k

  // Threshold-level operations need k >= 2; throws KTooSmall otherwise.
  void require_k2() const;

  bool operator==(const GeneratorSet &) const = default;

private:
  explicit GeneratorSet(std::vector<Int> e) : elems_(std::move(e)) {}
  std::vector<Int> elems_;
};

// Affine change of coordinates between raw input and canonical form.
// For an h-fold sum: raw value = scale * normalized value + h * offset.
struct AffineMap {
  Int scale = 1;
  Int offset_per_summand = 0;

  Int to_raw(Int normalized, Int h) const;
  bool identity() const { return scale == 1 && offset_per_summand == 0; }
  bool operator==(const AffineMap &) const = default;
};

struct Normalized {
  GeneratorSet set;
  AffineMap map;
};

// Canonicalize arbitrary raw input: dedup, subtract the minimum, divide by
// the gcd of the nonzero residuals. Throws FewerThanTwoDistinct.
Normalized normalize(std::span<const Int> raw);
Normalized normalize(std::initializer_list<Int> raw);

// Closed-form stabilization thresholds for a generator set at multiplicity t.
struct ThresholdReport {
  Int h_stable = 0;    // sum_{i=2..k} (t*a_i - 1) - 1
  Int h_nathanson = 0; // (k-1)(t*a_k - 1)*a_k + 1
  std::optional<Int> h_wcc; // sum_{i=2..k} a_i - k, defined for t = 1 only
  Int c_prime = 0;          // sum_{i=1..k-1} a_i(t*a_{i+1} - 1)
  std::optional<Int> h_empirical; // filled by callers that measure it
};

ThresholdReport thresholds(const GeneratorSet &a, Int t);

// The anchor constant c' whose neighborhood pins the central interval.
Int anchor_constant(const GeneratorSet &a, Int t);

// g = gcd(a, b) >= 0 with g = a*x + b*y.
struct Bezout {
  Int g;
  Int x;
  Int y;
};
Bezout ext_gcd(Int a, Int b);

} // namespace sumset
