#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumset/oracle.hpp"
#include "sumset/repcount.hpp"

#include <numeric>
#include <random>

using namespace sumset;

namespace {

std::vector<GeneratorSet> small_canonical_sets(Int max_k, Int max_elem) {
  std::vector<GeneratorSet> sets;
  std::vector<Int> pick;
  auto rec = [&](auto &&self, Int next, Int depth) -> void {
    if (depth >= 1) {
      Int g = 0;
      for (Int e : pick)
        g = std::gcd(g, e);
      if (g == 1) {
        std::vector<Int> elems{0};
        elems.insert(elems.end(), pick.begin(), pick.end());
        sets.push_back(GeneratorSet::canonical(std::move(elems)));
      }
    }
    if (depth == max_k)
      return;
    for (Int e = next; e <= max_elem; ++e) {
      pick.push_back(e);
      self(self, e + 1, depth + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1, 0);
  return sets;
}

} // namespace

TEST_CASE("single nonzero generator gives unit counts") {
  const GeneratorSet a = GeneratorSet::canonical({0, 1});
  const RepTable table = rep_count_table(a, 5, 10);
  CHECK(table.max_value() == 5);
  for (Int n = 0; n <= 5; ++n)
    CHECK(table.count(n) == 1);
}

TEST_CASE("counts for {0,2,3} at h = 4") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3});
  const RepTable table = rep_count_table(a, 4, 10);
  CHECK(table.count(6) == 2);
  CHECK(table.count(8) == 2);
  CHECK(table.count(9) == 2);
  CHECK(table.count(5) == 1);
  CHECK(table.count(1) == 0);
  CHECK(table.count(0) == 1);

  // Out-of-range values report 0, not an error.
  CHECK(table.count(-1) == 0);
  CHECK(table.count(13) == 0);
}

TEST_CASE("counts saturate at the cap") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3});
  const RepTable table = rep_count_table(a, 4, 1);
  CHECK(table.count(6) == 1);
  CHECK(table.count(1) == 0);
}

TEST_CASE("exact counts on the worked examples") {
  CHECK(exact_rep_count(GeneratorSet::canonical({0, 1}), 7, 3) == 1);
  CHECK(exact_rep_count(GeneratorSet::canonical({0, 2, 3}), 4, 6) == 2);
  CHECK(exact_rep_count(GeneratorSet::canonical({0, 1, 2}), 2, 2) == 2);
  CHECK(exact_rep_count(GeneratorSet::canonical({0, 1, 2}), 2, 100) == 0);
}

TEST_CASE("exact counts continue past the saturation cap") {
  const GeneratorSet a = GeneratorSet::canonical({0, 1, 2});
  // Partitions of n into parts {1, 2}: floor(n/2) + 1 once h >= n.
  CHECK(exact_rep_count(a, 300, 300) == 151);
  CHECK(exact_rep_count(a, 300, 299) == 150);
  const RepTable table = rep_count_table(a, 300, 7);
  CHECK(table.count(300) == 7);

  const GeneratorSet b = GeneratorSet::canonical({0, 1, 2, 3});
  const auto reps = oracle::enumerate_representations(b, 12, 18);
  CHECK(exact_rep_count(b, 12, 18) == BigInt(reps.size()));
}

TEST_CASE("membership sets match the worked examples") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3});
  CHECK(membership_set(a, 2, 1).to_vector() ==
        std::vector<Int>{0, 2, 3, 4, 5, 6});
  CHECK(membership_set(a, 4, 2).to_vector() == std::vector<Int>{6, 8, 9});
  CHECK(membership_set(a, 5, 2).to_vector() ==
        std::vector<Int>{6, 8, 9, 10, 11, 12});
}

TEST_CASE("zero belongs to the membership set exactly when t = 1") {
  const GeneratorSet a = GeneratorSet::canonical({0, 3, 5});
  for (Int h = 0; h <= 6; ++h) {
    CHECK(membership_set(a, h, 1).contains(0));
    CHECK(!membership_set(a, h, 2).contains(0));
  }
}

TEST_CASE("membership equals brute force on an exhaustive small budget") {
  for (const GeneratorSet &a : small_canonical_sets(3, 7)) {
    for (Int h = 0; h <= 5; ++h)
      for (Int t = 1; t <= 3; ++t)
        CHECK(membership_set(a, h, t).bits() ==
              oracle::brute_force_membership(a, h, t).bits());
  }
}

TEST_CASE("saturated counts equal clamped exact counts") {
  std::mt19937 rng(53);
  const auto sets = small_canonical_sets(3, 9);
  std::uniform_int_distribution<std::size_t> sd(0, sets.size() - 1);
  std::uniform_int_distribution<Int> hd(0, 7), capd(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const GeneratorSet &a = sets[sd(rng)];
    const Int h = hd(rng), cap = capd(rng);
    const RepTable table = rep_count_table(a, h, cap);
    for (Int n = 0; n <= table.max_value(); ++n) {
      const BigInt exact = exact_rep_count(a, h, n);
      const BigInt clamped = exact < cap ? exact : BigInt(cap);
      CHECK(BigInt(table.count(n)) == clamped);
    }
  }
}

TEST_CASE("adding one summand only grows counts") {
  std::mt19937 rng(59);
  const auto sets = small_canonical_sets(3, 9);
  std::uniform_int_distribution<std::size_t> sd(0, sets.size() - 1);
  std::uniform_int_distribution<Int> hd(0, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const GeneratorSet &a = sets[sd(rng)];
    const Int h = hd(rng);
    const RepTable lo = rep_count_table(a, h, 1000000);
    const RepTable hi = rep_count_table(a, h + 1, 1000000);
    for (Int n = 0; n <= lo.max_value(); ++n)
      CHECK(lo.count(n) <= hi.count(n));
  }
}

TEST_CASE("sumset translation containment and t-nesting") {
  std::mt19937 rng(61);
  const auto sets = small_canonical_sets(3, 8);
  std::uniform_int_distribution<std::size_t> sd(0, sets.size() - 1);
  std::uniform_int_distribution<Int> hd(0, 5), td(1, 3);
  for (int trial = 0; trial < 80; ++trial) {
    const GeneratorSet &a = sets[sd(rng)];
    const Int h = hd(rng), t = td(rng);
    const MembershipSet cur = membership_set(a, h, t);
    const MembershipSet next = membership_set(a, h + 1, t);
    for (Int m : cur.to_vector())
      for (Int e : a.elements())
        CHECK(next.contains(m + e));

    const MembershipSet tighter = membership_set(a, h, t + 1);
    for (Int m : tighter.to_vector())
      CHECK(cur.contains(m));
  }
}

TEST_CASE("table budget is enforced") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3});
  Budget tiny;
  tiny.max_table_cells = 16;
  CHECK_THROWS_AS(rep_count_table(a, 10, 1, tiny), OverflowBudgetExceeded);
  CHECK_THROWS_AS(membership_set(a, 10, 1, tiny), OverflowBudgetExceeded);
  CHECK_THROWS_AS(exact_rep_count(a, 10, 5, tiny), OverflowBudgetExceeded);
  CHECK_NOTHROW(rep_count_table(a, 5, 1, tiny));
}

TEST_CASE("invalid parameters are rejected") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3});
  CHECK_THROWS_AS(rep_count_table(a, -1, 1), InputError);
  CHECK_THROWS_AS(rep_count_table(a, 3, 0), InputError);
  CHECK_THROWS_AS(membership_set(a, 3, 0), InputError);
}
