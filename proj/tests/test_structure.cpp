#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumset/oracle.hpp"
#include "sumset/structure.hpp"

#include <numeric>
#include <random>

using namespace sumset;

namespace {

MembershipSet set_from(std::initializer_list<Int> members, Int max_value) {
  Bitmap bits(static_cast<std::size_t>(max_value) + 1);
  for (Int m : members)
    bits.set(static_cast<std::size_t>(m));
  return MembershipSet(0, 1, max_value, std::move(bits));
}

std::vector<GeneratorSet> sample_sets() {
  return {
      GeneratorSet::canonical({0, 2, 3}),
      GeneratorSet::canonical({0, 3, 4}),
      GeneratorSet::canonical({0, 2, 5}),
      GeneratorSet::canonical({0, 3, 7}),
      GeneratorSet::canonical({0, 4, 5}),
      GeneratorSet::canonical({0, 2, 3, 7}),
      GeneratorSet::canonical({0, 3, 5, 8}),
      GeneratorSet::canonical({0, 2, 5, 6}),
      GeneratorSet::canonical({0, 1, 4, 6}),
      GeneratorSet::canonical({0, 4, 6, 9}),
  };
}

} // namespace

TEST_CASE("decompose the 1-fold sumset of {0,2,3}") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3});
  const MembershipSet s = membership_set(a, 1, 1);
  const Decomposition dec = decompose(s, anchor_constant(a, 1) - 1);
  CHECK(dec.max_value == 3);
  CHECK(dec.c == 2);
  CHECK(dec.d == 0);
  CHECK(dec.low_fringe == std::vector<Int>{0});
  CHECK(dec.high_fringe.empty());
}

TEST_CASE("decompose (4{0,2,3})^(2) anchored at 9") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3});
  const MembershipSet s = membership_set(a, 4, 2);
  const Decomposition dec = decompose(s, 9);
  CHECK(dec.max_value == 12);
  CHECK(dec.c == 8);
  CHECK(dec.d == 3);
  CHECK(dec.low_fringe == std::vector<Int>{6});
  CHECK(dec.high_fringe.empty());
}

TEST_CASE("a full interval decomposes to empty fringes") {
  const GeneratorSet a = GeneratorSet::canonical({0, 1, 2});
  const MembershipSet s = membership_set(a, 3, 1); // [0, 6]
  const Decomposition dec = decompose(s);
  CHECK(dec.c == 0);
  CHECK(dec.d == 0);
  CHECK(dec.low_fringe.empty());
  CHECK(dec.high_fringe.empty());
}

TEST_CASE("anchor-free decomposition picks the leftmost longest run") {
  const Decomposition dec = decompose(set_from({0, 1, 4, 5, 9}, 9));
  CHECK(dec.c == 0);
  CHECK(dec.max_value - dec.d == 1);
  CHECK(dec.low_fringe.empty());
  CHECK(dec.high_fringe == std::vector<Int>{0, 4, 5});
}

TEST_CASE("decompose rejects empty sets and bad anchors") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3});
  CHECK_THROWS_AS(decompose(membership_set(a, 0, 2)), EmptySetError);
  CHECK_THROWS_AS(decompose(membership_set(a, 4, 2), 7), AnchorNotMember);
}

TEST_CASE("decompositions reconstruct their source exactly") {
  std::mt19937 rng(67);
  std::uniform_int_distribution<Int> hd(1, 8), td(1, 3);
  for (const GeneratorSet &a : sample_sets()) {
    for (int trial = 0; trial < 8; ++trial) {
      const Int h = hd(rng), t = td(rng);
      const MembershipSet s = membership_set(a, h, t);
      if (s.empty())
        continue;
      const Decomposition dec = decompose(s);
      const auto bits = reconstruct(dec, s.max_value());
      REQUIRE(bits.has_value());
      CHECK(*bits == s.bits());
      if (!dec.low_fringe.empty())
        CHECK(dec.low_fringe.back() <= dec.c - 2);
      if (!dec.high_fringe.empty())
        CHECK(dec.high_fringe.back() <= dec.d - 2);
    }
  }
}

TEST_CASE("stabilization of {0,2,3} at t = 2") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3});
  const VerificationReport rep = verify_stabilization(a, 2, 6);
  CHECK(rep.pass());
  CHECK(rep.stable.c == 8);
  CHECK(rep.stable.d == 3);
  CHECK(rep.stable.low_fringe == std::vector<Int>{6});
  CHECK(rep.stable.high_fringe.empty());
  CHECK(rep.anchor_interval_ok);
  CHECK(rep.anchor_constant_ok);
  // (h{0,2,3})^(2) = {6} u [8, 3h-3] for h >= 4.
  const MembershipSet s7 = membership_set(a, 7, 2);
  for (Int n = 0; n <= 21; ++n)
    CHECK(s7.contains(n) == (n == 6 || (n >= 8 && n <= 18)));
}

TEST_CASE("stabilization of {0,2,3} at t = 1") {
  const VerificationReport rep =
      verify_stabilization(GeneratorSet::canonical({0, 2, 3}), 1, 6);
  CHECK(rep.pass());
  CHECK(rep.stable.c == 2);
  CHECK(rep.stable.d == 0);
  CHECK(rep.stable.low_fringe == std::vector<Int>{0});
  CHECK(rep.stable.high_fringe.empty());
}

TEST_CASE("stabilization of {0,3,4} at t = 2 starts at c = 18") {
  const VerificationReport rep =
      verify_stabilization(GeneratorSet::canonical({0, 3, 4}), 2, 6);
  CHECK(rep.pass());
  CHECK(rep.stable.c == 18);
}

TEST_CASE("stabilization passes across a sample of sets") {
  for (const GeneratorSet &a : sample_sets())
    for (Int t = 1; t <= 3; ++t) {
      const VerificationReport rep =
          verify_stabilization(a, t, default_horizon(a));
      CAPTURE(t);
      CHECK(rep.pass());
    }
}

TEST_CASE("empirical threshold pins the optimal family") {
  CHECK(empirical_threshold(GeneratorSet::canonical({0, 3, 4}), 2, 6) == 6);
  CHECK(empirical_threshold(GeneratorSet::canonical({0, 1, 2}), 1, 6) == 0);
  const Int e = empirical_threshold(GeneratorSet::canonical({0, 2, 3}), 2, 6);
  CHECK(e <= 4);
  CHECK(e == 4);
}

TEST_CASE("empirical threshold never exceeds the closed form") {
  for (const GeneratorSet &a : sample_sets())
    for (Int t = 1; t <= 2; ++t)
      CHECK(empirical_threshold(a, t, default_horizon(a)) <=
            thresholds(a, t).h_stable);
}

TEST_CASE("optimality reports for the {0,n,n+1} family") {
  const OptimalityReport r32 = verify_optimality(3, 2);
  CHECK(r32.pass());
  CHECK(r32.h_stable == 6);
  CHECK(r32.c == 18);
  REQUIRE(r32.below_max.has_value());
  CHECK(*r32.below_max <= 16);

  const OptimalityReport r41 = verify_optimality(4, 1);
  CHECK(r41.pass());
  CHECK(r41.h_stable == 3);
  CHECK(r41.c == 12);

  const OptimalityReport r53 = verify_optimality(5, 3);
  CHECK(r53.pass());
  CHECK(r53.h_stable == 16);
  CHECK(r53.c == 80);
}

TEST_CASE("optimality rejects n < 3") {
  CHECK_THROWS_AS(verify_optimality(2, 1), NTooSmall);
}

TEST_CASE("anchor window witnesses for {0,2,3}") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3});

  // t = 2, n = 9, window (7, 10).
  const auto w2 = anchor_window_witnesses(a, 2, 9);
  REQUIRE(w2.size() == 2);
  CHECK(w2[0] == std::vector<Int>{0, 3});
  CHECK(w2[1] == std::vector<Int>{3, 1});

  // t = 1, n = 3, window (2, 4).
  const auto w1 = anchor_window_witnesses(a, 1, 3);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0] == std::vector<Int>{0, 1});

  CHECK_THROWS_AS(anchor_window_witnesses(a, 2, 7), OutOfWindow);
  CHECK_THROWS_AS(anchor_window_witnesses(a, 2, 10), OutOfWindow);
}

TEST_CASE("anchor window witness for a k = 3 set") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3, 7});
  REQUIRE(anchor_constant(a, 1) == 22);
  const auto w = anchor_window_witnesses(a, 1, 20);
  REQUIRE(w.size() == 1);
  CHECK(w[0] == std::vector<Int>{1, 6, 0});
  CHECK(w[0][0] <= 2); // x_1 in [0, a_2 - 1]
  CHECK(w[0][1] <= 6); // x_2 in [0, a_3 - 1]
}

TEST_CASE("window witnesses verify independently across samples") {
  for (const GeneratorSet &a : sample_sets()) {
    for (Int t = 1; t <= 3; ++t) {
      const Int cp = anchor_constant(a, t);
      const Int h0 = thresholds(a, t).h_stable;
      for (Int n = cp - a.max() + 1; n <= cp - 1; ++n) {
        const auto ws = anchor_window_witnesses(a, t, n);
        REQUIRE(static_cast<Int>(ws.size()) >= t);
        for (Int s = 1; s <= static_cast<Int>(ws.size()); ++s) {
          const auto &x = ws[static_cast<std::size_t>(s - 1)];
          REQUIRE(x.size() == a.k());
          Int value = 0, weight = 0;
          for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(x[i] >= 0);
            value += x[i] * a.at(i + 1);
            weight += x[i];
          }
          CHECK(value == n);
          CHECK(weight <= h0);
          for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            CHECK(x[i] >= (s - 1) * a.at(i + 2));
            CHECK(x[i] <= s * a.at(i + 2) - 1);
          }
        }
        for (std::size_t i = 0; i < ws.size(); ++i)
          for (std::size_t j = i + 1; j < ws.size(); ++j)
            CHECK(ws[i] != ws[j]);
      }
    }
  }
}

TEST_CASE("anchor constant witnesses on the worked examples") {
  const GeneratorSet a = GeneratorSet::canonical({0, 2, 3});

  const auto w2 = anchor_constant_witnesses(a, 2);
  REQUIRE(w2.size() == 2);
  CHECK(w2[0] == std::vector<Int>{5, 0});
  CHECK(w2[1] == std::vector<Int>{2, 2});

  const auto w1 = anchor_constant_witnesses(a, 1);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0] == std::vector<Int>{2, 0});

  const auto w3 = anchor_constant_witnesses(GeneratorSet::canonical({0, 2, 3, 7}), 1);
  REQUIRE(w3.size() == 1);
  CHECK(w3[0] == std::vector<Int>{2, 6, 0});
}

TEST_CASE("constant witnesses satisfy the weight identity") {
  for (const GeneratorSet &a : sample_sets()) {
    for (Int t = 1; t <= 3; ++t) {
      const Int cp = anchor_constant(a, t);
      const Int h0 = thresholds(a, t).h_stable;
      const auto ws = anchor_constant_witnesses(a, t);
      REQUIRE(static_cast<Int>(ws.size()) == t);
      for (Int r = 0; r < t; ++r) {
        const auto &p = ws[static_cast<std::size_t>(r)];
        Int value = 0, weight = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
          CHECK(p[i] >= 0);
          value += p[i] * a.at(i + 1);
          weight += p[i];
        }
        CHECK(value == cp);
        CHECK(weight == h0 + 1 - r * (a.max() - a.at(1)));
        CHECK(weight <= h0 + 1);
      }
      // The witnesses prove c' has t representations one step past h_stable.
      CHECK(membership_set(a, h0 + 1, t).contains(cp));
    }
  }
}

TEST_CASE("stable decompositions repeat at consecutive h") {
  for (const GeneratorSet &a : sample_sets()) {
    const Int t = 2;
    const ThresholdReport thr = thresholds(a, t);
    const Decomposition first =
        decompose(membership_set(a, thr.h_stable, t), thr.c_prime - 1);
    for (Int h = thr.h_stable + 1; h <= thr.h_stable + 4; ++h) {
      const Decomposition again =
          decompose(membership_set(a, h, t), thr.c_prime - 1);
      CHECK(first.same_shape(again));
    }
  }
}
