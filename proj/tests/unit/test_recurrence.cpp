#include <gtest/gtest.h>

#include "oracles.hpp"
#include "recurseq/errors.hpp"
#include "recurseq/recurrence.hpp"

using namespace recurseq;

namespace {

const RecurrenceParams kFib{1, -1};
const RecurrenceParams kMersenne{3, 2};

Matrix2 to_matrix(const oracle::Mat& m) { return {m[0], m[1], m[2], m[3]}; }

}  // namespace

TEST(Term, Examples) {
  EXPECT_EQ(term({0, 1, kFib}, 10), 55);
  EXPECT_EQ(term({0, 1, kMersenne}, 5), 31);
  EXPECT_EQ(oracle::nth(0, 1, 1, -1, 10), 55);
  EXPECT_EQ(oracle::nth(0, 1, 3, 2, 5), 31);
  EXPECT_EQ(term({17, -4, {5, 9}}, 0), 17);
  EXPECT_EQ(term({17, -4, {5, 9}}, 1), -4);
}

TEST(Term, MatchesIterationOnRandomSequences) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Integer a0 = oracle::uniform(rng, -100, 100);
    Integer a1 = oracle::uniform(rng, -100, 100);
    RecurrenceParams params{oracle::uniform(rng, -10, 10), oracle::uniform(rng, -10, 10)};
    auto expected = oracle::iterate(a0, a1, params.p, params.q, 200);
    for (Index n = 0; n <= 200; n += 7) {
      EXPECT_EQ(term({a0, a1, params}, n), expected[n]);
      auto basis = basis_forward(params, n);
      EXPECT_EQ(term({a0, a1, params}, n), a1 * basis.u + a0 * basis.t);
    }
  }
}

TEST(Term, ZeroQDegeneratesGracefully) {
  // a_n = p a_n-1, so U_n = p^(n-1).
  EXPECT_EQ(term({0, 1, {3, 0}}, 6), 243);
  EXPECT_EQ(term({5, 1, {0, 0}}, 4), 0);
}

TEST(Term, RejectsNegativeIndexAndRespectsCap) {
  EXPECT_THROW(term({0, 1, kFib}, -1), InvalidArgument);
  EXPECT_THROW(term({0, 1, kFib}, 1001, 1000), ResourceLimit);
}

TEST(BasisUT, Examples) {
  EXPECT_EQ(basis_UT(kFib, 10), (BasisValues{55, 34}));
  EXPECT_EQ(basis_UT({7, -3}, 0), (BasisValues{0, 1}));
  EXPECT_EQ(basis_UT(kFib, -1), (BasisValues{1, -1}));
  EXPECT_THROW(basis_UT({1, 0}, -1), InverseUnavailable);
}

TEST(BasisUT, NegativeIndicesExtendTheRecurrence) {
  // a_n-2 = (p a_n-1 - a_n) / q runs the recurrence backwards.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    RecurrenceParams params{oracle::uniform(rng, -6, 6), oracle::uniform_nonzero(rng, -6, 6)};
    Rational u1(1), u0(0);
    Rational t1(0), t0(1);
    for (Index n = -1; n >= -15; --n) {
      Rational u = (params.p * u0 - u1) / Rational(params.q);
      Rational t = (params.p * t0 - t1) / Rational(params.q);
      EXPECT_EQ(basis_UT(params, n), (BasisValues{u, t})) << "n=" << n;
      u1 = u0;
      u0 = u;
      t1 = t0;
      t0 = t;
    }
  }
}

TEST(BasisUT, StepRelations) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    RecurrenceParams params{oracle::uniform(rng, -10, 10), oracle::uniform(rng, -10, 10)};
    for (Index n = 0; n < 60; ++n) {
      auto now = basis_UT(params, n);
      auto next = basis_UT(params, n + 1);
      EXPECT_EQ(next.t, -params.q * now.u);
      EXPECT_EQ(next.u, now.t + params.p * now.u);
    }
  }
}

TEST(LucasV, Examples) {
  EXPECT_EQ(lucas_V(kFib, 4), 7);
  EXPECT_EQ(lucas_V({8, 3}, 0), 2);
  EXPECT_EQ(lucas_V(kMersenne, 3), 9);
  EXPECT_EQ(lucas_V(kMersenne, 3), oracle::nth(2, 3, 3, 2, 3));
}

TEST(CompanionPower, Examples) {
  EXPECT_EQ(companion_power(kFib, 3), (Matrix2{1, 2, 2, 3}));
  EXPECT_EQ(companion_power({4, 9}, 0), Matrix2::identity());
  EXPECT_EQ(companion_power(kFib, -1), (Matrix2{-1, 1, 1, 0}));
  EXPECT_EQ(companion_power(kFib, 3), to_matrix(oracle::naive_power(1, -1, 3)));
  EXPECT_THROW(companion_power({2, 0}, -3), InverseUnavailable);
  EXPECT_EQ(companion_power({2, 0}, 3), (Matrix2{0, 4, 0, 8}));
}

TEST(CompanionPower, MatchesRepeatedMultiplication) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 8; ++trial) {
    RecurrenceParams params{oracle::uniform(rng, -10, 10), oracle::uniform_nonzero(rng, -10, 10)};
    for (Index n = -12; n <= 200; n += (n < 0 ? 1 : 13)) {
      EXPECT_EQ(companion_power(params, n), to_matrix(oracle::naive_power(params.p, params.q, n)))
          << "p=" << params.p << " q=" << params.q << " n=" << n;
    }
  }
}

TEST(CompanionPower, GroupLaw) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    RecurrenceParams params{oracle::uniform(rng, -10, 10), oracle::uniform_nonzero(rng, -10, 10)};
    Index m = oracle::uniform(rng, -20, 20);
    Index n = oracle::uniform(rng, -20, 20);
    EXPECT_EQ(companion_power(params, m + n),
              companion_power(params, m) * companion_power(params, n));
    EXPECT_EQ(companion_power(params, n) * companion_power(params, -n), Matrix2::identity());
    EXPECT_EQ(companion_power(params, n).det(), rational_pow(params.q, n));
  }
}

TEST(DecimatedParams, Examples) {
  EXPECT_EQ(decimated_params(kFib, 2), (RecurrenceParams{3, 1}));
  EXPECT_EQ(decimated_params({-7, 5}, 1), (RecurrenceParams{-7, 5}));
  EXPECT_EQ(decimated_params(kMersenne, 2), (RecurrenceParams{5, 4}));
  EXPECT_THROW(decimated_params(kFib, 0), InvalidArgument);
  // U_6 = U_2 U'_3 = 8 and U_4 = U_2 U'_2 = 15 from the two examples.
  EXPECT_EQ(oracle::U(3, 1, 3), 8);
  EXPECT_EQ(oracle::U(3, 2, 2) * oracle::U(5, 4, 2), 15);
}

TEST(DecimatedParams, SubscriptMultiplication) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 6; ++trial) {
    RecurrenceParams params{oracle::uniform(rng, -10, 10), oracle::uniform(rng, -10, 10)};
    for (Index m = 1; m <= 30; m += 3) {
      RecurrenceParams dec = decimated_params(params, m);
      Integer um = oracle::U(params.p, params.q, m);
      Integer tm = oracle::T(params.p, params.q, m);
      for (Index n = 0; n <= 30; n += 4) {
        Integer ud = oracle::U(dec.p, dec.q, n);
        Integer td = oracle::T(dec.p, dec.q, n);
        EXPECT_EQ(oracle::U(params.p, params.q, m * n), um * ud);
        EXPECT_EQ(oracle::T(params.p, params.q, m * n), td + tm * ud);
      }
    }
  }
}

TEST(BasisPair, WorksOverRationals) {
  // W(0,1,1/2,-1/4): U_2 = 1/2, U_3 = 1/4 + 1/4 = 1/2.
  auto [u, t] = basis_pair<Rational>(make_rational(1, 2), make_rational(-1, 4), 3);
  EXPECT_EQ(u, make_rational(1, 2));
  EXPECT_EQ(t, make_rational(1, 8));
}
