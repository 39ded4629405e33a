#pragma once

#include <vector>

#include "recurseq/numeric.hpp"
#include "recurseq/recurrence.hpp"

namespace recurseq {

/// Ratio of consecutive terms x_n = U_n / U_n-1.
using RatioValue = Rational;

/// Index sequence g = W(i, j, s, t): g_0 = i, g_1 = j, g_n = s g_n-1 - t g_n-2.
struct IndexSequenceParams {
  Index i = 2;
  Index j = 3;
  Index s = 1;
  Index t = -1;
};

/// One step of an accelerated chain: x at index g_n together with U and T there.
struct AccelEntry {
  Index index = 0;
  Rational u;
  Rational t;
  RatioValue x;
};

/// One step of a chain that tracks only ratios.
struct RatioEntry {
  Index index = 0;
  RatioValue x;
};

/// x_n = U_n / U_n-1 for n >= 2. Throws DegenerateRatio when U_n-1 = 0.
RatioValue ratio_x(const RecurrenceParams& params, Index n, Index max_index = kDefaultMaxIndex);

/// a_n / a_n-1 through the closed form (a1 x_n - a0 q) / (a0 x_n + a1 - a0 p).
/// Both the direct denominator a_n-1 and the closed-form one must be nonzero.
RatioValue general_ratio_y(const LinRecSequence& seq, Index n,
                           Index max_index = kDefaultMaxIndex);

/// x_n+m from x_n and x_m+1: (x_m+1 x_n - q) / (x_n + x_m+1 - p).
RatioValue shift_ratio(const RecurrenceParams& params, const RatioValue& x_n,
                       const RatioValue& x_m1);

/// x_2n from x_n: (2q x_n - p x_n^2) / (q - x_n^2).
RatioValue double_ratio(const RecurrenceParams& params, const RatioValue& x_n);

/// x_Fn from x_Fn-1 and x_Fn-2:
/// (q x_a + q x_b - p x_a x_b) / (q - x_a x_b).
RatioValue fibonacci_index_accel(const RecurrenceParams& params, const RatioValue& x_a,
                                 const RatioValue& x_b);

/// g_0 .. g_count-1 of W(i, j, s, t). Every index must be >= 2 (InvalidArgument)
/// and within the cap (ResourceLimit).
std::vector<Index> generate_indices(const IndexSequenceParams& g, Index count,
                                    Index max_index = kDefaultMaxIndex);

/// Subsequence x_{g_n} for an arbitrary order-2 index sequence g.
///
/// Entries 0 and 1 are evaluated directly. From n = 2 on, U and T at g_n are
/// built bilinearly from the decimated basis values U^(s), T^(s) at g_n-1
/// and U^(-t), T^(-t) at g_n-2, with coefficients taken from M^s and M^-t.
/// The ratio x_{g_n} is obtained from the scaled ratios
/// x^(s) = -q U^(s) / T^(s) and x^(-t) = -q U^(-t) / T^(-t) through a
/// bilinear fraction, never from the U, T columns.
std::vector<AccelEntry> accelerate_general(const RecurrenceParams& params,
                                           const IndexSequenceParams& g, Index count,
                                           Index max_index = kDefaultMaxIndex);

/// Subsequence x_{kn+h}, each entry built from the previous two.
std::vector<AccelEntry> arithmetic_index_accel(const RecurrenceParams& params, Index h,
                                               Index k, Index count,
                                               Index max_index = kDefaultMaxIndex);

/// x_2, x_3, x_5, x_8, ... via fibonacci_index_accel.
std::vector<RatioEntry> fibonacci_index_chain(const RecurrenceParams& params, Index count,
                                              Index max_index = kDefaultMaxIndex);

/// x_s, x_2s, x_4s, ... via double_ratio.
std::vector<RatioEntry> doubling_chain(const RecurrenceParams& params, Index start, Index count,
                                       Index max_index = kDefaultMaxIndex);

/// x_n, x_n+m, x_n+2m, ... via shift_ratio with x_m+1 held fixed. Requires m >= 1.
std::vector<RatioEntry> shift_chain(const RecurrenceParams& params, Index n, Index m,
                                    Index count, Index max_index = kDefaultMaxIndex);

/// Both sides of an integer identity, for counterexample reporting.
struct IdentityCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;
};

/// F_{F_n} = F_{F_n-1} F_{F_n-2 - 1} + F_{F_n-1 - 1} F_{F_n-2} + F_{F_n-1} F_{F_n-2}, n >= 3.
IdentityCheck check_nested_fibonacci_identity(Index n, Index max_index = kDefaultMaxIndex);
bool verify_nested_fibonacci_identity(Index n, Index max_index = kDefaultMaxIndex);

/// F_kn as a cubic in F_k(n-1), F_k(n-1)-1, F_k(n-2), F_k(n-2)-1; k >= 1, n >= 2.
/// F_-1 = 1 appears for k = 1, n = 2.
IdentityCheck check_fkn_identity(Index k, Index n, Index max_index = kDefaultMaxIndex);
bool verify_fkn_identity(Index k, Index n, Index max_index = kDefaultMaxIndex);

/// F_n = (-1)^n (-F_n-1^2 F_n-2 + 2 F_n-1 F_n-2 F_n-3 + F_n-1^2 F_n-3 - F_n-2^3), n >= 3.
IdentityCheck check_cubic_fibonacci_identity(Index n, Index max_index = kDefaultMaxIndex);
bool verify_cubic_fibonacci_identity(Index n, Index max_index = kDefaultMaxIndex);

}  // namespace recurseq
