#pragma once

#include <utility>

#include "recurseq/numeric.hpp"

namespace recurseq {

/// Parameters of the characteristic polynomial t^2 - p t + q. The recurrence
/// they define is a(n) = p a(n-1) - q a(n-2).
struct RecurrenceParams {
  Integer p;
  Integer q;

  bool operator==(const RecurrenceParams&) const = default;

  /// p^2 - 4q.
  Integer discriminant() const { return p * p - 4 * q; }
};

/// W(a0, a1, p, q): initial terms plus recurrence parameters.
struct LinRecSequence {
  Integer a0;
  Integer a1;
  RecurrenceParams params;
};

/// 2x2 matrix over the rationals, row-major.
struct Matrix2 {
  Rational e11{0};
  Rational e12{0};
  Rational e21{0};
  Rational e22{0};

  static Matrix2 identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }

  Rational det() const { return e11 * e22 - e12 * e21; }
  Rational trace() const { return e11 + e22; }

  bool operator==(const Matrix2&) const = default;
};

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs);
Matrix2 operator*(const Rational& scalar, const Matrix2& m);

/// Values of the basis sequences U = W(0,1,p,q) and T = W(1,0,p,q) at one index.
struct BasisValues {
  Rational u;
  Rational t;

  bool operator==(const BasisValues&) const = default;
};

struct IntegerBasis {
  Integer u;
  Integer t;
};

/// (U_n, T_n) for coefficients in any commutative ring, n >= 0. Binary
/// exponentiation in the algebra generated by the companion matrix M, using
/// M^k = T_k I + U_k M:
///   doubling:  U_2k = 2 T_k U_k + p U_k^2,  T_2k = T_k^2 - q U_k^2
///   increment: U_k+1 = T_k + p U_k,         T_k+1 = -q U_k
template <class Ring>
std::pair<Ring, Ring> basis_pair(const Ring& p, const Ring& q, Index n) {
  Ring u(0);
  Ring t(1);
  if (n <= 0) {
    return {u, t};
  }
  int top = 62;
  while (((n >> top) & 1) == 0) {
    --top;
  }
  for (int bit = top; bit >= 0; --bit) {
    Ring uu = u * u;
    Ring next_u = 2 * t * u + p * uu;
    Ring next_t = t * t - q * uu;
    u = std::move(next_u);
    t = std::move(next_t);
    if ((n >> bit) & 1) {
      Ring inc_u = t + p * u;
      Ring inc_t = -q * u;
      u = std::move(inc_u);
      t = std::move(inc_t);
    }
  }
  return {u, t};
}

/// Exact (U_n, T_n) for n >= 0 over the integers.
IntegerBasis basis_forward(const RecurrenceParams& params, Index n,
                           Index max_index = kDefaultMaxIndex);

/// (U_n, T_n) for any integer n. Negative indices read the entries of
/// M^-k = q^-k [[T_k + p U_k, -U_k], [q U_k, T_k]] and need q != 0.
BasisValues basis_UT(const RecurrenceParams& params, Index n,
                     Index max_index = kDefaultMaxIndex);

/// n-th term of the sequence, n >= 0, as a1 U_n + a0 T_n.
Integer term(const LinRecSequence& seq, Index n, Index max_index = kDefaultMaxIndex);

/// Lucas companion V = W(2, p, p, q) at n >= 0.
Integer lucas_V(const RecurrenceParams& params, Index n, Index max_index = kDefaultMaxIndex);

/// M = [[0, 1], [-q, p]].
Matrix2 companion(const RecurrenceParams& params);

/// M^n for any integer n; for n >= 0 this is [[T_n, U_n], [T_n+1, U_n+1]].
Matrix2 companion_power(const RecurrenceParams& params, Index n,
                        Index max_index = kDefaultMaxIndex);

/// (V_m, q^m): the parameters of the basis sequences sampled every m steps,
/// so that U_mn = U_m U'_n and T_mn = T'_n + T_m U'_n.
RecurrenceParams decimated_params(const RecurrenceParams& params, Index m);

}  // namespace recurseq
