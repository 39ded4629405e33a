#include "recurseq/recurrence.hpp"

#include <string>

#include "recurseq/errors.hpp"

namespace recurseq {

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs) {
  return {lhs.e11 * rhs.e11 + lhs.e12 * rhs.e21, lhs.e11 * rhs.e12 + lhs.e12 * rhs.e22,
          lhs.e21 * rhs.e11 + lhs.e22 * rhs.e21, lhs.e21 * rhs.e12 + lhs.e22 * rhs.e22};
}

Matrix2 operator*(const Rational& scalar, const Matrix2& m) {
  return {scalar * m.e11, scalar * m.e12, scalar * m.e21, scalar * m.e22};
}

IntegerBasis basis_forward(const RecurrenceParams& params, Index n, Index max_index) {
  if (n < 0) {
    throw InvalidArgument("basis_forward needs a nonnegative index, got " + std::to_string(n));
  }
  check_index_cap(n, max_index);
  auto [u, t] = basis_pair<Integer>(params.p, params.q, n);
  return {std::move(u), std::move(t)};
}

BasisValues basis_UT(const RecurrenceParams& params, Index n, Index max_index) {
  check_index_cap(n, max_index);
  if (n >= 0) {
    auto [u, t] = basis_pair<Integer>(params.p, params.q, n);
    return {Rational(u), Rational(t)};
  }
  if (params.q == 0) {
    throw InverseUnavailable("negative index " + std::to_string(n) + " needs q != 0");
  }
  auto [u, t] = basis_pair<Integer>(params.p, params.q, -n);
  Rational scale = rational_pow(params.q, n);
  // U_-k is the (1,2) entry of M^-k, T_-k the (1,1) entry.
  return {-Rational(u) * scale, Rational(t + params.p * u) * scale};
}

Integer term(const LinRecSequence& seq, Index n, Index max_index) {
  auto basis = basis_forward(seq.params, n, max_index);
  return seq.a1 * basis.u + seq.a0 * basis.t;
}

Integer lucas_V(const RecurrenceParams& params, Index n, Index max_index) {
  auto basis = basis_forward(params, n, max_index);
  return 2 * basis.t + params.p * basis.u;
}

Matrix2 companion(const RecurrenceParams& params) {
  return {Rational(0), Rational(1), Rational(-params.q), Rational(params.p)};
}

Matrix2 companion_power(const RecurrenceParams& params, Index n, Index max_index) {
  check_index_cap(n, max_index);
  const Integer& p = params.p;
  const Integer& q = params.q;
  if (n >= 0) {
    auto [u, t] = basis_pair<Integer>(p, q, n);
    return {Rational(t), Rational(u), Rational(-q * u), Rational(t + p * u)};
  }
  if (q == 0) {
    throw InverseUnavailable("companion matrix is singular (q = 0); cannot raise to " +
                             std::to_string(n));
  }
  auto [u, t] = basis_pair<Integer>(p, q, -n);
  Matrix2 adj{Rational(t + p * u), Rational(-u), Rational(q * u), Rational(t)};
  return rational_pow(q, n) * adj;
}

RecurrenceParams decimated_params(const RecurrenceParams& params, Index m) {
  if (m < 1) {
    throw InvalidArgument("decimation step must be >= 1, got " + std::to_string(m));
  }
  return {lucas_V(params, m, m), int_pow(params.q, static_cast<unsigned long>(m))};
}

}  // namespace recurseq
