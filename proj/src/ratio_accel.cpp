#include "recurseq/ratio_accel.hpp"

#include <string>

#include "recurseq/errors.hpp"

namespace recurseq {

namespace {

Rational checked_div(const Rational& num, const Rational& den, const std::string& what) {
  if (den == 0) {
    throw DegenerateRatio(what);
  }
  return num / den;
}

void require_ratio_index(Index n) {
  if (n < 2) {
    throw InvalidArgument("ratio index must be >= 2, got " + std::to_string(n));
  }
}

void require_invertible(const RecurrenceParams& params) {
  if (params.q == 0) {
    throw InverseUnavailable("acceleration needs q != 0");
  }
}

const RecurrenceParams kFibonacci{1, -1};

Rational fib(Index n, Index max_index) { return basis_UT(kFibonacci, n, max_index).u; }

}  // namespace

RatioValue ratio_x(const RecurrenceParams& params, Index n, Index max_index) {
  require_ratio_index(n);
  check_index_cap(n, max_index);
  auto [u_prev, t_prev] = basis_pair<Integer>(params.p, params.q, n - 1);
  if (u_prev == 0) {
    throw DegenerateRatio("x_" + std::to_string(n) + " undefined: U_" + std::to_string(n - 1) +
                          " = 0");
  }
  Integer u = t_prev + params.p * u_prev;
  return make_rational(u, u_prev);
}

RatioValue general_ratio_y(const LinRecSequence& seq, Index n, Index max_index) {
  require_ratio_index(n);
  if (term(seq, n - 1, max_index) == 0) {
    throw DegenerateRatio("a_" + std::to_string(n - 1) + " = 0");
  }
  const RatioValue x = ratio_x(seq.params, n, max_index);
  const Rational a0(seq.a0);
  const Rational a1(seq.a1);
  return checked_div(a1 * x - a0 * seq.params.q, a0 * x + a1 - a0 * seq.params.p,
                     "closed-form ratio denominator vanishes at n = " + std::to_string(n));
}

RatioValue shift_ratio(const RecurrenceParams& params, const RatioValue& x_n,
                       const RatioValue& x_m1) {
  return checked_div(x_m1 * x_n - params.q, x_n + x_m1 - params.p,
                     "shift denominator x_n + x_m+1 - p vanishes");
}

RatioValue double_ratio(const RecurrenceParams& params, const RatioValue& x_n) {
  Rational sq = x_n * x_n;
  return checked_div(2 * params.q * x_n - params.p * sq, params.q - sq,
                     "doubling denominator q - x_n^2 vanishes");
}

RatioValue fibonacci_index_accel(const RecurrenceParams& params, const RatioValue& x_a,
                                 const RatioValue& x_b) {
  Rational prod = x_a * x_b;
  return checked_div(params.q * x_a + params.q * x_b - params.p * prod, params.q - prod,
                     "Fibonacci-index denominator q - x_a x_b vanishes");
}

std::vector<Index> generate_indices(const IndexSequenceParams& g, Index count,
                                    Index max_index) {
  if (count < 1) {
    throw InvalidArgument("count must be >= 1");
  }
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(count));
  Integer prev2(static_cast<long>(g.i));
  Integer prev1(static_cast<long>(g.j));
  for (Index n = 0; n < count; ++n) {
    Integer current;
    if (n == 0) {
      current = prev2;
    } else if (n == 1) {
      current = prev1;
    } else {
      current = g.s * prev1 - g.t * prev2;
      prev2 = prev1;
      prev1 = current;
    }
    if (current < 2) {
      throw InvalidArgument("index sequence reaches g_" + std::to_string(n) + " = " +
                            current.get_str() + " < 2");
    }
    check_index_cap(current, max_index);
    out.push_back(to_index(current));
  }
  return out;
}

std::vector<AccelEntry> accelerate_general(const RecurrenceParams& params,
                                           const IndexSequenceParams& g, Index count,
                                           Index max_index) {
  require_invertible(params);
  check_index_cap(g.s, max_index);
  check_index_cap(g.t, max_index);
  const std::vector<Index> idx = generate_indices(g, count, max_index);

  const Matrix2 ms = companion_power(params, g.s, max_index);
  const Matrix2 mt = companion_power(params, -g.t, max_index);
  const Rational& a1 = ms.e11;
  const Rational& a2 = ms.e12;
  const Rational& b1 = mt.e11;
  const Rational& b2 = mt.e12;
  const Rational& b3 = mt.e21;
  const Rational& b4 = mt.e22;
  const Rational cross_u = a1 * b2 + a2 * b4;
  const Rational cross_t = a1 * b1 + a2 * b3;

  // U^(s), T^(s) = W(0,1,V_s,q^s), W(1,0,V_s,q^s), and the same for -t.
  const Rational trace_s = ms.trace();
  const Rational det_s = ms.det();
  const Rational trace_t = mt.trace();
  const Rational det_t = mt.det();

  const Rational q(params.q);
  const Rational qq = q * q;

  std::vector<AccelEntry> out;
  out.reserve(idx.size());
  for (std::size_t n = 0; n < idx.size(); ++n) {
    const Index target = idx[n];
    if (n < 2) {
      BasisValues basis = basis_UT(params, target, max_index);
      out.push_back({target, basis.u, basis.t, ratio_x(params, target, max_index)});
      continue;
    }
    const Index k1 = idx[n - 1];
    const Index k2 = idx[n - 2];
    auto [us, ts] = basis_pair<Rational>(trace_s, det_s, k1);
    auto [ut, tt] = basis_pair<Rational>(trace_t, det_t, k2);

    AccelEntry entry;
    entry.index = target;
    entry.u = a2 * us * tt + b2 * ts * ut + cross_u * us * ut;
    entry.t = ts * tt + a1 * us * tt + b1 * ts * ut + cross_t * us * ut;

    const std::string where = " at index " + std::to_string(target);
    if (ts == 0 || tt == 0) {
      throw DegenerateRatio("scaled ratio undefined (T^(s) or T^(-t) = 0)" + where);
    }
    const Rational xs = -q * us / ts;
    const Rational xt = -q * ut / tt;
    const Rational prod = xs * xt;
    entry.x = checked_div(qq * a2 * xs + qq * b2 * xt - q * cross_u * prod,
                          qq - q * a1 * xs - q * b1 * xt + cross_t * prod,
                          "acceleration denominator vanishes" + where);
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<AccelEntry> arithmetic_index_accel(const RecurrenceParams& params, Index h,
                                               Index k, Index count, Index max_index) {
  require_invertible(params);
  if (h < 2) {
    throw InvalidArgument("arithmetic acceleration needs h >= 2, got " + std::to_string(h));
  }
  const std::vector<Index> idx = generate_indices({h, h + k, 2, 1}, count, max_index);
  const Rational p(params.p);
  const Rational q(params.q);

  std::vector<AccelEntry> out;
  out.reserve(idx.size());
  for (std::size_t n = 0; n < idx.size(); ++n) {
    const Index target = idx[n];
    if (n < 2) {
      BasisValues basis = basis_UT(params, target, max_index);
      out.push_back({target, basis.u, basis.t, ratio_x(params, target, max_index)});
      continue;
    }
    const AccelEntry& e1 = out[n - 1];
    const AccelEntry& e2 = out[n - 2];
    // M^g_n = M^(2 g_n-1) M^(-g_n-2).
    const Rational scale = rational_pow(params.q, -e2.index);
    const Rational u1_sq = e1.u * e1.u;
    const Rational t1_sq = e1.t * e1.t;

    AccelEntry entry;
    entry.index = target;
    entry.u = scale * (q * u1_sq * e2.u + 2 * e1.t * e1.u * e2.t + p * u1_sq * e2.t -
                       e2.u * t1_sq);
    entry.t = scale * (t1_sq * e2.t + p * t1_sq * e2.u - q * e2.t * u1_sq +
                       2 * q * e1.t * e1.u * e2.u);

    const Rational x1_sq = e1.x * e1.x;
    entry.x = checked_div(x1_sq * e2.x + 2 * q * e1.x - p * x1_sq - q * e2.x,
                          q - p * e2.x - x1_sq + 2 * e1.x * e2.x,
                          "arithmetic acceleration denominator vanishes at index " +
                              std::to_string(target));
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<RatioEntry> fibonacci_index_chain(const RecurrenceParams& params, Index count,
                                              Index max_index) {
  const std::vector<Index> idx = generate_indices({2, 3, 1, -1}, count, max_index);
  std::vector<RatioEntry> out;
  out.reserve(idx.size());
  for (std::size_t n = 0; n < idx.size(); ++n) {
    if (n < 2) {
      out.push_back({idx[n], ratio_x(params, idx[n], max_index)});
      continue;
    }
    try {
      out.push_back({idx[n], fibonacci_index_accel(params, out[n - 1].x, out[n - 2].x)});
    } catch (const DegenerateRatio& e) {
      throw DegenerateRatio(std::string(e.what()) + " at index " + std::to_string(idx[n]));
    }
  }
  return out;
}

std::vector<RatioEntry> doubling_chain(const RecurrenceParams& params, Index start, Index count,
                                       Index max_index) {
  require_ratio_index(start);
  if (count < 1) {
    throw InvalidArgument("count must be >= 1");
  }
  std::vector<RatioEntry> out;
  out.push_back({start, ratio_x(params, start, max_index)});
  for (Index n = 1; n < count; ++n) {
    const Index target = out.back().index * 2;
    check_index_cap(target, max_index);
    try {
      out.push_back({target, double_ratio(params, out.back().x)});
    } catch (const DegenerateRatio& e) {
      throw DegenerateRatio(std::string(e.what()) + " at index " + std::to_string(target));
    }
  }
  return out;
}

std::vector<RatioEntry> shift_chain(const RecurrenceParams& params, Index n, Index m,
                                    Index count, Index max_index) {
  require_ratio_index(n);
  if (m < 1) {
    throw InvalidArgument("shift needs m >= 1 so that x_m+1 is defined, got " +
                          std::to_string(m));
  }
  if (count < 1) {
    throw InvalidArgument("count must be >= 1");
  }
  const RatioValue step = ratio_x(params, m + 1, max_index);
  std::vector<RatioEntry> out;
  out.push_back({n, ratio_x(params, n, max_index)});
  for (Index c = 1; c < count; ++c) {
    const Index target = out.back().index + m;
    check_index_cap(target, max_index);
    try {
      out.push_back({target, shift_ratio(params, out.back().x, step)});
    } catch (const DegenerateRatio& e) {
      throw DegenerateRatio(std::string(e.what()) + " at index " + std::to_string(target));
    }
  }
  return out;
}

IdentityCheck check_nested_fibonacci_identity(Index n, Index max_index) {
  if (n < 3) {
    throw InvalidArgument("nested Fibonacci identity needs n >= 3");
  }
  const Integer outer = basis_forward(kFibonacci, n, max_index).u;
  check_index_cap(outer, max_index);
  const Index fn = to_index(outer);
  const Index fn1 = to_index(basis_forward(kFibonacci, n - 1).u);
  const Index fn2 = to_index(basis_forward(kFibonacci, n - 2).u);

  IdentityCheck out;
  out.lhs = fib(fn, max_index);
  out.rhs = fib(fn1, max_index) * fib(fn2 - 1, max_index) +
            fib(fn1 - 1, max_index) * fib(fn2, max_index) +
            fib(fn1, max_index) * fib(fn2, max_index);
  out.holds = out.lhs == out.rhs;
  return out;
}

bool verify_nested_fibonacci_identity(Index n, Index max_index) {
  return check_nested_fibonacci_identity(n, max_index).holds;
}

IdentityCheck check_fkn_identity(Index k, Index n, Index max_index) {
  if (k < 1 || n < 2) {
    throw InvalidArgument("F_kn identity needs k >= 1 and n >= 2");
  }
  check_index_cap(k * n, max_index);
  const Rational f1 = fib(k * (n - 1), max_index);
  const Rational f1m = fib(k * (n - 1) - 1, max_index);
  const Rational f2 = fib(k * (n - 2), max_index);
  const Rational f2m = fib(k * (n - 2) - 1, max_index);
  const int sign = (k * (n - 2)) % 2 == 0 ? 1 : -1;

  IdentityCheck out;
  out.lhs = fib(k * n, max_index);
  out.rhs = sign * (-f1 * f1 * f2 + 2 * f1 * f1m * f2m + f1 * f1 * f2m - f2 * f1m * f1m);
  out.holds = out.lhs == out.rhs;
  return out;
}

bool verify_fkn_identity(Index k, Index n, Index max_index) {
  return check_fkn_identity(k, n, max_index).holds;
}

IdentityCheck check_cubic_fibonacci_identity(Index n, Index max_index) {
  if (n < 3) {
    throw InvalidArgument("cubic Fibonacci identity needs n >= 3");
  }
  check_index_cap(n, max_index);
  const Rational f1 = fib(n - 1, max_index);
  const Rational f2 = fib(n - 2, max_index);
  const Rational f3 = fib(n - 3, max_index);
  const int sign = n % 2 == 0 ? 1 : -1;

  IdentityCheck out;
  out.lhs = fib(n, max_index);
  out.rhs = sign * (-f1 * f1 * f2 + 2 * f1 * f2 * f3 + f1 * f1 * f3 - f2 * f2 * f2);
  out.holds = out.lhs == out.rhs;
  return out;
}

bool verify_cubic_fibonacci_identity(Index n, Index max_index) {
  return check_cubic_fibonacci_identity(n, max_index).holds;
}

}  // namespace recurseq
