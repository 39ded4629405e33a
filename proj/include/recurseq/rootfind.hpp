#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "recurseq/numeric.hpp"

namespace recurseq {

/// f(t) = a t^2 - b t - c with a != 0.
struct QuadraticABC {
  Integer a;
  Integer b;
  Integer c;

  /// b^2 + 4ac; positive iff there are two distinct real roots.
  Integer discriminant() const { return b * b + 4 * a * c; }
};

/// f(t) = t^2 - p t + q.
struct QuadraticPQ {
  Integer p;
  Integer q;
};

/// Dense integer polynomial, coefficients from the constant term upward.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);

  static Polynomial from(const QuadraticABC& f);
  static Polynomial from(const QuadraticPQ& f);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& at) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Integer& scalar, const Polynomial& rhs);
  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// P_d with (1/f)^(d) = P_d / f^(d+1): P_0 = 1, P_d = P_d-1' f - d P_d-1 f'.
Polynomial householder_polynomial(const Polynomial& f, unsigned d);

/// Secant through (x_prev, f(x_prev)) and (x_prev2, f(x_prev2)):
/// (a x_prev x_prev2 + c) / (a x_prev + a x_prev2 - b).
Rational secant_step(const QuadraticABC& f, const Rational& x_prev, const Rational& x_prev2);
Rational newton_step(const QuadraticABC& f, const Rational& y);
Rational halley_step(const QuadraticPQ& f, const Rational& y);
Rational halley_step(const QuadraticABC& f, const Rational& y);

/// y + d P_d-1(y) f(y) / P_d(y). Order 1 is Newton, order 2 is Halley.
Rational householder_step(const QuadraticPQ& f, const Rational& y, unsigned d);
Rational householder_step(const QuadraticABC& f, const Rational& y, unsigned d);

/// Ratio index reached by one Newton step from x_k: 2k - 1.
Index newton_index(Index k);
/// Ratio index reached by one Halley step from x_k: 3k - 2.
Index halley_index(Index k);
/// Ratio index reached by one order-d Householder step from x_k: (d+1)k - d.
Index householder_index(Index k, unsigned d);
/// Ratio indices visited by the secant method: 2, 3, 4, 6, 9, ... (F_n+2 + 1).
std::vector<Index> secant_index_sequence(Index count);

enum class MethodKind { Secant, Newton, Halley, Householder };

struct Method {
  MethodKind kind = MethodKind::Newton;
  /// Householder order; ignored for the other kinds.
  unsigned order = 1;

  static Method secant() { return {MethodKind::Secant, 1}; }
  static Method newton() { return {MethodKind::Newton, 1}; }
  static Method halley() { return {MethodKind::Halley, 2}; }
  static Method householder(unsigned d) { return {MethodKind::Householder, d}; }

  /// Number of new ratio steps a single iteration multiplies by (d + 1 for
  /// Householder-type methods). Zero for the secant method.
  unsigned branching() const;

  std::string name() const;
  bool operator==(const Method&) const = default;
};

/// "secant", "newton", "halley", "householder:D" or "householder(D)".
Method parse_method(std::string_view text);

/// count iterates of the method on f. The secant chain begins with seeds[0],
/// seeds[1] (x0, x1); the others begin with seeds[0].
std::vector<Rational> iterate_chain(const QuadraticABC& f, const Method& method,
                                    const std::vector<Rational>& seeds, Index count);

enum class SeedKind {
  /// Convergents of the period-2 continued fraction: C0 = b/a, and (C1, C0)
  /// for the secant method.
  Convergent,
  /// b = 0: the two roots share a modulus, and C0 = 0 is a critical point.
  /// The chain starts right of both roots, at 1 + |c/a|.
  UpperBound,
};

struct RootApproximation {
  std::string decimal;
  Rational value;
  std::vector<Rational> iterates;
  SeedKind seed = SeedKind::Convergent;
};

/// Iterates the method until two successive iterates are within 10^-digits
/// and round to the same decimal string; returns that rounding of the last
/// iterate.
RootApproximation approximate_root(const QuadraticABC& f, const Method& method, unsigned digits,
                                   unsigned max_iterations = 64);

}  // namespace recurseq
