#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "recurseq/numeric.hpp"
#include "recurseq/recurrence.hpp"
#include "recurseq/rootfind.hpp"

namespace recurseq {

/// Partial quotient num/den with both parts nonzero.
struct PartialQuotient {
  Integer num;
  Integer den;

  Rational value() const { return make_rational(num, den); }
  bool operator==(const PartialQuotient&) const = default;
};

/// Continued fraction [a0/b0, a1/b1, ...] with rational partial quotients:
///   a0/b0 + 1/(a1/b1 + 1/(a2/b2 + ...)).
/// When period > 0 the last `period` quotients repeat forever.
class RationalCF {
 public:
  RationalCF(std::vector<PartialQuotient> quotients, std::size_t period = 0);

  /// Text form: comma-separated "a/b" (or bare integer) tokens, with an
  /// optional "| period=k" suffix, e.g. "2/1, 2/1 | period=2".
  static RationalCF parse(std::string_view text);

  /// The i-th partial quotient, unrolling the period. Throws InvalidArgument
  /// past the end of a finite fraction.
  const PartialQuotient& quotient(std::size_t i) const;

  /// Number of quotients available; SIZE_MAX when periodic.
  std::size_t available() const;

  const std::vector<PartialQuotient>& quotients() const { return quotients_; }
  std::size_t period() const { return period_; }

  std::string to_string() const;

 private:
  std::vector<PartialQuotient> quotients_;
  std::size_t period_;
};

/// Convergent C_n. Direct evaluation fills p and q; the integer form fills
/// s, t and u. value is empty where the convergent denominator vanishes and
/// the caller asked to keep going.
struct ConvergentRecord {
  Index index = 0;
  std::optional<Rational> value;
  Rational p{0};
  Rational q{0};
  Integer s{0};
  Integer t{0};
  Integer u{0};
};

enum class OnDegenerate { Throw, Skip };

/// p_n = (a_n/b_n) p_n-1 + p_n-2, q_n likewise, C_n = p_n / q_n.
std::vector<ConvergentRecord> convergents_direct(const RationalCF& cf, Index count,
                                                 OnDegenerate policy = OnDegenerate::Throw);

/// s_n = a_n s_n-1 + b_n b_n-1 s_n-2, t_n likewise, u_n = b_n u_n-1, and
/// C_n = s_n / (b_0 t_n). All arithmetic stays in the integers.
std::vector<ConvergentRecord> convergents_integer(const RationalCF& cf, Index count,
                                                  OnDegenerate policy = OnDegenerate::Throw);

/// Period-2 fraction [b/a, b/c] repeated, for a, b, c all nonzero. Its value
/// is the larger-modulus root of a t^2 - b t - c when that root is real.
struct PeriodicQuadCF {
  Integer a;
  Integer b;
  Integer c;

  PeriodicQuadCF(Integer a_, Integer b_, Integer c_);

  RationalCF expand() const;
  QuadraticABC quadratic() const { return {a, b, c}; }
  /// sigma = W(0, 1, b, -ac).
  RecurrenceParams sigma_params() const { return {b, -a * c}; }
};

/// C_n = sigma_n+2 / (a sigma_n+1).
Rational quad_cf_convergent(const PeriodicQuadCF& qcf, Index n,
                            Index max_index = kDefaultMaxIndex);

/// Memoized convergents of one PeriodicQuadCF. Sigma values are cached per
/// index; lookups of cached entries only take the shared lock.
class QuadCFConvergents {
 public:
  explicit QuadCFConvergents(PeriodicQuadCF qcf, Index max_index = kDefaultMaxIndex);

  Rational convergent(Index n) const;
  const PeriodicQuadCF& fraction() const { return qcf_; }

 private:
  Integer sigma(Index n) const;

  PeriodicQuadCF qcf_;
  Index max_index_;
  mutable std::shared_mutex mutex_;
  mutable std::map<Index, Integer> sigma_;
};

/// CF index of the n-th iterate of a method started from the convergents:
/// F_n+2 - 1 for secant, (d+1)^n - 1 for Householder-type methods of order d
/// (2^n - 1 Newton, 3^n - 1 Halley).
Integer method_cf_index(const Method& method, Index n);

struct SubsequenceEntry {
  Index cf_index = 0;
  Rational value;
};

/// Convergents at the method's CF indices for n = 0 .. count-1. They coincide
/// with the method's iterates on a t^2 - b t - c started at C0 (and C1, C0 for
/// secant).
std::vector<SubsequenceEntry> method_subsequence(const PeriodicQuadCF& qcf, const Method& method,
                                                 Index count,
                                                 Index max_index = kDefaultMaxIndex);

}  // namespace recurseq
