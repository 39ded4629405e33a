#include "recurseq/contfrac.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <mutex>

#include "recurseq/errors.hpp"

namespace recurseq {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

void require_count(const RationalCF& cf, Index count) {
  if (count < 1) {
    throw InvalidArgument("count must be >= 1");
  }
  if (static_cast<std::size_t>(count) > cf.available()) {
    throw InvalidArgument("continued fraction has only " + std::to_string(cf.available()) +
                          " partial quotients, " + std::to_string(count) + " requested");
  }
}

std::string degenerate_message(Index n) {
  return "convergent C_" + std::to_string(n) + " has a zero denominator";
}

const RecurrenceParams kFibonacci{1, -1};

}  // namespace

RationalCF::RationalCF(std::vector<PartialQuotient> quotients, std::size_t period)
    : quotients_(std::move(quotients)), period_(period) {
  if (quotients_.empty()) {
    throw InvalidArgument("continued fraction needs at least one partial quotient");
  }
  if (period_ > quotients_.size()) {
    throw InvalidArgument("period exceeds the number of partial quotients");
  }
  for (std::size_t i = 0; i < quotients_.size(); ++i) {
    if (quotients_[i].den == 0 || quotients_[i].num == 0) {
      throw InvalidArgument("partial quotient " + std::to_string(i) +
                            " must have nonzero numerator and denominator");
    }
  }
}

RationalCF RationalCF::parse(std::string_view text) {
  std::size_t period = 0;
  auto bar = text.find('|');
  if (bar != std::string_view::npos) {
    std::string_view suffix = trim(text.substr(bar + 1));
    constexpr std::string_view key = "period=";
    if (suffix.rfind(key, 0) != 0) {
      throw InvalidArgument("expected 'period=k' after '|', got '" + std::string(suffix) + "'");
    }
    suffix = trim(suffix.substr(key.size()));
    auto [ptr, ec] = std::from_chars(suffix.data(), suffix.data() + suffix.size(), period);
    if (ec != std::errc() || ptr != suffix.data() + suffix.size() || period == 0) {
      throw InvalidArgument("period must be a positive integer, got '" + std::string(suffix) +
                            "'");
    }
    text = text.substr(0, bar);
  }

  std::vector<PartialQuotient> quotients;
  while (true) {
    auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    if (token.empty()) {
      throw InvalidArgument("empty partial quotient in continued fraction");
    }
    auto slash = token.find('/');
    if (slash == std::string_view::npos) {
      quotients.push_back({parse_integer(token), Integer(1)});
    } else {
      quotients.push_back({parse_integer(token.substr(0, slash)),
                           parse_integer(token.substr(slash + 1))});
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return RationalCF(std::move(quotients), period);
}

const PartialQuotient& RationalCF::quotient(std::size_t i) const {
  if (i < quotients_.size()) {
    return quotients_[i];
  }
  if (period_ == 0) {
    throw InvalidArgument("partial quotient " + std::to_string(i) + " is past the end");
  }
  const std::size_t head = quotients_.size() - period_;
  return quotients_[head + (i - head) % period_];
}

std::size_t RationalCF::available() const {
  return period_ > 0 ? std::numeric_limits<std::size_t>::max() : quotients_.size();
}

std::string RationalCF::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < quotients_.size(); ++i) {
    if (i > 0) out += ", ";
    out += quotients_[i].num.get_str() + "/" + quotients_[i].den.get_str();
  }
  if (period_ > 0) {
    out += " | period=" + std::to_string(period_);
  }
  return out;
}

std::vector<ConvergentRecord> convergents_direct(const RationalCF& cf, Index count,
                                                 OnDegenerate policy) {
  require_count(cf, count);
  std::vector<ConvergentRecord> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Index n = 0; n < count; ++n) {
    const Rational quot = cf.quotient(static_cast<std::size_t>(n)).value();
    ConvergentRecord rec;
    rec.index = n;
    if (n == 0) {
      rec.p = quot;
      rec.q = 1;
    } else if (n == 1) {
      rec.p = out[0].p * quot + 1;
      rec.q = quot;
    } else {
      rec.p = quot * out[n - 1].p + out[n - 2].p;
      rec.q = quot * out[n - 1].q + out[n - 2].q;
    }
    if (rec.q != 0) {
      rec.value = rec.p / rec.q;
    } else if (policy == OnDegenerate::Throw) {
      throw DegenerateConvergent(degenerate_message(n));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ConvergentRecord> convergents_integer(const RationalCF& cf, Index count,
                                                  OnDegenerate policy) {
  require_count(cf, count);
  const Integer& b0 = cf.quotient(0).den;
  std::vector<ConvergentRecord> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Index n = 0; n < count; ++n) {
    const PartialQuotient& pq = cf.quotient(static_cast<std::size_t>(n));
    ConvergentRecord rec;
    rec.index = n;
    if (n == 0) {
      rec.s = pq.num;
      rec.t = 1;
      rec.u = 1;
    } else if (n == 1) {
      const PartialQuotient& first = cf.quotient(0);
      rec.s = first.num * pq.num + first.den * pq.den;
      rec.t = pq.num;
      rec.u = pq.den;
    } else {
      const Integer link = pq.den * cf.quotient(static_cast<std::size_t>(n - 1)).den;
      rec.s = pq.num * out[n - 1].s + link * out[n - 2].s;
      rec.t = pq.num * out[n - 1].t + link * out[n - 2].t;
      rec.u = pq.den * out[n - 1].u;
    }
    if (rec.t != 0) {
      rec.value = make_rational(rec.s, b0 * rec.t);
    } else if (policy == OnDegenerate::Throw) {
      throw DegenerateConvergent(degenerate_message(n));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

PeriodicQuadCF::PeriodicQuadCF(Integer a_, Integer b_, Integer c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a == 0 || b == 0 || c == 0) {
    throw InvalidArgument("periodic quadratic fraction needs a, b, c all nonzero");
  }
}

RationalCF PeriodicQuadCF::expand() const { return RationalCF({{b, a}, {b, c}}, 2); }

Rational quad_cf_convergent(const PeriodicQuadCF& qcf, Index n, Index max_index) {
  if (n < 0) {
    throw InvalidArgument("convergent index must be >= 0");
  }
  check_index_cap(n + 2, max_index);
  auto [u_prev, t_prev] = basis_pair<Integer>(qcf.b, -qcf.a * qcf.c, n + 1);
  if (u_prev == 0) {
    throw DegenerateConvergent(degenerate_message(n));
  }
  Integer u = t_prev + qcf.b * u_prev;
  return make_rational(u, qcf.a * u_prev);
}

QuadCFConvergents::QuadCFConvergents(PeriodicQuadCF qcf, Index max_index)
    : qcf_(std::move(qcf)), max_index_(max_index) {}

Integer QuadCFConvergents::sigma(Index n) const {
  {
    std::shared_lock lock(mutex_);
    auto it = sigma_.find(n);
    if (it != sigma_.end()) {
      return it->second;
    }
  }
  Integer value = basis_forward(qcf_.sigma_params(), n, max_index_).u;
  std::unique_lock lock(mutex_);
  return sigma_.emplace(n, std::move(value)).first->second;
}

Rational QuadCFConvergents::convergent(Index n) const {
  if (n < 0) {
    throw InvalidArgument("convergent index must be >= 0");
  }
  check_index_cap(n + 2, max_index_);
  Integer den = sigma(n + 1);
  if (den == 0) {
    throw DegenerateConvergent(degenerate_message(n));
  }
  return make_rational(sigma(n + 2), qcf_.a * den);
}

Integer method_cf_index(const Method& method, Index n) {
  if (n < 0) {
    throw InvalidArgument("iterate number must be >= 0");
  }
  if (method.kind == MethodKind::Secant) {
    return basis_forward(kFibonacci, n + 2, std::numeric_limits<Index>::max()).u - 1;
  }
  return int_pow(method.branching(), static_cast<unsigned long>(n)) - 1;
}

std::vector<SubsequenceEntry> method_subsequence(const PeriodicQuadCF& qcf, const Method& method,
                                                 Index count, Index max_index) {
  if (count < 1) {
    throw InvalidArgument("count must be >= 1");
  }
  if (qcf.quadratic().discriminant() <= 0) {
    throw NonRealRoots("b^2 + 4ac must be positive for a real larger-modulus root");
  }
  QuadCFConvergents table(qcf, max_index);
  std::vector<SubsequenceEntry> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Index n = 0; n < count; ++n) {
    Integer idx = method_cf_index(method, n);
    check_index_cap(idx + 2, max_index);
    const Index cf_index = to_index(idx);
    out.push_back({cf_index, table.convergent(cf_index)});
  }
  return out;
}

}  // namespace recurseq
