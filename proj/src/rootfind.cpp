#include "recurseq/rootfind.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "recurseq/errors.hpp"

namespace recurseq {

namespace {

void require_quadratic(const QuadraticABC& f) {
  if (f.a == 0) {
    throw InvalidArgument("leading coefficient a must be nonzero");
  }
}

Rational step_div(const Rational& num, const Rational& den, const char* what) {
  if (den == 0) {
    throw DegenerateStep(what);
  }
  return num / den;
}

Rational householder_step_poly(const Polynomial& f, const Rational& y, unsigned d) {
  if (d < 1) {
    throw InvalidArgument("Householder order must be >= 1");
  }
  Polynomial lower = householder_polynomial(f, d - 1);
  Polynomial upper = householder_polynomial(f, d);
  Rational den = upper(y);
  if (den == 0) {
    throw DegenerateStep("Householder denominator P_d(y) vanishes");
  }
  return y + Rational(d) * lower(y) * f(y) / den;
}

}  // namespace

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::from(const QuadraticABC& f) {
  return Polynomial({-f.c, -f.b, f.a});
}

Polynomial Polynomial::from(const QuadraticPQ& f) {
  return Polynomial({f.q, -f.p, Integer(1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Integer> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  }
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<Integer> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) out[i] += lhs.coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
  return lhs + Integer(-1) * rhs;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) {
    return {};
  }
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Integer& scalar, const Polynomial& rhs) {
  std::vector<Integer> out = rhs.coeffs_;
  for (auto& c : out) c *= scalar;
  return Polynomial(std::move(out));
}

Polynomial householder_polynomial(const Polynomial& f, unsigned d) {
  const Polynomial df = f.derivative();
  Polynomial current({Integer(1)});
  for (unsigned k = 1; k <= d; ++k) {
    current = current.derivative() * f - Integer(k) * (current * df);
  }
  return current;
}

Rational secant_step(const QuadraticABC& f, const Rational& x_prev, const Rational& x_prev2) {
  require_quadratic(f);
  return step_div(f.a * x_prev * x_prev2 + f.c, f.a * x_prev + f.a * x_prev2 - f.b,
                  "secant denominator a x_n-1 + a x_n-2 - b vanishes");
}

Rational newton_step(const QuadraticABC& f, const Rational& y) {
  require_quadratic(f);
  return step_div(f.a * y * y + f.c, 2 * f.a * y - f.b,
                  "Newton denominator 2ay - b vanishes (critical point)");
}

Rational halley_step(const QuadraticPQ& f, const Rational& y) {
  Rational value = y * y - f.p * y + f.q;
  return y + step_div(value * (f.p - 2 * y), 3 * y * y - 3 * f.p * y + f.p * f.p - f.q,
                      "Halley denominator 3y^2 - 3py + p^2 - q vanishes");
}

Rational halley_step(const QuadraticABC& f, const Rational& y) {
  require_quadratic(f);
  // y - f f' / (f'^2 - a f), using f'' = 2a.
  Rational value = f.a * y * y - f.b * y - f.c;
  Rational slope = 2 * f.a * y - f.b;
  return y - step_div(value * slope, slope * slope - f.a * value,
                      "Halley denominator f'^2 - a f vanishes");
}

Rational householder_step(const QuadraticPQ& f, const Rational& y, unsigned d) {
  return householder_step_poly(Polynomial::from(f), y, d);
}

Rational householder_step(const QuadraticABC& f, const Rational& y, unsigned d) {
  require_quadratic(f);
  return householder_step_poly(Polynomial::from(f), y, d);
}

Index newton_index(Index k) { return householder_index(k, 1); }

Index halley_index(Index k) { return householder_index(k, 2); }

Index householder_index(Index k, unsigned d) {
  if (k < 2) {
    throw InvalidArgument("index maps need k >= 2, got " + std::to_string(k));
  }
  if (d < 1) {
    throw InvalidArgument("Householder order must be >= 1");
  }
  return static_cast<Index>(d + 1) * k - static_cast<Index>(d);
}

std::vector<Index> secant_index_sequence(Index count) {
  if (count < 1) {
    throw InvalidArgument("count must be >= 1");
  }
  std::vector<Index> out;
  for (Index n = 0; n < count; ++n) {
    if (n < 2) {
      out.push_back(n + 2);
    } else {
      out.push_back(out[n - 1] + out[n - 2] - 1);
    }
  }
  return out;
}

unsigned Method::branching() const {
  switch (kind) {
    case MethodKind::Secant:
      return 0;
    case MethodKind::Newton:
      return 2;
    case MethodKind::Halley:
      return 3;
    case MethodKind::Householder:
      return order + 1;
  }
  return 0;
}

std::string Method::name() const {
  switch (kind) {
    case MethodKind::Secant:
      return "secant";
    case MethodKind::Newton:
      return "newton";
    case MethodKind::Halley:
      return "halley";
    case MethodKind::Householder:
      return "householder:" + std::to_string(order);
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "secant") return Method::secant();
  if (lower == "newton") return Method::newton();
  if (lower == "halley") return Method::halley();

  constexpr std::string_view prefix = "householder";
  if (lower.rfind(prefix, 0) == 0) {
    std::string_view rest = std::string_view(lower).substr(prefix.size());
    if (!rest.empty() && (rest.front() == ':' || rest.front() == '(')) {
      bool paren = rest.front() == '(';
      rest.remove_prefix(1);
      if (paren) {
        if (rest.empty() || rest.back() != ')') {
          throw InvalidArgument("unterminated Householder order in '" + std::string(text) + "'");
        }
        rest.remove_suffix(1);
      }
      unsigned order = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), order);
      if (ec == std::errc() && ptr == rest.data() + rest.size() && order >= 1) {
        return Method::householder(order);
      }
    }
  }
  throw InvalidArgument("unknown method '" + std::string(text) +
                        "' (expected secant, newton, halley or householder:D)");
}

std::vector<Rational> iterate_chain(const QuadraticABC& f, const Method& method,
                                    const std::vector<Rational>& seeds, Index count) {
  require_quadratic(f);
  const std::size_t needed = method.kind == MethodKind::Secant ? 2 : 1;
  if (seeds.size() < needed) {
    throw InvalidArgument(method.name() + " needs " + std::to_string(needed) + " seed(s)");
  }
  std::vector<Rational> out;
  for (Index n = 0; n < count; ++n) {
    if (static_cast<std::size_t>(n) < needed) {
      out.push_back(seeds[n]);
      continue;
    }
    const Rational& last = out.back();
    switch (method.kind) {
      case MethodKind::Secant:
        out.push_back(secant_step(f, last, out[out.size() - 2]));
        break;
      case MethodKind::Newton:
        out.push_back(newton_step(f, last));
        break;
      case MethodKind::Halley:
        out.push_back(halley_step(f, last));
        break;
      case MethodKind::Householder:
        out.push_back(householder_step(f, last, method.order));
        break;
    }
  }
  return out;
}

RootApproximation approximate_root(const QuadraticABC& f, const Method& method, unsigned digits,
                                   unsigned max_iterations) {
  require_quadratic(f);
  if (f.discriminant() <= 0) {
    throw NonRealRoots("b^2 + 4ac = " + f.discriminant().get_str() +
                       " leaves no pair of distinct real roots");
  }

  RootApproximation out;
  std::vector<Rational> seeds;
  if (f.b != 0) {
    const Rational c0 = make_rational(f.b, f.a);
    seeds = {c0, c0 + make_rational(f.c, f.b)};
    out.seed = SeedKind::Convergent;
  } else {
    const Rational bound = 1 + abs(make_rational(f.c, f.a));
    seeds = {bound, bound + 1};
    out.seed = SeedKind::UpperBound;
  }

  const Rational tolerance = make_rational(1, int_pow(10, digits));
  const bool secant = method.kind == MethodKind::Secant;
  out.iterates.push_back(seeds[0]);
  if (secant) {
    out.iterates.push_back(seeds[1]);
  }

  for (unsigned step = 0; step < max_iterations; ++step) {
    const Rational& last = out.iterates.back();
    Rational next;
    switch (method.kind) {
      case MethodKind::Secant:
        next = secant_step(f, last, out.iterates[out.iterates.size() - 2]);
        break;
      case MethodKind::Newton:
        next = newton_step(f, last);
        break;
      case MethodKind::Halley:
        next = halley_step(f, last);
        break;
      case MethodKind::Householder:
        next = householder_step(f, last, method.order);
        break;
    }
    const bool close = abs(next - last) < tolerance;
    std::string rounded = to_decimal(next, digits);
    const bool agree = close && rounded == to_decimal(last, digits);
    out.iterates.push_back(std::move(next));
    if (agree) {
      out.value = out.iterates.back();
      out.decimal = std::move(rounded);
      return out;
    }
  }
  throw NoProgress(method.name() + " did not settle to " + std::to_string(digits) +
                   " digits within " + std::to_string(max_iterations) + " iterations");
}

}  // namespace recurseq
