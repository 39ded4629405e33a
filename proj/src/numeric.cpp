#include "recurseq/numeric.hpp"

#include <cctype>

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

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw InvalidArgument("rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw InvalidArgument("expected an integer, got '" + std::string(text) + "'");
  }
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw InvalidArgument("expected an integer, got '" + std::string(text) + "'");
    }
  }
  // GMP rejects a leading '+'.
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  return Integer(normalized, 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InvalidArgument("denominator must be unsigned in '" + std::string(text) + "'");
  }
  return make_rational(num, parse_integer(den_text));
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_decimal(const Rational& value, unsigned digits) {
  Integer scale = int_pow(10, digits);
  Integer num = abs(value.get_num()) * scale;
  const Integer& den = value.get_den();

  Integer quot;
  Integer rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer twice = 2 * rem;
  if (twice > den || (twice == den && mpz_odd_p(quot.get_mpz_t()))) {
    ++quot;
  }

  std::string body = quot.get_str(10);
  if (digits > 0) {
    if (body.size() <= digits) {
      body.insert(0, digits + 1 - body.size(), '0');
    }
    body.insert(body.size() - digits, 1, '.');
  }
  if (value < 0 && quot != 0) {
    body.insert(0, 1, '-');
  }
  return body;
}

Integer int_pow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational rational_pow(const Integer& base, Index exp) {
  if (exp >= 0) {
    return Rational(int_pow(base, static_cast<unsigned long>(exp)));
  }
  if (base == 0) {
    throw InverseUnavailable("zero raised to a negative power");
  }
  return make_rational(1, int_pow(base, static_cast<unsigned long>(-exp)));
}

void check_index_cap(const Integer& index, Index max_index) {
  if (abs(index) > Integer(static_cast<long>(max_index))) {
    throw ResourceLimit("index " + index.get_str() + " exceeds the cap of " +
                        std::to_string(max_index));
  }
}

void check_index_cap(Index index, Index max_index) {
  if (index > max_index || index < -max_index) {
    throw ResourceLimit("index " + std::to_string(index) + " exceeds the cap of " +
                        std::to_string(max_index));
  }
}

Index to_index(const Integer& index) {
  if (!index.fits_slong_p()) {
    throw ResourceLimit("index " + index.get_str() + " does not fit in 64 bits");
  }
  return index.get_si();
}

}  // namespace recurseq
