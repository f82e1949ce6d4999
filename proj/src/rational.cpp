#include "ffp/rational.hpp"

#include <cctype>

namespace ffp {

Rational rational_pow(const Rational& q, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer falling_factorial(long d, unsigned long k) {
  Integer out = 1;
  for (unsigned long i = 0; i < k; ++i) out *= Integer(d - static_cast<long>(i));
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

bool rational_sqrt(const Rational& q, Rational* root) {
  if (sgn(q) < 0) return false;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(q.get_den_mpz_t()) == 0) return false;
  Rational r;
  mpz_sqrt(r.get_num_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(r.get_den_mpz_t(), q.get_den_mpz_t());
  r.canonicalize();
  if (root) *root = r;
  return true;
}

Rational rational_sqrt_upper(const Rational& q) {
  if (sgn(q) < 0) throw ArgumentError("rational_sqrt_upper: negative input");
  Rational exact;
  if (rational_sqrt(q, &exact)) return exact;
  // ceil(sqrt(q * 4^k)) / 2^k >= sqrt(q), within 2^-k relative.
  constexpr unsigned long k = 48;
  Integer scaled_num = q.get_num() << (2 * k);
  Integer num_floor, rem;
  mpz_sqrtrem(num_floor.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t());
  if (rem != 0) num_floor += 1;
  Integer den_floor;
  mpz_sqrt(den_floor.get_mpz_t(), q.get_den_mpz_t());  // floor keeps the bound upper
  Rational out(num_floor, den_floor << k);
  out.canonicalize();
  return out;
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw ArgumentError("not a rational literal: \"" + text + "\"");
  };
  std::string s = text;
  // trim
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return fail();
  s = s.substr(b, e - b + 1);

  auto is_int = [](const std::string& t) {
    size_t i = (t.size() > 0 && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };

  size_t slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return fail();
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) return fail();
    if (q.get_den() == 0) throw ArgumentError("zero denominator: \"" + text + "\"");
    q.canonicalize();
    return q;
  }

  size_t dot = s.find('.');
  if (dot == std::string::npos) {
    if (!is_int(s)) return fail();
    return Rational(Integer(s));
  }
  // decimal literal: sign, integer part, fractional part
  std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
  bool neg = false;
  if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
    neg = head[0] == '-';
    head = head.substr(1);
  }
  if (head.empty() && tail.empty()) return fail();
  for (char c : head + tail)
    if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
  Integer scaled(head.empty() && tail.empty() ? "0" : (head + tail).c_str(), 10);
  Integer den = 1;
  for (size_t i = 0; i < tail.size(); ++i) den *= 10;
  Rational q(scaled, den);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace ffp
