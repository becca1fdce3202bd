#include "tat/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace tat {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto check = [&](const std::string& part) {
    std::size_t i = (part.size() > 1 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) throw std::invalid_argument("bad rational: " + s);
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("bad rational: " + s);
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  check(num);
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(mpz_class(num[0] == '+' ? num.substr(1) : num));
  } else {
    std::string den = s.substr(slash + 1);
    check(den);
    mpz_class d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    q = Rational(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

Rational frac(const Rational& q) { return q - floor_of(q); }

Rational signed_frac(const Rational& q) {
  Rational f = frac(q);
  if (f > Rational(1, 2)) f -= 1;
  return f;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of range");
  return z.get_si();
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t k = r0 / r1;
    std::int64_t t = r0 - k * r1;
    r0 = r1;
    r1 = t;
    t = s0 - k * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::domain_error("not invertible");
  return mod(s0, m);
}

}  // namespace tat
