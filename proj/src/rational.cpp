#include "balt/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "balt/errors.hpp"

namespace balt::num {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt ui_pow(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw UsageError("rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (sgn(den) == 0) throw UsageError("rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw UsageError("rational: empty string");
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(BigInt(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    unsigned frac = static_cast<unsigned>(s.size() - dot - 1);
    if (frac == 0 || digits.empty()) throw UsageError("rational: malformed decimal '" + s + "'");
    return Rational(BigInt(digits), ui_pow(10, frac));
  } catch (const std::invalid_argument&) {
    throw UsageError("rational: cannot parse '" + s + "'");
  }
}

Rational Rational::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0) throw UsageError("rational: 0 to a negative power");
  unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), mag);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), mag);
  return e > 0 ? Rational(n, d) : Rational(d, n);
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw UsageError("rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw UsageError("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_fraction() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned digits) const {
  BigInt n = num();
  const BigInt d = den();
  std::string out;
  if (sgn(n) < 0) {
    out += '-';
    n = -n;
  }
  BigInt ip, rem;
  mpz_tdiv_qr(ip.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  out += ip.get_str();
  if (digits == 0) return out;
  BigInt scaled = rem * ui_pow(10, digits) / d;  // trailing digits, truncated
  std::string frac = scaled.get_str();
  out += '.';
  out.append(digits - frac.size(), '0');
  out += frac;
  return out;
}

}  // namespace balt::num
