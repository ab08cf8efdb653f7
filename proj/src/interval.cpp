#include "balt/interval.hpp"

#include <algorithm>

#include "balt/errors.hpp"

namespace balt::num {

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw UsageError("interval: lo > hi");
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  return {std::min({a, b, c, d}), std::max({a, b, c, d})};
}

RatInterval RatInterval::scaled(const Rational& c) const {
  if (c.sign() >= 0) return {lo_ * c, hi_ * c};
  return {hi_ * c, lo_ * c};
}

std::string RatInterval::to_decimal(unsigned digits) const {
  if (lo_ == hi_) return lo_.to_decimal(digits);
  return lo_.to_decimal(digits) + ".." + hi_.to_decimal(digits);
}

std::string RatInterval::to_fraction() const {
  if (lo_ == hi_) return lo_.to_fraction();
  return lo_.to_fraction() + ".." + hi_.to_fraction();
}

namespace {

// Taylor partial sum S = sum_{i<terms} f^i/i! plus tail bound B, valid for
// |f| <= 1/2: |e^f - S| <= 2|f|^terms/terms!.
RatInterval exp_near_zero(const Rational& f, unsigned terms) {
  Rational sum(1);
  Rational term(1);
  for (unsigned i = 1; i < terms; ++i) {
    term = term * f / Rational(static_cast<long>(i));
    sum += term;
  }
  Rational tail = f.abs().pow_int(terms) * Rational(2, 1) / Rational(factorial(terms));
  Rational lo = sum - tail;
  if (lo.sign() < 0) lo = Rational(0);  // e^f > 0
  return {lo, sum + tail};
}

// Enclosure of e itself: S = sum_{i<terms} 1/i!, tail <= (terms+1)/(terms*terms!).
RatInterval e_enclosure(unsigned terms) {
  Rational sum(1);
  Rational term(1);
  for (unsigned i = 1; i < terms; ++i) {
    term = term / Rational(static_cast<long>(i));
    sum += term;
  }
  Rational tail = Rational(static_cast<long>(terms) + 1) /
                  Rational(BigInt(static_cast<long>(terms)) * factorial(terms));
  return {sum, sum + tail};
}

// e^m for integer m from an enclosure of e; endpoints stay positive.
RatInterval exp_integer(long m, unsigned terms) {
  if (m == 0) return RatInterval::point(Rational(1));
  RatInterval e = e_enclosure(terms);
  unsigned long mag = static_cast<unsigned long>(m < 0 ? -m : m);
  Rational lo = e.lo().pow_int(static_cast<long>(mag));
  Rational hi = e.hi().pow_int(static_cast<long>(mag));
  if (m > 0) return {lo, hi};
  return {Rational(1) / hi, Rational(1) / lo};
}

}  // namespace

RatInterval exp_enclosure(const Rational& x, unsigned terms) {
  if (terms < 1) throw UsageError("exp_enclosure: terms must be >= 1");
  // x = m + f, m = floor(x + 1/2), so f in [-1/2, 1/2).
  BigInt m = (x + Rational(1, 2)).floor();
  Rational f = x - Rational(m);
  if (!mpz_fits_slong_p(m.get_mpz_t())) throw GuardError("exp_enclosure: |x| too large");
  RatInterval em = exp_integer(m.get_si(), terms);
  if (f.is_zero()) return em;
  return em * exp_near_zero(f, terms);
}

ExpOrder compare_to_exp(const Rational& p, const Rational& a) {
  const Rational x = -a;
  for (unsigned terms = 8; terms <= kExpTermCap; terms *= 2) {
    RatInterval enc = exp_enclosure(x, terms);
    if (p < enc.lo()) return ExpOrder::kLess;
    if (p > enc.hi()) return ExpOrder::kGreater;
  }
  return ExpOrder::kUndecidable;
}

}  // namespace balt::num
