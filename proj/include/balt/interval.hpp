#pragma once

#include <string>

#include "balt/rational.hpp"

namespace balt::num {

/// Closed interval with rational endpoints, lo <= hi.
class RatInterval {
 public:
  RatInterval(Rational lo, Rational hi);
  static RatInterval point(const Rational& v) { return RatInterval(v, v); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / Rational(2); }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool entirely_below(const Rational& v) const { return hi_ < v; }
  bool entirely_above(const Rational& v) const { return lo_ > v; }

  RatInterval operator+(const RatInterval& o) const { return {lo_ + o.lo_, hi_ + o.hi_}; }
  RatInterval operator-(const RatInterval& o) const { return {lo_ - o.hi_, hi_ - o.lo_}; }
  RatInterval operator*(const RatInterval& o) const;
  RatInterval scaled(const Rational& c) const;

  /// "lo..hi" as truncated decimals.
  std::string to_decimal(unsigned digits) const;
  /// "lonum/loden..hinum/hiden" exact endpoints.
  std::string to_fraction() const;

 private:
  Rational lo_, hi_;
};

enum class ExpOrder { kLess, kGreater, kUndecidable };

/// Refinement cap for compare_to_exp: doubling the term count stops here.
inline constexpr unsigned kExpTermCap = 1u << 12;

/// Rigorous enclosure of e^x by Taylor partial sums with a Lagrange tail
/// bound, after range reduction x = m + f with m integer and |f| <= 1/2.
/// Total for all rationals; terms >= 1.
RatInterval exp_enclosure(const Rational& x, unsigned terms);

/// Decides p <=> e^(-a) by adaptive refinement of exp_enclosure(-a, *),
/// doubling the term count from 8 up to kExpTermCap. kUndecidable after the
/// cap signals p is (suspiciously) indistinguishable from e^(-a).
ExpOrder compare_to_exp(const Rational& p, const Rational& a);

}  // namespace balt::num
