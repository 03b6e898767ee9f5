#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "mzv/rational.hpp"

namespace mzv {

/// Arbitrary-precision real value carrying a conservative power-of-two bound
/// on its absolute error and the decimal precision it was produced for.
/// Arithmetic combines the bounds conservatively (interval-style on the
/// error field only, not full interval arithmetic).
class BigReal {
 public:
  BigReal();
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  /// Working mantissa bits for a decimal-digit request: digits·log2(10)
  /// plus 32 guard bits.
  static int precision_bits(int digits);

  static BigReal from_long(long v, int digits);
  static BigReal from_rational(const Rational& q, int digits);
  /// Parses a decimal string. Throws std::invalid_argument on junk.
  static BigReal from_decimal(std::string_view s, int digits);
  /// Wraps an already-computed mpfr value with an externally derived
  /// absolute error bound (rounded up to a power of two).
  static BigReal from_mpfr(mpfr_srcptr v, double err_bound, int digits);

  int digits() const { return digits_; }
  /// Power-of-two bound on the absolute error (0 for exact values).
  double error_bound() const { return err_; }
  /// "2.8e-31" style rendering of the error bound.
  std::string error_bound_str() const;

  BigReal operator+(const BigReal& o) const;
  BigReal operator-(const BigReal& o) const;
  BigReal operator*(const BigReal& o) const;
  BigReal operator-() const;
  BigReal mul_long(long c) const;
  BigReal div_long(long c) const;
  BigReal abs_value() const;

  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Value comparison |*this| <= bound (the error field plays no part).
  bool abs_leq(double bound) const;

  /// Fixed-point rendering with `places` digits after the decimal point,
  /// trailing zeros (and a bare trailing point) trimmed. This is the cache
  /// and report format.
  std::string to_decimal(int places) const;
  /// Scientific rendering, e.g. "1.234e-26".
  std::string to_scientific(int sig_digits) const;

  mpfr_srcptr raw() const { return v_; }

  /// Round a positive quantity up to a power of two (0 stays 0).
  static double pow2_bound(double x);

 private:
  BigReal(int prec_bits, int digits);
  double ulp() const;

  mpfr_t v_;
  double err_ = 0.0;
  int digits_ = 0;
};

BigReal const_pi(int digits);
BigReal const_gamma(int digits);
BigReal const_log2(int digits);
/// log(m) for integer m >= 1.
BigReal log_of_ulong(unsigned long m, int digits);

}  // namespace mzv
