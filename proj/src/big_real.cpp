#include "mzv/big_real.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mzv {

int BigReal::precision_bits(int digits) {
  if (digits < 1) digits = 1;
  return static_cast<int>(std::ceil(digits * 3.321928094887362)) + 32;
}

double BigReal::pow2_bound(double x) {
  if (!(x > 0.0)) return 0.0;
  int e = std::ilogb(x);
  return std::ldexp(1.0, e + 1);
}

BigReal::BigReal() : digits_(1) { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }

BigReal::BigReal(int prec_bits, int digits) : digits_(digits) {
  mpfr_init2(v_, prec_bits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(const BigReal& o) : err_(o.err_), digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept : err_(o.err_), digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    err_ = o.err_;
    digits_ = o.digits_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    err_ = o.err_;
    digits_ = o.digits_;
  }
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

double BigReal::ulp() const {
  if (mpfr_zero_p(v_)) return std::ldexp(1.0, -static_cast<int>(mpfr_get_prec(v_)));
  long e = mpfr_get_exp(v_);
  long p = mpfr_get_prec(v_);
  double shift = static_cast<double>(e - p + 1);
  if (shift < -1020) return std::ldexp(1.0, -1020);
  return std::ldexp(1.0, static_cast<int>(shift));
}

BigReal BigReal::from_long(long v, int digits) {
  BigReal r(precision_bits(digits), digits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  r.err_ = 0.0;
  return r;
}

BigReal BigReal::from_rational(const Rational& q, int digits) {
  BigReal r(precision_bits(digits), digits);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  r.err_ = r.ulp();
  return r;
}

BigReal BigReal::from_decimal(std::string_view s, int digits) {
  BigReal r(precision_bits(digits), digits);
  std::string buf(s);
  if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("bad decimal literal: " + buf);
  r.err_ = r.ulp();
  return r;
}

BigReal BigReal::from_mpfr(mpfr_srcptr v, double err_bound, int digits) {
  BigReal r(static_cast<int>(mpfr_get_prec(v)), digits);
  mpfr_set(r.v_, v, MPFR_RNDN);
  r.err_ = pow2_bound(err_bound);
  return r;
}

namespace {
int result_prec(const BigReal& a, const BigReal& b) {
  return static_cast<int>(
      std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw())));
}
}  // namespace

BigReal BigReal::operator+(const BigReal& o) const {
  BigReal r(result_prec(*this, o), std::max(digits_, o.digits_));
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  r.err_ = pow2_bound(err_ + o.err_ + r.ulp());
  return r;
}

BigReal BigReal::operator-(const BigReal& o) const {
  BigReal r(result_prec(*this, o), std::max(digits_, o.digits_));
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  r.err_ = pow2_bound(err_ + o.err_ + r.ulp());
  return r;
}

BigReal BigReal::operator*(const BigReal& o) const {
  BigReal r(result_prec(*this, o), std::max(digits_, o.digits_));
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  double ma = std::fabs(mpfr_get_d(v_, MPFR_RNDN));
  double mb = std::fabs(mpfr_get_d(o.v_, MPFR_RNDN));
  r.err_ = pow2_bound(ma * o.err_ + mb * err_ + err_ * o.err_ + r.ulp());
  return r;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::mul_long(long c) const {
  BigReal r(*this);
  mpfr_mul_si(r.v_, v_, c, MPFR_RNDN);
  r.err_ = pow2_bound(err_ * std::fabs(static_cast<double>(c)) + r.ulp());
  return r;
}

BigReal BigReal::div_long(long c) const {
  if (c == 0) throw std::domain_error("division by zero");
  BigReal r(*this);
  mpfr_div_si(r.v_, v_, c, MPFR_RNDN);
  r.err_ = pow2_bound(err_ / std::fabs(static_cast<double>(c)) + r.ulp());
  return r;
}

BigReal BigReal::abs_value() const {
  BigReal r(*this);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}

bool BigReal::abs_leq(double bound) const {
  mpfr_t a;
  mpfr_init2(a, mpfr_get_prec(v_));
  mpfr_abs(a, v_, MPFR_RNDN);
  bool ok = mpfr_cmp_d(a, bound) <= 0;
  mpfr_clear(a);
  return ok;
}

std::string BigReal::to_decimal(int places) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", places, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  if (s.find('.') != std::string::npos) {
    size_t last = s.find_last_not_of('0');
    if (s[last] == '.') --last;
    s.erase(last + 1);
  }
  if (s == "-0") s = "0";
  return s;
}

std::string BigReal::error_bound_str() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", err_);
  return buf;
}

std::string BigReal::to_scientific(int sig_digits) const {
  if (sig_digits < 1) sig_digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", sig_digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

namespace {
BigReal make_constant(int digits, int (*fn)(mpfr_ptr, mpfr_rnd_t)) {
  mpfr_t t;
  mpfr_init2(t, BigReal::precision_bits(digits));
  fn(t, MPFR_RNDN);
  long e = mpfr_get_exp(t);
  double ulp = std::ldexp(1.0, static_cast<int>(e - BigReal::precision_bits(digits) + 1));
  BigReal r = BigReal::from_mpfr(t, ulp, digits);
  mpfr_clear(t);
  return r;
}
}  // namespace

BigReal const_pi(int digits) { return make_constant(digits, mpfr_const_pi); }
BigReal const_gamma(int digits) { return make_constant(digits, mpfr_const_euler); }
BigReal const_log2(int digits) { return make_constant(digits, mpfr_const_log2); }

BigReal log_of_ulong(unsigned long m, int digits) {
  if (m < 1) throw std::domain_error("log_of_ulong: m must be >= 1");
  mpfr_t t;
  mpfr_init2(t, BigReal::precision_bits(digits));
  mpfr_set_ui(t, m, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  long e = mpfr_zero_p(t) ? 0 : mpfr_get_exp(t);
  double ulp = std::ldexp(1.0, static_cast<int>(e - BigReal::precision_bits(digits) + 2));
  BigReal r = BigReal::from_mpfr(t, ulp, digits);
  mpfr_clear(t);
  return r;
}

}  // namespace mzv
