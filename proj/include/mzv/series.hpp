#pragma once

#include <vector>

#include "mzv/big_real.hpp"
#include "mzv/numerics.hpp"

namespace mzv {

/// Truncated univariate power series over BigReal, coefficients 0..order.
class PowerSeries1 {
 public:
  PowerSeries1(int order, int digits);

  int order() const { return order_; }
  int digits() const { return digits_; }
  const BigReal& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  void set_coeff(int i, BigReal v) { c_[static_cast<size_t>(i)] = std::move(v); }

 private:
  int order_;
  int digits_;
  std::vector<BigReal> c_;
};

/// Truncated bivariate power series, coefficients c(i,j) for i+j <= order.
class PowerSeries2 {
 public:
  PowerSeries2(int order, int digits);

  int order() const { return order_; }
  int digits() const { return digits_; }
  const BigReal& coeff(int i, int j) const;
  void set_coeff(int i, int j, BigReal v);

 private:
  int order_;
  int digits_;
  std::vector<std::vector<BigReal>> c_;  // c_[i][j], i + j <= order_
};

/// Cauchy products truncated at the common order; order mismatch is a
/// domain error.
PowerSeries1 ps_mul(const PowerSeries1& a, const PowerSeries1& b);
PowerSeries2 ps_mul(const PowerSeries2& a, const PowerSeries2& b);

PowerSeries1 ps_add(const PowerSeries1& a, const PowerSeries1& b);
PowerSeries2 ps_add(const PowerSeries2& a, const PowerSeries2& b);

/// exp of a series with vanishing constant term; univariate via the
/// derivative recurrence, bivariate via graded Taylor accumulation.
PowerSeries1 ps_exp(const PowerSeries1& a);
PowerSeries2 ps_exp(const PowerSeries2& a);

/// 1 + sum_{k>=2} T(k) x^k where T(k) sums the MZVs of weight k with every
/// exponent >= 2 (maximal height).
PowerSeries1 build_T_series(Evaluator& ev, int maxweight, int digits);

/// (1 + sum ζ*(2,...,2) x^{2n}) (1 + sum ζ(3,...,3) x^{3n}) truncated.
PowerSeries1 build_rhs_thm3(Evaluator& ev, int maxweight, int digits);

/// exp(sum_{n>=2} ζ(n)(x^n + y^n - (x+y)^n)/n) truncated by total degree;
/// its coefficient at x^r y^k (r,k >= 1) is -ζ(1,...,1,k+1) with r-1 ones.
PowerSeries2 build_gamma_genfunc(Evaluator& ev, int maxdeg, int digits);

}  // namespace mzv
