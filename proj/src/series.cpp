#include "mzv/series.hpp"

#include <stdexcept>

namespace mzv {

PowerSeries1::PowerSeries1(int order, int digits)
    : order_(order), digits_(digits) {
  if (order < 0) throw std::domain_error("series order must be >= 0");
  c_.assign(static_cast<size_t>(order) + 1, BigReal::from_long(0, digits));
}

PowerSeries2::PowerSeries2(int order, int digits)
    : order_(order), digits_(digits) {
  if (order < 0) throw std::domain_error("series order must be >= 0");
  c_.resize(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order; ++i)
    c_[static_cast<size_t>(i)].assign(static_cast<size_t>(order - i) + 1,
                                      BigReal::from_long(0, digits));
}

const BigReal& PowerSeries2::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_)
    throw std::domain_error("coefficient outside truncation order");
  return c_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

void PowerSeries2::set_coeff(int i, int j, BigReal v) {
  if (i < 0 || j < 0 || i + j > order_)
    throw std::domain_error("coefficient outside truncation order");
  c_[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(v);
}

PowerSeries1 ps_mul(const PowerSeries1& a, const PowerSeries1& b) {
  if (a.order() != b.order())
    throw std::domain_error("ps_mul: truncation order mismatch");
  const int n = a.order();
  const int digits = std::max(a.digits(), b.digits());
  PowerSeries1 out(n, digits);
  for (int i = 0; i <= n; ++i) {
    BigReal acc = BigReal::from_long(0, digits);
    for (int j = 0; j <= i; ++j) acc = acc + a.coeff(j) * b.coeff(i - j);
    out.set_coeff(i, std::move(acc));
  }
  return out;
}

PowerSeries2 ps_mul(const PowerSeries2& a, const PowerSeries2& b) {
  if (a.order() != b.order())
    throw std::domain_error("ps_mul: truncation order mismatch");
  const int n = a.order();
  const int digits = std::max(a.digits(), b.digits());
  PowerSeries2 out(n, digits);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      BigReal acc = BigReal::from_long(0, digits);
      for (int u = 0; u <= i; ++u)
        for (int v = 0; v <= j; ++v)
          acc = acc + a.coeff(u, v) * b.coeff(i - u, j - v);
      out.set_coeff(i, j, std::move(acc));
    }
  return out;
}

PowerSeries1 ps_add(const PowerSeries1& a, const PowerSeries1& b) {
  if (a.order() != b.order())
    throw std::domain_error("ps_add: truncation order mismatch");
  PowerSeries1 out(a.order(), std::max(a.digits(), b.digits()));
  for (int i = 0; i <= a.order(); ++i)
    out.set_coeff(i, a.coeff(i) + b.coeff(i));
  return out;
}

PowerSeries2 ps_add(const PowerSeries2& a, const PowerSeries2& b) {
  if (a.order() != b.order())
    throw std::domain_error("ps_add: truncation order mismatch");
  PowerSeries2 out(a.order(), std::max(a.digits(), b.digits()));
  for (int i = 0; i <= a.order(); ++i)
    for (int j = 0; i + j <= a.order(); ++j)
      out.set_coeff(i, j, a.coeff(i, j) + b.coeff(i, j));
  return out;
}

namespace {

void require_zero_constant(const BigReal& c0) {
  if (!c0.abs_leq(c0.error_bound() + 1e-25))
    throw std::domain_error("ps_exp: nonzero constant term");
}

}  // namespace

PowerSeries1 ps_exp(const PowerSeries1& a) {
  require_zero_constant(a.coeff(0));
  const int n = a.order();
  const int digits = a.digits();
  PowerSeries1 out(n, digits);
  out.set_coeff(0, BigReal::from_long(1, digits));
  // n b_n = sum_{j=1}^{n} j a_j b_{n-j}, from (exp a)' = a' exp a.
  for (int i = 1; i <= n; ++i) {
    BigReal acc = BigReal::from_long(0, digits);
    for (int j = 1; j <= i; ++j)
      acc = acc + a.coeff(j).mul_long(j) * out.coeff(i - j);
    out.set_coeff(i, acc.div_long(i));
  }
  return out;
}

PowerSeries2 ps_exp(const PowerSeries2& a) {
  require_zero_constant(a.coeff(0, 0));
  const int n = a.order();
  const int digits = a.digits();
  PowerSeries2 out(n, digits);
  out.set_coeff(0, 0, BigReal::from_long(1, digits));
  // Graded Taylor accumulation: term_p = a^p / p! has minimum total degree p.
  PowerSeries2 term = out;
  for (int p = 1; p <= n; ++p) {
    term = ps_mul(term, a);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        term.set_coeff(i, j, term.coeff(i, j).div_long(p));
    out = ps_add(out, term);
  }
  return out;
}

PowerSeries1 build_T_series(Evaluator& ev, int maxweight, int digits) {
  if (maxweight < 2) throw std::domain_error("build_T_series: maxweight >= 2");
  PowerSeries1 out(maxweight, digits);
  out.set_coeff(0, BigReal::from_long(1, digits));
  for (int w = 2; w <= maxweight; ++w) {
    BigReal acc = BigReal::from_long(0, digits);
    for (const Index& k : enumerate_indices(w, std::nullopt, 2))
      acc = acc + ev.eval_mzv(k, digits);
    out.set_coeff(w, std::move(acc));
  }
  return out;
}

PowerSeries1 build_rhs_thm3(Evaluator& ev, int maxweight, int digits) {
  if (maxweight < 2) throw std::domain_error("build_rhs_thm3: maxweight >= 2");
  PowerSeries1 twos(maxweight, digits);
  twos.set_coeff(0, BigReal::from_long(1, digits));
  for (int n = 1; 2 * n <= maxweight; ++n) {
    std::vector<int> parts(static_cast<size_t>(n), 2);
    twos.set_coeff(2 * n, ev.eval_star(Index(parts), digits));
  }
  PowerSeries1 threes(maxweight, digits);
  threes.set_coeff(0, BigReal::from_long(1, digits));
  for (int n = 1; 3 * n <= maxweight; ++n) {
    std::vector<int> parts(static_cast<size_t>(n), 3);
    threes.set_coeff(3 * n, ev.eval_mzv(Index(parts), digits));
  }
  return ps_mul(twos, threes);
}

PowerSeries2 build_gamma_genfunc(Evaluator& ev, int maxdeg, int digits) {
  if (maxdeg < 2) throw std::domain_error("build_gamma_genfunc: maxdeg >= 2");
  PowerSeries2 exponent(maxdeg, digits);
  // x^n + y^n - (x+y)^n = -sum_{i=1}^{n-1} C(n,i) x^i y^{n-i}
  for (int n = 2; n <= maxdeg; ++n) {
    BigReal zn = ev.zeta_n(n, digits).div_long(n);
    for (int i = 1; i <= n - 1; ++i) {
      Rational c{-binomial(static_cast<unsigned long>(n),
                           static_cast<unsigned long>(i))};
      exponent.set_coeff(i, n - i,
                         exponent.coeff(i, n - i) +
                             BigReal::from_rational(c, digits) * zn);
    }
  }
  return ps_exp(exponent);
}

}  // namespace mzv
