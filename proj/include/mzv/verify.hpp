#pragma once

#include <string>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/numerics.hpp"

namespace mzv {

/// Outcome of one identity check. Numeric checks carry decimal values and a
/// tolerance; symbolic checks carry rendered expressions with tolerance "0"
/// (pass means exact equality). pass holds iff abs_error <= tolerance for
/// every compared quantity.
struct Report {
  std::string identity;
  std::string params;                 // compact "r=2 k=3" style
  std::vector<std::string> labels;    // one per compared quantity
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::string abs_error;              // max over quantities
  std::string tolerance;
  bool pass = false;
  double millis = 0.0;

  std::string to_text() const;
  std::string to_json() const;        // single JSON object
  static std::string csv_header();
  std::string to_csv_rows() const;    // one row per compared quantity
};

/// 10^-(digits-5): five guard digits absorb aggregation rounding.
double tolerance_for(int digits);

/// The height-one index (1,...,1,k+1) with r-1 leading ones.
Index height_one_index(int r, int k);

/// ζ(1^{r-1},k+1) against the alternating sum over pairs of compositions
/// of k and r at equal depth, evaluated at the componentwise sum.
Report verify_thm1(Evaluator& ev, int r, int k, int digits);

/// Sum of shuffle-regularized values over weight r+k, depth r against
/// (-1)^{r-1} ζ(1^{r-1},k+1).
Report verify_thm2(Evaluator& ev, int r, int k, int digits);

/// Coefficientwise sum formula for the shuffle-regularized polynomials.
Report verify_regpoly_sum(Evaluator& ev, int r, int k, int digits);

/// Coefficients of the maximal-height series against the 2/3-factor product.
Report verify_thm3(Evaluator& ev, int maxweight, int digits);

/// Bivariate generating function coefficients against -ζ(1^{r-1},k+1),
/// plus symmetry of the coefficient matrix.
Report verify_genfunc(Evaluator& ev, int maxdeg, int digits);

/// Exact stuffle-expansion bookkeeping identity: the product sums
/// Σ_b (a+b)*(1^{i+1}) re-organized by count and placement of inserted 1s,
/// plus the alternating collapse over i. Purely symbolic, zero tolerance.
Report verify_stuffle_expansion(const Index& a, int i, int r);

/// Binomial collapse identities behind the alternating sum, for n,l <= nmax.
Report verify_binomial_collapse(int nmax);

/// Stuffle expansion, shuffle expansion (via words) and the product of the
/// two values all agree.
Report verify_double_shuffle(Evaluator& ev, const Index& u, const Index& v,
                             int digits);

/// ζ(k) = ζ(dual k) numerically.
Report verify_duality(Evaluator& ev, const Index& k, int digits);

}  // namespace mzv
