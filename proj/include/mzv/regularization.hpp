#pragma once

#include <string>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/word.hpp"

namespace mzv {

class BigReal;
class Evaluator;

/// Polynomial in the formal variable T with IndexSum coefficients. Every
/// index appearing in a coefficient is admissible (the empty index stands
/// for the rational constant 1). Trailing zero coefficients are trimmed.
class RegPoly {
 public:
  RegPoly() = default;
  static RegPoly constant(IndexSum c);
  static RegPoly variable_T();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of T^i (zero sum when i exceeds the degree).
  const IndexSum& coeff(int i) const;

  RegPoly& operator+=(const RegPoly& o);
  RegPoly& operator-=(const RegPoly& o);
  RegPoly& operator*=(const Rational& c);
  friend RegPoly operator+(RegPoly a, const RegPoly& b) { return a += b; }
  friend RegPoly operator-(RegPoly a, const RegPoly& b) { return a -= b; }
  friend RegPoly operator*(RegPoly a, const Rational& c) { return a *= c; }
  friend RegPoly operator*(const Rational& c, RegPoly a) { return a *= c; }

  /// Multiplication by T (coefficient shift).
  RegPoly mul_T() const;

  bool operator==(const RegPoly&) const = default;

  /// "ζ(2)·T - 2·ζ(1,2)", "T²/2", "0".
  std::string to_string() const;
  /// JSON text of the form [{"power":i,"terms":[{"index":[...],
  /// "coeff_num":n,"coeff_den":d}]}], powers ascending.
  std::string to_json() const;

 private:
  void trim();
  std::vector<IndexSum> coeffs_;  // coeffs_[i] multiplies T^i
};

/// Shuffle-regularized polynomial Z^⧢ of a word (empty or ending in y):
/// the unique polynomial with admissible coefficients that reproduces the
/// word under T -> y and shuffle expansion. Throws std::domain_error for
/// words ending in x.
RegPoly shuffle_regularize(const Word& w);

/// Stuffle-regularized polynomial Z^* of a nonempty index: same
/// characterization with T -> (1) and the stuffle product.
RegPoly stuffle_regularize(const Index& k);

/// Constant term c_0; for shuffle regularization this is the regularized
/// value ζ^⧢.
IndexSum reg_constant_term(const RegPoly& p);

/// Inverse of shuffle_regularize: substitutes the word y for T (powers via
/// repeated shuffle) and expands. Used to validate regularizations exactly.
WordSum reg_reconstruct_shuffle(const RegPoly& p);

/// Inverse of stuffle_regularize: substitutes the index (1) for T.
IndexSum reg_reconstruct_stuffle(const RegPoly& p);

/// Numeric coefficients of p rewritten in powers of (T - shift); the
/// binomial re-expansion is exact, numerics enter only through the
/// evaluated IndexSum coefficients. Defined with the numerics module.
std::vector<BigReal> rebase(const RegPoly& p, const BigReal& shift,
                            Evaluator& ev, int digits);

}  // namespace mzv
