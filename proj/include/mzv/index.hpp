#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

/// Argument list (k_1,...,k_r) of a multiple zeta value, in the increasing
/// summation convention 0 < m_1 < ... < m_r. All parts are >= 1. The empty
/// index is allowed and acts as the unit of the stuffle algebra; evaluation
/// and duality reject it.
class Index {
 public:
  Index() = default;
  explicit Index(std::vector<int> parts);
  Index(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }
  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int height() const;
  bool empty() const { return parts_.empty(); }
  /// Convergent MZV: nonempty and last part >= 2.
  bool admissible() const { return !parts_.empty() && parts_.back() >= 2; }
  int trailing_ones() const;

  Index appended(int part) const;
  Index without_last() const;

  auto operator<=>(const Index&) const = default;

  /// "(1,2)"; the empty index prints as "()".
  std::string to_string() const;
  /// Accepts "(1,2)", "1,2" and "()". Throws std::invalid_argument.
  static Index parse(std::string_view text);

 private:
  std::vector<int> parts_;
};

struct IndexProfile {
  int weight = 0;
  int depth = 0;
  int height = 0;
  bool admissible = false;
  bool operator==(const IndexProfile&) const = default;
};

IndexProfile profile(const Index& k);

/// Duality involution on admissible indices (word reversal + letter swap,
/// routed through the word module). Throws std::domain_error otherwise.
Index dual(const Index& k);

/// Componentwise sum; depths must match.
Index add_pointwise(const Index& a, const Index& b);

/// All compositions of `weight` with parts >= min_part, restricted to the
/// given depth when present, in lexicographic order. Infeasible constraints
/// give an empty list; weight 0 yields the empty index (unless depth > 0).
std::vector<Index> enumerate_indices(int weight, std::optional<int> depth,
                                     int min_part);

/// Formal rational combination of indices. Zero coefficients are never
/// stored; all arithmetic is exact.
class IndexSum {
 public:
  IndexSum() = default;
  explicit IndexSum(const Index& k) { add(k, 1); }
  IndexSum(const Index& k, const Rational& c) { add(k, c); }

  /// The stuffle unit: the empty index with coefficient 1.
  static IndexSum unit() { return IndexSum(Index{}); }

  void add(const Index& k, const Rational& c);
  IndexSum& operator+=(const IndexSum& o);
  IndexSum& operator-=(const IndexSum& o);
  IndexSum& operator*=(const Rational& c);

  friend IndexSum operator+(IndexSum a, const IndexSum& b) { return a += b; }
  friend IndexSum operator-(IndexSum a, const IndexSum& b) { return a -= b; }
  friend IndexSum operator*(IndexSum a, const Rational& c) { return a *= c; }
  friend IndexSum operator*(const Rational& c, IndexSum a) { return a *= c; }

  bool operator==(const IndexSum&) const = default;

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Index, Rational>& terms() const { return terms_; }

  /// Sum of absolute values of coefficients (term count with multiplicity).
  Rational mass() const;

  /// "(2,3) + (3,2) + (5)", "2·(1,1) + (2)", "0".
  std::string to_string() const;

 private:
  std::map<Index, Rational> terms_;
};

/// Quasi-shuffle (stuffle) product in the increasing summation convention:
/// the last entry of each product term is taken from one factor or is the
/// merged sum of both last entries.
IndexSum stuffle(const Index& a, const Index& b);
IndexSum stuffle(const IndexSum& u, const IndexSum& v);

}  // namespace mzv
