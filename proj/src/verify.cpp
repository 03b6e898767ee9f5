#include "mzv/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mzv/regularization.hpp"
#include "mzv/series.hpp"
#include "mzv/word.hpp"

namespace mzv {

double tolerance_for(int digits) { return std::pow(10.0, -(digits - 5)); }

Index height_one_index(int r, int k) {
  std::vector<int> parts(static_cast<size_t>(r), 1);
  parts.back() = k + 1;
  return Index(std::move(parts));
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << identity;
  if (!params.empty()) os << " " << params;
  os << ": " << (pass ? "PASS" : "FAIL") << "  |max err| = " << abs_error
     << " (tol " << tolerance << ", " << labels.size() << " checks, "
     << millis << " ms)";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["identity"] = identity;
  j["params"] = params;
  j["labels"] = labels;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["abs_error"] = abs_error;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  j["millis"] = millis;
  return j.dump();
}

std::string Report::csv_header() {
  return "identity,params,label,lhs,rhs,abs_error,tolerance,pass";
}

namespace {
std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}
}  // namespace

std::string Report::to_csv_rows() const {
  std::ostringstream os;
  for (size_t i = 0; i < labels.size(); ++i) {
    os << csv_quote(identity) << ',' << csv_quote(params) << ','
       << csv_quote(labels[i]) << ',' << csv_quote(lhs[i]) << ','
       << csv_quote(rhs[i]) << ',' << abs_error << ',' << tolerance << ','
       << (pass ? "true" : "false") << '\n';
  }
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Comparison {
  std::string label;
  BigReal lhs;
  BigReal rhs;
};

Report numeric_report(std::string identity, std::string params,
                      const std::vector<Comparison>& comps, int digits,
                      Clock::time_point t0) {
  Report rep;
  rep.identity = std::move(identity);
  rep.params = std::move(params);
  double tol = tolerance_for(digits);
  BigReal max_err = BigReal::from_long(0, digits);
  bool pass = true;
  for (const auto& c : comps) {
    BigReal diff = (c.lhs - c.rhs).abs_value();
    if (!diff.abs_leq(tol)) pass = false;
    if (!diff.abs_leq(std::fabs(max_err.to_double()))) max_err = diff;
    rep.labels.push_back(c.label);
    rep.lhs.push_back(c.lhs.to_decimal(digits));
    rep.rhs.push_back(c.rhs.to_decimal(digits));
  }
  rep.abs_error = max_err.is_zero() ? "0" : max_err.to_scientific(3);
  std::ostringstream ts;
  ts << tol;
  rep.tolerance = ts.str();
  rep.pass = pass;
  rep.millis = ms_since(t0);
  return rep;
}

struct SymbolicComparison {
  std::string label;
  std::string lhs;
  std::string rhs;
  bool equal;
};

Report symbolic_report(std::string identity, std::string params,
                       const std::vector<SymbolicComparison>& comps,
                       Clock::time_point t0) {
  Report rep;
  rep.identity = std::move(identity);
  rep.params = std::move(params);
  bool pass = true;
  for (const auto& c : comps) {
    rep.labels.push_back(c.label);
    rep.lhs.push_back(c.lhs);
    rep.rhs.push_back(c.rhs);
    if (!c.equal) pass = false;
  }
  rep.abs_error = pass ? "0" : "1";
  rep.tolerance = "0";
  rep.pass = pass;
  rep.millis = ms_since(t0);
  return rep;
}

}  // namespace

Report verify_thm1(Evaluator& ev, int r, int k, int digits) {
  if (r < 1 || k < 1) throw std::domain_error("verify_thm1: r,k >= 1");
  auto t0 = Clock::now();
  BigReal lhs = ev.eval_mzv(height_one_index(r, k), digits);
  BigReal rhs = BigReal::from_long(0, digits);
  for (int j = 1; j <= std::min(r, k); ++j) {
    const bool negative = (j % 2 == 0);  // sign (-1)^{j-1}
    for (const Index& a : enumerate_indices(k, j, 1))
      for (const Index& b : enumerate_indices(r, j, 1)) {
        BigReal v = ev.eval_mzv(add_pointwise(a, b), digits);
        rhs = negative ? rhs - v : rhs + v;
      }
  }
  std::ostringstream p;
  p << "r=" << r << " k=" << k;
  return numeric_report("thm1", p.str(),
                        {{height_one_index(r, k).to_string(), lhs, rhs}},
                        digits, t0);
}

Report verify_thm2(Evaluator& ev, int r, int k, int digits) {
  if (r < 1 || k < 1) throw std::domain_error("verify_thm2: r,k >= 1");
  auto t0 = Clock::now();
  BigReal lhs = BigReal::from_long(0, digits);
  for (const Index& idx : enumerate_indices(r + k, r, 1)) {
    IndexSum c0 = reg_constant_term(shuffle_regularize(index_to_word(idx)));
    lhs = lhs + ev.eval_index_sum(c0, digits);
  }
  BigReal rhs = ev.eval_mzv(height_one_index(r, k), digits);
  if (r % 2 == 0) rhs = -rhs;  // sign (-1)^{r-1}
  std::ostringstream p;
  p << "r=" << r << " k=" << k;
  return numeric_report("thm2", p.str(), {{"regularized sum", lhs, rhs}},
                        digits, t0);
}

Report verify_regpoly_sum(Evaluator& ev, int r, int k, int digits) {
  if (r < 1 || k < 1) throw std::domain_error("verify_regpoly_sum: r,k >= 1");
  auto t0 = Clock::now();
  RegPoly total;
  for (const Index& idx : enumerate_indices(r + k, r, 1))
    total += shuffle_regularize(index_to_word(idx));

  std::vector<Comparison> comps;
  int maxdeg = std::max(total.degree(), r - 1);
  Rational inv_fact{1};
  for (int i = 0; i <= maxdeg; ++i) {
    if (i > 0) inv_fact /= i;
    BigReal lhs = ev.eval_index_sum(total.coeff(i), digits);
    BigReal rhs = BigReal::from_long(0, digits);
    if (i <= r - 1) {
      rhs = ev.eval_mzv(height_one_index(r - i, k), digits) *
            BigReal::from_rational(inv_fact, digits);
      if ((r - 1 - i) % 2 == 1) rhs = -rhs;  // sign (-1)^{r-1-i}
    }
    comps.push_back({"T^" + std::to_string(i), std::move(lhs), std::move(rhs)});
  }
  std::ostringstream p;
  p << "r=" << r << " k=" << k;
  return numeric_report("regpoly-sum", p.str(), comps, digits, t0);
}

Report verify_thm3(Evaluator& ev, int maxweight, int digits) {
  if (maxweight < 2) throw std::domain_error("verify_thm3: maxweight >= 2");
  auto t0 = Clock::now();
  PowerSeries1 lhs = build_T_series(ev, maxweight, digits);
  PowerSeries1 rhs = build_rhs_thm3(ev, maxweight, digits);
  std::vector<Comparison> comps;
  for (int w = 2; w <= maxweight; ++w)
    comps.push_back(
        {"x^" + std::to_string(w), lhs.coeff(w), rhs.coeff(w)});
  std::ostringstream p;
  p << "maxweight=" << maxweight;
  return numeric_report("thm3", p.str(), comps, digits, t0);
}

Report verify_genfunc(Evaluator& ev, int maxdeg, int digits) {
  if (maxdeg < 2) throw std::domain_error("verify_genfunc: maxdeg >= 2");
  auto t0 = Clock::now();
  PowerSeries2 gf = build_gamma_genfunc(ev, maxdeg, digits);
  std::vector<Comparison> comps;
  for (int d = 2; d <= maxdeg; ++d)
    for (int r = 1; r <= d - 1; ++r) {
      int k = d - r;
      std::string label =
          "c[" + std::to_string(r) + "," + std::to_string(k) + "]";
      comps.push_back(
          {label, gf.coeff(r, k), -ev.eval_mzv(height_one_index(r, k), digits)});
    }
  // Symmetry of the matrix reflects the duality.
  for (int d = 2; d <= maxdeg; ++d)
    for (int r = 1; 2 * r < d; ++r) {
      int k = d - r;
      std::string label = "c[" + std::to_string(r) + "," + std::to_string(k) +
                          "] vs c[" + std::to_string(k) + "," +
                          std::to_string(r) + "]";
      comps.push_back({label, gf.coeff(r, k), gf.coeff(k, r)});
    }
  std::ostringstream p;
  p << "maxdeg=" << maxdeg;
  return numeric_report("genfunc", p.str(), comps, digits, t0);
}

namespace {

// Sum over b of weight r-l, depth j, height n, and over all placements of
// exactly l ones among the j+l final positions, of the index obtained by
// interleaving the ones with a+b.
IndexSum stuffle_expansion_S(const Index& a, int l, int n, int r) {
  const int j = a.depth();
  IndexSum out;
  if (r - l < j || l < 0 || n < 0 || n > j) return out;

  std::vector<std::vector<int>> masks;  // positions of the ones
  std::vector<int> chosen;
  auto gen = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      masks.push_back(chosen);
      return;
    }
    for (int p = next; p <= j + l - remaining; ++p) {
      chosen.push_back(p);
      self(self, p + 1, remaining - 1);
      chosen.pop_back();
    }
  };
  gen(gen, 0, l);

  for (const Index& b : enumerate_indices(r - l, j, 1)) {
    if (b.height() != n) continue;
    Index ab = add_pointwise(a, b);
    for (const auto& ones_at : masks) {
      std::vector<int> parts;
      parts.reserve(static_cast<size_t>(j + l));
      size_t next_one = 0;
      int next_ab = 0;
      for (int pos = 0; pos < j + l; ++pos) {
        if (next_one < ones_at.size() && ones_at[next_one] == pos) {
          parts.push_back(1);
          ++next_one;
        } else {
          parts.push_back(ab.part(next_ab++));
        }
      }
      out.add(Index(std::move(parts)), 1);
    }
  }
  return out;
}

IndexSum stuffle_expansion_lhs(const Index& a, int i, int r) {
  const int j = a.depth();
  std::vector<int> ones(static_cast<size_t>(i) + 1, 1);
  const IndexSum ones_sum{Index(ones)};
  IndexSum out;
  for (const Index& b : enumerate_indices(r - i - 1, j, 1))
    out += stuffle(IndexSum(add_pointwise(a, b)), ones_sum);
  return out;
}

IndexSum stuffle_expansion_rhs(const Index& a, int i, int r) {
  const int j = a.depth();
  IndexSum out;
  for (int l = std::max(0, i + 1 - j); l <= i + 1; ++l)
    for (int n = i + 1 - l; n <= j; ++n) {
      Rational c{binomial(static_cast<unsigned long>(n),
                          static_cast<unsigned long>(i + 1 - l))};
      if (c == 0) continue;
      out += c * stuffle_expansion_S(a, l, n, r);
    }
  return out;
}

}  // namespace

Report verify_stuffle_expansion(const Index& a, int i, int r) {
  const int j = a.depth();
  if (j < 1) throw std::domain_error("verify_stuffle_expansion: depth(a) >= 1");
  if (i < 0 || i > r - j - 1)
    throw std::domain_error(
        "verify_stuffle_expansion: need 0 <= i <= r - depth(a) - 1");
  auto t0 = Clock::now();

  std::vector<SymbolicComparison> comps;
  IndexSum lhs_i = stuffle_expansion_lhs(a, i, r);
  IndexSum rhs_i = stuffle_expansion_rhs(a, i, r);
  comps.push_back({"expansion i=" + std::to_string(i), lhs_i.to_string(),
                   rhs_i.to_string(), lhs_i == rhs_i});

  // Alternating sum over all i collapses to the height-split terms.
  IndexSum lhs_c;
  for (int ii = 0; ii <= r - j - 1; ++ii) {
    IndexSum t = stuffle_expansion_lhs(a, ii, r);
    if (ii % 2 == 1) t *= Rational(-1);
    lhs_c += t;
  }
  IndexSum rhs_c;
  for (int n = 1; n <= j; ++n) rhs_c += stuffle_expansion_S(a, 0, n, r);
  IndexSum end_term = stuffle_expansion_S(a, r - j, 0, r);
  if ((r - j - 1) % 2 == 1) end_term *= Rational(-1);
  rhs_c += end_term;
  comps.push_back({"alternating collapse", lhs_c.to_string(), rhs_c.to_string(),
                   lhs_c == rhs_c});

  std::ostringstream p;
  p << "a=" << a.to_string() << " i=" << i << " r=" << r;
  return symbolic_report("stuffle-expansion", p.str(), comps, t0);
}

Report verify_binomial_collapse(int nmax) {
  auto t0 = Clock::now();
  std::vector<SymbolicComparison> comps;
  for (int n = 1; n <= nmax; ++n) {
    // sum_{i=0}^{n-1} (-1)^i C(n,i+1) = 1
    Integer s0 = 0;
    for (int i = 0; i <= n - 1; ++i) {
      Integer t = binomial(static_cast<unsigned long>(n),
                           static_cast<unsigned long>(i + 1));
      s0 += (i % 2 == 0) ? t : -t;
    }
    comps.push_back({"l=0 n=" + std::to_string(n), s0.get_str(), "1", s0 == 1});
    for (int l = 1; l <= nmax; ++l) {
      // sum_{i=l-1}^{n+l-1} (-1)^i C(n,i+1-l) = 0
      Integer s = 0;
      for (int i = l - 1; i <= n + l - 1; ++i) {
        Integer t = binomial(static_cast<unsigned long>(n),
                             static_cast<unsigned long>(i + 1 - l));
        s += (i % 2 == 0) ? t : -t;
      }
      comps.push_back({"l=" + std::to_string(l) + " n=" + std::to_string(n),
                       s.get_str(), "0", s == 0});
    }
  }
  return symbolic_report("binomial-collapse", "nmax=" + std::to_string(nmax),
                         comps, t0);
}

Report verify_double_shuffle(Evaluator& ev, const Index& u, const Index& v,
                             int digits) {
  if (!u.empty() && !u.admissible())
    throw std::domain_error("verify_double_shuffle: non-admissible " +
                            u.to_string());
  if (!v.empty() && !v.admissible())
    throw std::domain_error("verify_double_shuffle: non-admissible " +
                            v.to_string());
  auto t0 = Clock::now();

  BigReal st_val = ev.eval_index_sum(stuffle(IndexSum(u), IndexSum(v)), digits);
  Word wu = u.empty() ? Word{} : index_to_word(u);
  Word wv = v.empty() ? Word{} : index_to_word(v);
  BigReal sh_val =
      ev.eval_index_sum(shuffle(wu, wv).to_index_sum(), digits);
  BigReal pu = u.empty() ? BigReal::from_long(1, digits) : ev.eval_mzv(u, digits);
  BigReal pv = v.empty() ? BigReal::from_long(1, digits) : ev.eval_mzv(v, digits);
  BigReal prod = pu * pv;

  std::ostringstream p;
  p << "u=" << u.to_string() << " v=" << v.to_string();
  return numeric_report("double-shuffle", p.str(),
                        {{"stuffle vs shuffle", st_val, sh_val},
                         {"stuffle vs product", st_val, prod}},
                        digits, t0);
}

Report verify_duality(Evaluator& ev, const Index& k, int digits) {
  auto t0 = Clock::now();
  Index d = dual(k);
  BigReal lhs = ev.eval_mzv(k, digits);
  BigReal rhs = ev.eval_mzv(d, digits);
  return numeric_report("duality", "k=" + k.to_string(),
                        {{k.to_string() + " vs " + d.to_string(), lhs, rhs}},
                        digits, t0);
}

}  // namespace mzv
