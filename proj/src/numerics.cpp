#include "mzv/numerics.hpp"

#include <cmath>
#include <stdexcept>

#include "mzv/regularization.hpp"

namespace mzv {

namespace {

// Scoped array of mpfr values sharing one precision.
class MpfrVec {
 public:
  MpfrVec(int count, int prec) : v_(static_cast<size_t>(count)) {
    for (auto& x : v_) {
      mpfr_init2(&x, prec);
      mpfr_set_zero(&x, 1);
    }
  }
  ~MpfrVec() {
    for (auto& x : v_) mpfr_clear(&x);
  }
  MpfrVec(const MpfrVec&) = delete;
  MpfrVec& operator=(const MpfrVec&) = delete;
  mpfr_ptr operator[](size_t i) { return &v_[i]; }

 private:
  std::vector<__mpfr_struct> v_;
};

}  // namespace

BigReal li_at_half(const Word& w, int digits) {
  if (w.empty()) return BigReal::from_long(1, digits);
  if (!w.is_y(w.length() - 1))
    throw std::domain_error("li_at_half: word must end in y: " + w.to_string());

  const Index k = word_to_index(w);
  const int r = k.depth();
  const int prec = BigReal::precision_bits(digits);
  const double target2 = digits * 3.321928094887362 + 16.0;

  // Truncation: the tail after N terms is below 4·2^{-N}(1+ln 2N)^{r-1}/(r-1)!
  // since the inner partial sums are bounded by H_m^{r-1}/(r-1)!.
  auto tail_log2 = [&](int n) {
    return 2.0 - n + (r - 1) * std::log2(1.0 + std::log(2.0 * n)) -
           std::lgamma(r) / std::log(2.0);
  };
  int N = static_cast<int>(target2) + 24 + 4 * r;
  while (tail_log2(N) > -(target2 + 4.0)) N += 16;

  MpfrVec t(r + 1, prec);
  mpfr_set_ui(t[0], 1, MPFR_RNDN);
  mpfr_t zpow, tmp;
  mpfr_init2(zpow, prec);
  mpfr_init2(tmp, prec);
  mpfr_set_ui(zpow, 1, MPFR_RNDN);

  long ops = 0;
  for (int m = 1; m <= N; ++m) {
    mpfr_div_2ui(zpow, zpow, 1, MPFR_RNDN);  // exact: zpow = 2^{-m}
    for (int j = r; j >= 1; --j) {
      mpfr_set(tmp, t[static_cast<size_t>(j - 1)], MPFR_RNDN);
      for (int e = 0; e < k.part(j - 1); ++e)
        mpfr_div_ui(tmp, tmp, static_cast<unsigned long>(m), MPFR_RNDN);
      if (j == r) mpfr_mul(tmp, tmp, zpow, MPFR_RNDN);
      mpfr_add(t[static_cast<size_t>(j)], t[static_cast<size_t>(j)], tmp,
               MPFR_RNDN);
      ops += k.part(j - 1) + 2;
    }
  }

  // Partial sums stay below N+1, so every rounding is below 2^{10-prec}.
  double round_err =
      static_cast<double>(ops + 16) * std::ldexp(1.0, 10 - prec);
  double tail_err = std::exp2(tail_log2(N));
  BigReal result =
      BigReal::from_mpfr(t[static_cast<size_t>(r)], round_err + tail_err, digits);
  mpfr_clear(zpow);
  mpfr_clear(tmp);
  return result;
}

std::vector<std::pair<Word, Word>> holder_splittings(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  out.reserve(static_cast<size_t>(w.length()) + 1);
  for (int i = 0; i <= w.length(); ++i)
    out.emplace_back(w.prefix(i), w.suffix_from(i));
  return out;
}

std::vector<Index> star_expansion(const Index& k) {
  if (!k.admissible())
    throw std::domain_error("star_expansion: non-admissible index " +
                            k.to_string());
  const int r = k.depth();
  std::vector<Index> out;
  out.reserve(1u << (r - 1));
  for (unsigned long mask = 0; mask < (1ul << (r - 1)); ++mask) {
    std::vector<int> parts;
    int cur = k.part(0);
    for (int i = 1; i < r; ++i) {
      if (mask & (1ul << (i - 1))) {
        cur += k.part(i);  // merge: equal summation indices add exponents
      } else {
        parts.push_back(cur);
        cur = k.part(i);
      }
    }
    parts.push_back(cur);
    out.emplace_back(std::move(parts));
  }
  return out;
}

Evaluator::Evaluator() : owned_(std::make_unique<MZVCache>()), cache_(owned_.get()) {}

Evaluator::Evaluator(MZVCache* external) : cache_(external) {
  if (!external) {
    owned_ = std::make_unique<MZVCache>();
    cache_ = owned_.get();
  }
}

BigReal Evaluator::eval_mzv(const Index& k, int digits) {
  if (!k.admissible())
    throw std::domain_error("eval_mzv: non-admissible index " + k.to_string() +
                            "; use regularize");
  if (auto hit = cache_->lookup(k, digits)) {
    BigReal v = BigReal::from_decimal(hit->value, digits);
    double e = std::pow(10.0, -hit->digits) + v.error_bound();
    return BigReal::from_mpfr(v.raw(), e, digits);
  }
  const Word w = index_to_word(k);
  BigReal sum = BigReal::from_long(0, digits);
  for (const auto& [u, v] : holder_splittings(w)) {
    BigReal a = u.empty() ? BigReal::from_long(1, digits)
                          : li_at_half(u.reverse_swap(), digits);
    BigReal b = v.empty() ? BigReal::from_long(1, digits) : li_at_half(v, digits);
    sum = sum + a * b;
  }
  cache_->store(k, digits, sum.to_decimal(digits));
  return sum;
}

BigReal Evaluator::eval_star(const Index& k, int digits) {
  if (!k.admissible())
    throw std::domain_error("eval_star: non-admissible index " + k.to_string());
  BigReal sum = BigReal::from_long(0, digits);
  for (const Index& t : star_expansion(k)) sum = sum + eval_mzv(t, digits);
  return sum;
}

BigReal Evaluator::eval_index_sum(const IndexSum& s, int digits) {
  BigReal sum = BigReal::from_long(0, digits);
  for (const auto& [k, c] : s.terms()) {
    BigReal coeff = BigReal::from_rational(c, digits);
    if (k.empty()) {
      sum = sum + coeff;
    } else if (k.admissible()) {
      sum = sum + coeff * eval_mzv(k, digits);
    } else {
      throw std::domain_error("eval_index_sum: non-admissible index " +
                              k.to_string() + " in sum");
    }
  }
  return sum;
}

BigReal Evaluator::zeta_n(int n, int digits) {
  if (n < 2) throw std::domain_error("zeta_n: n must be >= 2");
  return eval_mzv(Index{n}, digits);
}

BigReal Evaluator::named_constant(std::string_view name, int digits) {
  if (name == "pi") return const_pi(digits);
  if (name == "gamma") return const_gamma(digits);
  if (name == "log2") return const_log2(digits);
  if (name.starts_with("zeta_n(") && name.ends_with(")")) {
    std::string inner(name.substr(7, name.size() - 8));
    try {
      return zeta_n(std::stoi(inner), digits);
    } catch (const std::invalid_argument&) {
      throw std::domain_error("unknown constant: " + std::string(name));
    }
  }
  throw std::domain_error("unknown constant: " + std::string(name));
}

std::vector<BigReal> rebase(const RegPoly& p, const BigReal& shift,
                            Evaluator& ev, int digits) {
  const int deg = p.degree();
  if (deg < 0) return {};
  std::vector<BigReal> a;
  a.reserve(static_cast<size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i)
    a.push_back(ev.eval_index_sum(p.coeff(i), digits));

  // b_j = sum_{i>=j} C(i,j) a_i shift^{i-j}
  std::vector<BigReal> out;
  out.reserve(static_cast<size_t>(deg) + 1);
  for (int j = 0; j <= deg; ++j) {
    BigReal acc = BigReal::from_long(0, digits);
    BigReal spow = BigReal::from_long(1, digits);
    for (int i = j; i <= deg; ++i) {
      Rational c{binomial(static_cast<unsigned long>(i),
                          static_cast<unsigned long>(j))};
      acc = acc + BigReal::from_rational(c, digits) *
                      a[static_cast<size_t>(i)] * spow;
      spow = spow * shift;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace mzv
