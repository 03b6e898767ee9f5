#include "mzv/regularization.hpp"

#include <json.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace mzv {

RegPoly RegPoly::constant(IndexSum c) {
  RegPoly p;
  if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
  return p;
}

RegPoly RegPoly::variable_T() {
  RegPoly p;
  p.coeffs_.resize(2);
  p.coeffs_[1] = IndexSum::unit();
  return p;
}

const IndexSum& RegPoly::coeff(int i) const {
  static const IndexSum zero;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<size_t>(i)];
}

void RegPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RegPoly& RegPoly::operator+=(const RegPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RegPoly& RegPoly::operator-=(const RegPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RegPoly& RegPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& s : coeffs_) s *= c;
  return *this;
}

RegPoly RegPoly::mul_T() const {
  RegPoly p;
  if (coeffs_.empty()) return p;
  p.coeffs_.resize(coeffs_.size() + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) p.coeffs_[i + 1] = coeffs_[i];
  return p;
}

namespace {

std::string superscript(int n) {
  static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

// One product term "num·ζ(k)·T^i/den" without its sign.
std::string render_term(const Rational& c, const Index& k, int power) {
  Integer num = abs(c.get_num());
  Integer den = c.get_den();
  std::vector<std::string> factors;
  if (num != 1) factors.push_back(num.get_str());
  if (!k.empty()) factors.push_back("ζ" + k.to_string());
  if (power == 1) factors.push_back("T");
  if (power >= 2) factors.push_back("T" + superscript(power));
  if (factors.empty()) factors.push_back(num.get_str());
  std::string s = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) s += "·" + factors[i];
  if (den != 1) s += "/" + den.get_str();
  return s;
}

}  // namespace

std::string RegPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    for (const auto& [k, c] : coeffs_[static_cast<size_t>(i)].terms()) {
      if (first) {
        if (c < 0) s += "-";
        first = false;
      } else {
        s += (c < 0) ? " - " : " + ";
      }
      s += render_term(c, k, i);
    }
  }
  return s;
}

std::string RegPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i <= degree(); ++i) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : coeffs_[static_cast<size_t>(i)].terms()) {
      nlohmann::json t;
      t["index"] = k.parts();
      t["coeff_num"] = static_cast<long>(c.get_num().get_si());
      t["coeff_den"] = static_cast<long>(c.get_den().get_si());
      terms.push_back(std::move(t));
    }
    arr.push_back({{"power", i}, {"terms", std::move(terms)}});
  }
  return arr.dump();
}

namespace {

RegPoly shuffle_regularize_rec(const Word& w);

RegPoly shuffle_regularize_uncached(const Word& w) {
  if (w.empty()) return RegPoly::constant(IndexSum::unit());
  if (w.admissible()) return RegPoly::constant(IndexSum(word_to_index(w)));
  // w starts with y; reduce on the leading-y run via y ⧢ rest(w).
  Word v = w.rest();
  if (v.empty()) return RegPoly::variable_T();
  WordSum sh = shuffle(Word::parse("y"), v);
  Rational mult = sh.terms().at(w);
  RegPoly acc = shuffle_regularize_rec(v).mul_T();
  for (const auto& [t, c] : sh.terms()) {
    if (t == w) continue;
    acc -= c * shuffle_regularize_rec(t);
  }
  acc *= Rational(1) / mult;
  return acc;
}

RegPoly shuffle_regularize_rec(const Word& w) {
  static std::map<Word, RegPoly> memo;
  static std::mutex memo_mutex;
  {
    std::scoped_lock lock(memo_mutex);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
  }
  RegPoly p = shuffle_regularize_uncached(w);
  std::scoped_lock lock(memo_mutex);
  return memo.emplace(w, std::move(p)).first->second;
}

RegPoly stuffle_regularize_rec(const Index& k);

RegPoly stuffle_regularize_uncached(const Index& k) {
  if (k.empty()) return RegPoly::constant(IndexSum::unit());
  if (k.admissible()) return RegPoly::constant(IndexSum(k));
  // k ends in 1; reduce on the trailing-1 run via (1) * (k minus one 1).
  Index j = k.without_last();
  if (j.empty()) return RegPoly::variable_T();
  IndexSum st = stuffle(Index{1}, j);
  Rational mult = st.terms().at(k);
  RegPoly acc = stuffle_regularize_rec(j).mul_T();
  for (const auto& [t, c] : st.terms()) {
    if (t == k) continue;
    acc -= c * stuffle_regularize_rec(t);
  }
  acc *= Rational(1) / mult;
  return acc;
}

RegPoly stuffle_regularize_rec(const Index& k) {
  static std::map<Index, RegPoly> memo;
  static std::mutex memo_mutex;
  {
    std::scoped_lock lock(memo_mutex);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
  }
  RegPoly p = stuffle_regularize_uncached(k);
  std::scoped_lock lock(memo_mutex);
  return memo.emplace(k, std::move(p)).first->second;
}

}  // namespace

RegPoly shuffle_regularize(const Word& w) {
  if (!w.regularizable())
    throw std::domain_error("shuffle_regularize: word ends in x: " +
                            w.to_string());
  return shuffle_regularize_rec(w);
}

RegPoly stuffle_regularize(const Index& k) {
  if (k.empty())
    throw std::domain_error("stuffle_regularize: empty index");
  return stuffle_regularize_rec(k);
}

IndexSum reg_constant_term(const RegPoly& p) { return p.coeff(0); }

namespace {

WordSum index_sum_to_words(const IndexSum& s) {
  WordSum out;
  for (const auto& [k, c] : s.terms()) {
    if (k.empty())
      out.add(Word{}, c);
    else
      out.add(index_to_word(k), c);
  }
  return out;
}

}  // namespace

WordSum reg_reconstruct_shuffle(const RegPoly& p) {
  WordSum result;
  WordSum t_power = WordSum::unit();  // y^{⧢ i}
  const WordSum y1{Word::parse("y")};
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 0) t_power = shuffle(t_power, y1);
    if (!p.coeff(i).is_zero())
      result += shuffle(index_sum_to_words(p.coeff(i)), t_power);
  }
  return result;
}

IndexSum reg_reconstruct_stuffle(const RegPoly& p) {
  IndexSum result;
  IndexSum t_power = IndexSum::unit();  // (1)^{* i}
  const IndexSum one{Index{1}};
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 0) t_power = stuffle(t_power, one);
    if (!p.coeff(i).is_zero()) result += stuffle(p.coeff(i), t_power);
  }
  return result;
}

}  // namespace mzv
