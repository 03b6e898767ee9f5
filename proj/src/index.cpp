#include "mzv/index.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mzv {

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::domain_error("index parts must be positive");
}

Index::Index(std::initializer_list<int> parts)
    : Index(std::vector<int>(parts)) {}

int Index::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Index::height() const {
  return static_cast<int>(
      std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 1; }));
}

int Index::trailing_ones() const {
  int n = 0;
  for (auto it = parts_.rbegin(); it != parts_.rend() && *it == 1; ++it) ++n;
  return n;
}

Index Index::appended(int part) const {
  std::vector<int> v = parts_;
  v.push_back(part);
  return Index(std::move(v));
}

Index Index::without_last() const {
  if (parts_.empty()) throw std::domain_error("empty index has no last part");
  std::vector<int> v(parts_.begin(), parts_.end() - 1);
  return Index(std::move(v));
}

std::string Index::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

Index Index::parse(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view body = text.substr(b, e - b);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      throw std::invalid_argument("unbalanced parentheses in index: " +
                                  std::string(text));
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  std::string token;
  std::istringstream in{std::string(body)};
  while (std::getline(in, token, ',')) {
    size_t tb = token.find_first_not_of(" \t");
    if (tb == std::string::npos)
      throw std::invalid_argument("empty part in index: " + std::string(text));
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(token.substr(tb), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad index part '" + token + "'");
    }
    size_t rest = token.find_first_not_of(" \t", tb + pos);
    if (rest != std::string::npos)
      throw std::invalid_argument("bad index part '" + token + "'");
    if (v < 1) throw std::invalid_argument("index parts must be positive");
    parts.push_back(v);
  }
  return Index(std::move(parts));
}

IndexProfile profile(const Index& k) {
  return IndexProfile{k.weight(), k.depth(), k.height(), k.admissible()};
}

Index add_pointwise(const Index& a, const Index& b) {
  if (a.depth() != b.depth())
    throw std::domain_error("add_pointwise: depth mismatch " + a.to_string() +
                            " vs " + b.to_string());
  std::vector<int> v(a.parts().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.parts()[i] + b.parts()[i];
  return Index(std::move(v));
}

namespace {

void enumerate_rec(int weight, std::optional<int> depth, int min_part,
                   std::vector<int>& prefix, std::vector<Index>& out) {
  if (weight == 0 && (!depth || *depth == static_cast<int>(prefix.size()))) {
    out.emplace_back(prefix);
    return;
  }
  if (weight < min_part) return;
  if (depth && static_cast<int>(prefix.size()) >= *depth) return;
  int remaining_slots = depth ? *depth - static_cast<int>(prefix.size()) : 1;
  // Leave room for the other mandatory parts when depth is fixed.
  int max_first = depth ? weight - (remaining_slots - 1) * min_part : weight;
  for (int p = min_part; p <= max_first; ++p) {
    prefix.push_back(p);
    enumerate_rec(weight - p, depth, min_part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Index> enumerate_indices(int weight, std::optional<int> depth,
                                     int min_part) {
  if (min_part < 1) throw std::domain_error("min_part must be positive");
  std::vector<Index> out;
  if (weight < 0) return out;
  std::vector<int> prefix;
  enumerate_rec(weight, depth, min_part, prefix, out);
  return out;
}

void IndexSum::add(const Index& k, const Rational& c) {
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();  // two-argument mpq construction may be non-canonical
  auto [it, inserted] = terms_.emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

IndexSum& IndexSum::operator+=(const IndexSum& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

IndexSum& IndexSum::operator-=(const IndexSum& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

IndexSum& IndexSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Rational IndexSum::mass() const {
  Rational m = 0;
  for (const auto& [k, c] : terms_) m += abs(c);
  return m;
}

std::string IndexSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    if (a != 1) s += a.get_str() + "·";
    s += k.to_string();
  }
  return s;
}

namespace {

// Recursion on the last entries, with a memo table local to each top-level
// product (subproblems are prefix pairs; the product is commutative, so the
// factors are keyed in canonical order).
IndexSum stuffle_rec(const Index& a, const Index& b,
                     std::map<std::pair<Index, Index>, IndexSum>& memo) {
  if (a.empty()) return IndexSum(b);
  if (b.empty()) return IndexSum(a);

  const Index& lo = (a <= b) ? a : b;
  const Index& hi = (a <= b) ? b : a;
  std::pair<Index, Index> key{lo, hi};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int la = lo.parts().back();
  int lb = hi.parts().back();
  Index ra = lo.without_last();
  Index rb = hi.without_last();

  IndexSum result;
  const IndexSum left = stuffle_rec(ra, hi, memo);
  for (const auto& [k, c] : left.terms()) result.add(k.appended(la), c);
  const IndexSum right = stuffle_rec(lo, rb, memo);
  for (const auto& [k, c] : right.terms()) result.add(k.appended(lb), c);
  const IndexSum merged = stuffle_rec(ra, rb, memo);
  for (const auto& [k, c] : merged.terms())
    result.add(k.appended(la + lb), c);

  return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

IndexSum stuffle(const Index& a, const Index& b) {
  std::map<std::pair<Index, Index>, IndexSum> memo;
  return stuffle_rec(a, b, memo);
}

IndexSum stuffle(const IndexSum& u, const IndexSum& v) {
  IndexSum result;
  std::map<std::pair<Index, Index>, IndexSum> memo;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      IndexSum ab = stuffle_rec(a, b, memo);
      ab *= ca * cb;
      result += ab;
    }
  return result;
}

}  // namespace mzv
