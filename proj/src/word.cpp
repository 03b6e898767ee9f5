#include "mzv/word.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace mzv {

Word Word::parse(std::string_view text) {
  Word w;
  for (char c : text) {
    if (c == 'x' || c == 'y')
      w = w.appended(c);
    else
      throw std::invalid_argument("words use letters x and y only");
  }
  return w;
}

bool Word::admissible() const {
  return len_ > 0 && !is_y(0) && is_y(len_ - 1);
}

Word Word::prepended(char letter) const {
  if (len_ >= kMaxLen) throw std::domain_error("word too long");
  std::uint64_t bit = (letter == 'y') ? 1 : 0;
  return Word((bits_ << 1) | bit, len_ + 1);
}

Word Word::appended(char letter) const {
  if (len_ >= kMaxLen) throw std::domain_error("word too long");
  std::uint64_t bit = (letter == 'y') ? 1 : 0;
  return Word(bits_ | (bit << len_), len_ + 1);
}

Word Word::rest() const {
  if (len_ == 0) throw std::domain_error("empty word has no rest");
  return Word(bits_ >> 1, len_ - 1);
}

Word Word::prefix(int n) const {
  if (n < 0 || n > len_) throw std::domain_error("bad prefix length");
  std::uint64_t mask = (n == 0) ? 0 : (~std::uint64_t{0} >> (64 - n));
  return Word(bits_ & mask, n);
}

Word Word::suffix_from(int pos) const {
  if (pos < 0 || pos > len_) throw std::domain_error("bad suffix position");
  return Word(bits_ >> pos, len_ - pos);
}

Word Word::reverse_swap() const {
  Word out;
  for (int i = len_ - 1; i >= 0; --i)
    out = out.appended(is_y(i) ? 'x' : 'y');
  return out;
}

int Word::leading_y_run() const {
  int n = 0;
  while (n < len_ && is_y(n)) ++n;
  return n;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(static_cast<size_t>(len_));
  for (int i = 0; i < len_; ++i) s += letter(i);
  return s;
}

Word index_to_word(const Index& k) {
  if (k.empty()) throw std::domain_error("index_to_word: empty index");
  Word w;
  for (int i = k.depth() - 1; i >= 0; --i) {
    for (int j = 0; j < k.part(i) - 1; ++j) w = w.appended('x');
    w = w.appended('y');
  }
  return w;
}

Index word_to_index(const Word& w) {
  if (w.empty() || !w.is_y(w.length() - 1))
    throw std::domain_error("word_to_index: word must be nonempty and end in y");
  std::vector<int> exponents;  // x-block lengths, leftmost first
  int run = 0;
  for (int i = 0; i < w.length(); ++i) {
    if (w.is_y(i)) {
      exponents.push_back(run);
      run = 0;
    } else {
      ++run;
    }
  }
  std::vector<int> parts(exponents.size());
  for (size_t i = 0; i < exponents.size(); ++i)
    parts[i] = exponents[exponents.size() - 1 - i] + 1;
  return Index(std::move(parts));
}

Word word_dual(const Word& w) {
  if (!w.admissible())
    throw std::domain_error("word_dual: word not admissible: " + w.to_string());
  return w.reverse_swap();
}

Index dual(const Index& k) {
  if (!k.admissible())
    throw std::domain_error("dual: index not admissible: " + k.to_string());
  return word_to_index(word_dual(index_to_word(k)));
}

void WordSum::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();  // two-argument mpq construction may be non-canonical
  auto [it, inserted] = terms_.emplace(w, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

WordSum& WordSum::operator+=(const WordSum& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WordSum& WordSum::operator-=(const WordSum& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

WordSum& WordSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Rational WordSum::mass() const {
  Rational m = 0;
  for (const auto& [w, c] : terms_) m += abs(c);
  return m;
}

IndexSum WordSum::to_index_sum() const {
  IndexSum out;
  for (const auto& [w, c] : terms_) {
    if (w.empty())
      out.add(Index{}, c);
    else
      out.add(word_to_index(w), c);
  }
  return out;
}

std::string WordSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    if (a != 1) s += a.get_str() + "·";
    s += w.empty() ? "ε" : w.to_string();
  }
  return s;
}

namespace {

WordSum shuffle_rec(const Word& u, const Word& v,
                    std::map<std::pair<Word, Word>, WordSum>& memo) {
  if (u.empty()) return WordSum(v);
  if (v.empty()) return WordSum(u);
  const Word& lo = (u <= v) ? u : v;
  const Word& hi = (u <= v) ? v : u;
  std::pair<Word, Word> key{lo, hi};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  WordSum result;
  const WordSum left = shuffle_rec(lo.rest(), hi, memo);
  for (const auto& [w, c] : left.terms())
    result.add(w.prepended(lo.letter(0)), c);
  const WordSum right = shuffle_rec(lo, hi.rest(), memo);
  for (const auto& [w, c] : right.terms())
    result.add(w.prepended(hi.letter(0)), c);
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

WordSum shuffle(const Word& u, const Word& v) {
  std::map<std::pair<Word, Word>, WordSum> memo;
  return shuffle_rec(u, v, memo);
}

WordSum shuffle(const WordSum& u, const WordSum& v) {
  WordSum result;
  std::map<std::pair<Word, Word>, WordSum> memo;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      WordSum ab = shuffle_rec(a, b, memo);
      ab *= ca * cb;
      result += ab;
    }
  return result;
}

}  // namespace mzv
