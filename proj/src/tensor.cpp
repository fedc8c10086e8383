#include "torelli/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace torelli {

void TensorSeries::add_term(const TWord &w, const Rat &c) {
  if (c == 0) return;
  if (word_weight(w) > truncation_) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorSeries TensorSeries::operator+(const TensorSeries &o) const {
  TensorSeries r = *this;
  r += o;
  return r;
}

TensorSeries &TensorSeries::operator+=(const TensorSeries &o) {
  if (!(alphabet_ == o.alphabet_) || truncation_ != o.truncation_)
    throw AlgebraError("tensor series mismatch");
  for (const auto &[w, c] : o.terms_) add_term(w, c);
  return *this;
}

TensorSeries TensorSeries::operator-(const TensorSeries &o) const {
  return *this + o * Rat(-1);
}

TensorSeries TensorSeries::operator*(const Rat &c) const {
  TensorSeries r(alphabet_, truncation_);
  if (c == 0) return r;
  for (const auto &[w, cw] : terms_) r.terms_.emplace(w, cw * c);
  return r;
}

TensorSeries TensorSeries::operator*(const TensorSeries &o) const {
  if (!(alphabet_ == o.alphabet_) || truncation_ != o.truncation_)
    throw AlgebraError("tensor series mismatch");
  TensorSeries r(alphabet_, truncation_);
  for (const auto &[u, cu] : terms_) {
    int wu = word_weight(u);
    for (const auto &[v, cv] : o.terms_) {
      if (wu + word_weight(v) > truncation_) continue;
      r.add_term(u.concat(v), cu * cv);
    }
  }
  return r;
}

TensorSeries TensorSeries::weight_slice(int w) const {
  TensorSeries r(alphabet_, truncation_);
  for (const auto &[u, c] : terms_)
    if (word_weight(u) == w) r.terms_.emplace(u, c);
  return r;
}

TensorSeries TensorSeries::length_slice(int n) const {
  TensorSeries r(alphabet_, truncation_);
  for (const auto &[u, c] : terms_)
    if (u.len == n) r.terms_.emplace(u, c);
  return r;
}

int TensorSeries::min_weight() const {
  int m = -1;
  for (const auto &[u, c] : terms_) {
    int w = word_weight(u);
    if (m < 0 || w < m) m = w;
  }
  return m;
}

int TensorSeries::max_length() const {
  int m = 0;
  for (const auto &[u, c] : terms_)
    if (u.len > m) m = u.len;
  return m;
}

std::string TensorSeries::str() const {
  if (terms_.empty()) return "0";
  // sort by weight, then lexicographically
  std::vector<std::pair<int, const std::pair<const TWord, Rat> *>> order;
  order.reserve(terms_.size());
  for (const auto &t : terms_) order.emplace_back(word_weight(t.first), &t);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto &x, const auto &y) { return x.first < y.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto &[wt, t] : order) {
    const auto &[w, c] = *t;
    Rat cc = c;
    if (first) {
      if (cc < 0) {
        os << "-";
        cc = -cc;
      }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    first = false;
    if (w.len == 0) {
      os << cc;
      continue;
    }
    if (cc != 1) os << cc << ' ';
    for (int i = 0; i < w.len; ++i) {
      if (i) os << '.';
      os << alphabet_.symbol(w.letter(i));
    }
  }
  return os.str();
}

TensorSeries exp(const TensorSeries &x) {
  if (x.constant_term() != 0)
    throw AlgebraError("exp needs vanishing constant term");
  TensorSeries r = TensorSeries::unit(x.alphabet(), x.truncation());
  TensorSeries p = TensorSeries::unit(x.alphabet(), x.truncation());
  Rat fact(1);
  for (int k = 1; k <= x.truncation(); ++k) {
    p = p * x;
    if (p.is_zero()) break;
    fact *= k;
    r += p * (Rat(1) / fact);
  }
  return r;
}

TensorSeries log(const TensorSeries &x) {
  if (x.constant_term() != 1)
    throw AlgebraError("log needs constant term 1");
  TensorSeries y = x - TensorSeries::unit(x.alphabet(), x.truncation());
  TensorSeries r(x.alphabet(), x.truncation());
  TensorSeries p = TensorSeries::unit(x.alphabet(), x.truncation());
  for (int k = 1; k <= x.truncation(); ++k) {
    p = p * y;
    if (p.is_zero()) break;
    r += p * (Rat(k % 2 ? 1 : -1) / k);
  }
  return r;
}

TensorSeries series_inverse(const TensorSeries &x) {
  return exp(log(x) * Rat(-1));
}

TensorSeries dynkin(const TensorSeries &x) {
  TensorSeries r(x.alphabet(), x.truncation());
  for (const auto &[w, c] : x.terms()) {
    if (w.len == 0) continue;
    // fold [..[[x1,x2],x3]..,xn] as a series product
    TensorSeries acc = TensorSeries::letter(x.alphabet(), x.truncation(), w.letter(0));
    for (int i = 1; i < w.len; ++i) {
      TensorSeries xi =
          TensorSeries::letter(x.alphabet(), x.truncation(), w.letter(i));
      acc = acc * xi - xi * acc;
    }
    r += acc * c;
  }
  return r;
}

bool is_grouplike(const TensorSeries &x) {
  if (x.constant_term() != 1) return false;
  TensorSeries l = log(x);
  for (int n = 2; n <= l.max_length(); ++n) {
    TensorSeries s = l.length_slice(n);
    if (!(dynkin(s) == s * Rat(n))) return false;
  }
  return true;
}

} // namespace torelli
