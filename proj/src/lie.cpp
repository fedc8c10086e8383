#include "torelli/lie.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace torelli {

namespace {

// lexicographic comparison of suffix w[i..] against suffix w[j..]
bool suffix_less(const TWord &w, int i, int j) {
  while (i < w.len && j < w.len) {
    if (w.letter(i) != w.letter(j)) return w.letter(i) < w.letter(j);
    ++i;
    ++j;
  }
  return i == w.len && j < w.len; // proper prefix is smaller
}

TWord suffix(const TWord &w, int i) {
  TWord v;
  for (int k = i; k < w.len; ++k) v.push_back(w.letter(k));
  return v;
}

TWord prefix(const TWord &w, int n) {
  TWord u;
  for (int k = 0; k < n; ++k) u.push_back(w.letter(k));
  return u;
}

} // namespace

bool is_lyndon(const TWord &w) {
  if (w.len == 0) return false;
  for (int i = 1; i < w.len; ++i)
    if (!suffix_less(w, 0, i)) return false; // w must precede all proper suffixes
  return true;
}

std::pair<TWord, TWord> standard_factorization(const TWord &w) {
  if (w.len < 2 || !is_lyndon(w))
    throw AlgebraError("standard factorization needs a Lyndon word of length >= 2");
  int best = 1;
  for (int i = 2; i < w.len; ++i)
    if (suffix_less(w, i, best)) best = i;
  return {prefix(w, best), suffix(w, best)};
}

std::vector<TWord> lyndon_words(const WeightedAlphabet &a, int max_weight) {
  // k-ary Duval generation of all Lyndon words of length <= max_weight,
  // filtered by total weight
  int k = a.size();
  int n = max_weight; // letters have weight >= 1
  std::vector<TWord> out;
  std::vector<int> w{0};
  while (true) {
    int total = 0;
    for (int l : w) total += a.weight(l);
    if (total <= max_weight) {
      TWord t;
      for (int l : w) t.push_back(l);
      out.push_back(t);
    }
    int m = static_cast<int>(w.size());
    w.resize(n);
    for (int i = m; i < n; ++i) w[i] = w[i - m];
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TWord> lyndon_basis(const WeightedAlphabet &a, int m) {
  if (m < 1) throw AlgebraError("lyndon_basis weight must be >= 1");
  std::vector<TWord> out;
  for (const TWord &w : lyndon_words(a, m)) {
    int total = 0;
    for (int i = 0; i < w.len; ++i) total += a.weight(w.letter(i));
    if (total == m) out.push_back(w);
  }
  return out;
}

int LieElement::weight() const {
  if (terms_.empty()) return -1;
  int w = word_weight(terms_.begin()->first);
  for (const auto &[u, c] : terms_)
    if (word_weight(u) != w)
      throw AlgebraError("weight() on inhomogeneous Lie element");
  return w;
}

bool LieElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int w = word_weight(terms_.begin()->first);
  for (const auto &[u, c] : terms_)
    if (word_weight(u) != w) return false;
  return true;
}

void LieElement::add_term(const TWord &w, const Rat &c) {
  if (c == 0) return;
  if (!is_lyndon(w)) throw AlgebraError("Lie term key must be a Lyndon word");
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement LieElement::operator+(const LieElement &o) const {
  LieElement r = *this;
  r += o;
  return r;
}

LieElement &LieElement::operator+=(const LieElement &o) {
  if (!(alphabet_ == o.alphabet_)) throw AlgebraError("alphabet mismatch");
  for (const auto &[w, c] : o.terms_) add_term(w, c);
  return *this;
}

LieElement LieElement::operator-(const LieElement &o) const {
  return *this + o * Rat(-1);
}

LieElement LieElement::operator*(const Rat &c) const {
  LieElement r(alphabet_);
  if (c == 0) return r;
  for (const auto &[w, cw] : terms_) r.terms_.emplace(w, cw * c);
  return r;
}

LieElement LieElement::weight_slice(int m) const {
  LieElement r(alphabet_);
  for (const auto &[w, c] : terms_)
    if (word_weight(w) == m) r.terms_.emplace(w, c);
  return r;
}

std::string LieElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<int, const std::pair<const TWord, Rat> *>> order;
  for (const auto &t : terms_) order.emplace_back(word_weight(t.first), &t);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto &x, const auto &y) { return x.first < y.first; });
  // fully parenthesized left-normed rendering via standard factorization
  auto render = [this](const TWord &w, auto &&self) -> std::string {
    if (w.len == 1) return alphabet_.symbol(w.letter(0));
    auto [u, v] = standard_factorization(w);
    return "[" + self(u, self) + "," + self(v, self) + "]";
  };
  std::ostringstream os;
  bool first = true;
  for (const auto &[wt, t] : order) {
    const auto &[w, c] = *t;
    if (!first) os << " + ";
    first = false;
    std::ostringstream cs;
    cs << c;
    std::string ctext = cs.str();
    if (ctext.find('-') != std::string::npos ||
        ctext.find('/') != std::string::npos)
      ctext = "(" + ctext + ")";
    os << ctext << "·" << render(w, render);
  }
  return os.str();
}

const std::map<TWord, Rat> &lyndon_bracket_tensor(const TWord &w) {
  static std::map<uint64_t, std::map<TWord, Rat>> cache;
  static std::mutex mutex;
  std::scoped_lock lock(mutex);
  auto memo = [&](const TWord &u, auto &&self) -> const std::map<TWord, Rat> & {
    auto it = cache.find(u.bits);
    if (it != cache.end()) return it->second;
    std::map<TWord, Rat> t;
    if (u.len == 1) {
      t.emplace(u, 1);
    } else {
      auto [l, r] = standard_factorization(u);
      const auto &lt = self(l, self);
      const auto &rt = self(r, self);
      for (const auto &[x, cx] : lt)
        for (const auto &[y, cy] : rt) {
          Rat c = cx * cy;
          auto add = [&t](const TWord &k, const Rat &v) {
            auto [jt, fresh] = t.emplace(k, v);
            if (!fresh) {
              jt->second += v;
              if (jt->second == 0) t.erase(jt);
            }
          };
          add(x.concat(y), c);
          add(y.concat(x), -c);
        }
    }
    return cache.emplace(u.bits, std::move(t)).first->second;
  };
  if (!is_lyndon(w)) throw AlgebraError("bracket tensor needs a Lyndon word");
  return memo(w, memo);
}

TensorSeries to_tensor(const LieElement &x, int truncation) {
  TensorSeries t(x.alphabet(), truncation);
  for (const auto &[w, c] : x.terms())
    for (const auto &[u, cu] : lyndon_bracket_tensor(w)) t.add_term(u, c * cu);
  return t;
}

TensorSeries to_tensor(const LieElement &x) {
  int n = 1;
  for (const auto &[w, c] : x.terms()) n = std::max(n, x.word_weight(w));
  return to_tensor(x, n);
}

LieElement lie_coordinates(const TensorSeries &t) {
  // triangular back-substitution: the minimal word of a Lie tensor is Lyndon
  // and its bracketing only adds lexicographically larger words
  LieElement x(t.alphabet());
  TensorSeries rest = t;
  while (!rest.is_zero()) {
    auto [w, c] = *rest.terms().begin();
    if (!is_lyndon(w))
      throw AlgebraError("tensor is not a Lie element (minimal word not Lyndon)");
    x.add_term(w, c);
    for (const auto &[u, cu] : lyndon_bracket_tensor(w))
      rest.add_term(u, -c * cu);
  }
  return x;
}

LieElement from_primitive_tensor(const TensorSeries &t) {
  if (t.constant_term() != 0)
    throw AlgebraError("primitive tensor has no constant term");
  for (int n = 2; n <= t.max_length(); ++n) {
    TensorSeries s = t.length_slice(n);
    if (!(dynkin(s) == s * Rat(n)))
      throw AlgebraError("tensor fails the Dynkin primitivity test");
  }
  return lie_coordinates(t);
}

LieElement bracket(const LieElement &x, const LieElement &y) {
  if (!(x.alphabet() == y.alphabet())) throw AlgebraError("alphabet mismatch");
  if (x.is_zero() || y.is_zero()) return LieElement(x.alphabet());
  int n = 1;
  for (const auto &[w, c] : x.terms()) n = std::max(n, x.word_weight(w));
  int m = 1;
  for (const auto &[w, c] : y.terms()) m = std::max(m, y.word_weight(w));
  TensorSeries tx = to_tensor(x, n + m), ty = to_tensor(y, n + m);
  return lie_coordinates(tx * ty - ty * tx);
}

LieElement substitute(const LieElement &x, const WeightedAlphabet &target,
                      const std::map<int, LieElement> &images) {
  for (const auto &[l, im] : images) {
    if (im.is_zero()) continue;
    if (!(im.alphabet() == target))
      throw AlgebraError("substitution image alphabet mismatch");
    if (!im.is_homogeneous() || im.weight() != x.alphabet().weight(l))
      throw AlgebraError("substitution image has incompatible weight");
  }
  auto image_of = [&](int l) -> LieElement {
    auto it = images.find(l);
    return it == images.end() ? LieElement(target) : it->second;
  };
  auto eval = [&](const TWord &w, auto &&self) -> LieElement {
    if (w.len == 1) return image_of(w.letter(0));
    auto [u, v] = standard_factorization(w);
    return bracket(self(u, self), self(v, self));
  };
  LieElement r(target);
  for (const auto &[w, c] : x.terms()) r += eval(w, eval) * c;
  return r;
}

LieElement omega_prime(int genus) {
  WeightedAlphabet a = WeightedAlphabet::ba(genus);
  LieElement r(a);
  for (int i = 1; i <= genus; ++i)
    r += bracket(LieElement::letter(a, a.a_letter(i)),
                 LieElement::letter(a, a.b_letter(i)));
  return r;
}

} // namespace torelli
