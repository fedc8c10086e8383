#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torelli/alphabet.hpp"
#include "torelli/rational.hpp"

namespace torelli {

// Word in the tensor algebra, at most 16 letters, packed MSB-first so that
// integer comparison is lexicographic with prefixes ordered first.
struct TWord {
  uint64_t bits = 0;
  uint8_t len = 0;

  static TWord empty() { return {}; }

  int letter(int i) const {
    return static_cast<int>((bits >> (60 - 4 * i)) & 0xF) - 1;
  }
  void push_back(int letter) {
    if (len >= 16) throw AlgebraError("tensor word too long");
    bits |= static_cast<uint64_t>(letter + 1) << (60 - 4 * len);
    ++len;
  }
  TWord concat(const TWord &o) const {
    if (len + o.len > 16) throw AlgebraError("tensor word too long");
    TWord w;
    w.bits = bits | (o.bits >> (4 * len));
    w.len = static_cast<uint8_t>(len + o.len);
    return w;
  }
  static TWord single(int letter) {
    TWord w;
    w.push_back(letter);
    return w;
  }

  friend bool operator==(const TWord &a, const TWord &b) { return a.bits == b.bits; }
  friend bool operator<(const TWord &a, const TWord &b) { return a.bits < b.bits; }
};

// Truncated noncommutative power series with exact rational coefficients.
// All arithmetic silently drops words of weight above the truncation bound.
class TensorSeries {
public:
  TensorSeries(WeightedAlphabet alphabet, int truncation)
      : alphabet_(std::move(alphabet)), truncation_(truncation) {
    if (truncation < 1) throw AlgebraError("truncation must be >= 1");
  }

  const WeightedAlphabet &alphabet() const { return alphabet_; }
  int truncation() const { return truncation_; }
  const std::map<TWord, Rat> &terms() const { return terms_; }

  int word_weight(const TWord &w) const {
    int s = 0;
    for (int i = 0; i < w.len; ++i) s += alphabet_.weight(w.letter(i));
    return s;
  }

  Rat coeff(const TWord &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  Rat constant_term() const { return coeff(TWord::empty()); }

  void add_term(const TWord &w, const Rat &c);

  bool is_zero() const { return terms_.empty(); }

  static TensorSeries unit(const WeightedAlphabet &a, int truncation) {
    TensorSeries s(a, truncation);
    s.add_term(TWord::empty(), 1);
    return s;
  }
  static TensorSeries letter(const WeightedAlphabet &a, int truncation, int l) {
    TensorSeries s(a, truncation);
    s.add_term(TWord::single(l), 1);
    return s;
  }

  TensorSeries operator+(const TensorSeries &o) const;
  TensorSeries operator-(const TensorSeries &o) const;
  TensorSeries operator*(const TensorSeries &o) const;
  TensorSeries operator*(const Rat &c) const;
  TensorSeries &operator+=(const TensorSeries &o);

  friend bool operator==(const TensorSeries &a, const TensorSeries &b) {
    return a.terms_ == b.terms_;
  }

  // Homogeneous slices.
  TensorSeries weight_slice(int w) const;
  TensorSeries length_slice(int n) const;
  int min_weight() const; // smallest weight with a nonzero term; -1 if zero
  int max_length() const;

  std::string str() const;

private:
  WeightedAlphabet alphabet_;
  int truncation_;
  std::map<TWord, Rat> terms_;
};

TensorSeries exp(const TensorSeries &x); // requires constant term 0
TensorSeries log(const TensorSeries &x); // requires constant term 1
TensorSeries series_inverse(const TensorSeries &x);

// Left-normed bracketing map x1...xn -> [...[[x1,x2],x3],...,xn], extended
// linearly.  Fixed points with eigenvalue n on length-n slices characterize
// Lie elements.
TensorSeries dynkin(const TensorSeries &x);

bool is_grouplike(const TensorSeries &x); // requires constant term 1

} // namespace torelli
