#pragma once

#include <map>
#include <string>
#include <vector>

#include "torelli/tensor.hpp"

namespace torelli {

bool is_lyndon(const TWord &w);

// Standard factorization w = uv of a Lyndon word of length >= 2, where v is
// the lexicographically smallest proper suffix (itself Lyndon).
std::pair<TWord, TWord> standard_factorization(const TWord &w);

// All Lyndon words of total weight exactly m, in lexicographic order.
std::vector<TWord> lyndon_basis(const WeightedAlphabet &a, int m);
// All Lyndon words of total weight <= max_weight.
std::vector<TWord> lyndon_words(const WeightedAlphabet &a, int max_weight);

// Element of the free Lie algebra in Lyndon-basis coordinates.
class LieElement {
public:
  explicit LieElement(WeightedAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

  static LieElement letter(const WeightedAlphabet &a, int l) {
    LieElement x(a);
    x.add_term(TWord::single(l), 1);
    return x;
  }

  const WeightedAlphabet &alphabet() const { return alphabet_; }
  const std::map<TWord, Rat> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int word_weight(const TWord &w) const {
    int s = 0;
    for (int i = 0; i < w.len; ++i) s += alphabet_.weight(w.letter(i));
    return s;
  }
  // Homogeneous degree; -1 for zero; error if mixed weights.
  int weight() const;
  bool is_homogeneous() const;

  Rat coeff(const TWord &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  void add_term(const TWord &w, const Rat &c);

  LieElement operator+(const LieElement &o) const;
  LieElement operator-(const LieElement &o) const;
  LieElement operator*(const Rat &c) const;
  LieElement &operator+=(const LieElement &o);

  LieElement weight_slice(int m) const;

  friend bool operator==(const LieElement &a, const LieElement &b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

private:
  WeightedAlphabet alphabet_;
  std::map<TWord, Rat> terms_;
};

LieElement bracket(const LieElement &x, const LieElement &y);

// Expansion of the Lyndon standard bracketing of w as a homogeneous tensor:
// coefficient 1 on w itself, support on lexicographically larger shuffles.
const std::map<TWord, Rat> &lyndon_bracket_tensor(const TWord &w);

TensorSeries to_tensor(const LieElement &x, int truncation);
TensorSeries to_tensor(const LieElement &x);

// Inverse of to_tensor on primitive slices; rejects non-Lie input via the
// Dynkin fixed-point test rho(t) = n*t on each word-length component.
LieElement from_primitive_tensor(const TensorSeries &t);
// Same extraction without the primitivity test (caller guarantees Lie-ness).
LieElement lie_coordinates(const TensorSeries &t);

// Unique Lie homomorphism sending letter l to images[l] (absent -> 0).  Any
// nonzero image must be homogeneous of the weight of its source letter.
LieElement substitute(const LieElement &x, const WeightedAlphabet &target,
                      const std::map<int, LieElement> &images);

// Omega' = sum_i [a_i, b_i] over the BA alphabet, homogeneous of weight 3.
LieElement omega_prime(int genus);

} // namespace torelli
