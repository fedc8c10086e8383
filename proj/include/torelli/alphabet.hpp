#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torelli/word.hpp"

namespace torelli {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered alphabet with letter weights in {1,2}.  The three standard
// instances used throughout:
//   BA(g): b_1 < ... < b_g (weight 1) < a_1 < ... < a_g (weight 2)
//   H(g):  a_1 < ... < a_g < b_1 < ... < b_g, all weight 1
//   B(g):  b_1 < ... < b_g, weight 1
class WeightedAlphabet {
public:
  enum class Kind { BA, H, B };

  static WeightedAlphabet ba(int genus) { return WeightedAlphabet(Kind::BA, genus); }
  static WeightedAlphabet h(int genus) { return WeightedAlphabet(Kind::H, genus); }
  static WeightedAlphabet b(int genus) { return WeightedAlphabet(Kind::B, genus); }

  Kind kind() const { return kind_; }
  int genus() const { return genus_; }
  int size() const { return kind_ == Kind::B ? genus_ : 2 * genus_; }

  int weight(int letter) const {
    return (kind_ == Kind::BA && letter >= genus_) ? 2 : 1;
  }

  std::string symbol(int letter) const;

  // Letter index for a_i / b_i; throws if the alphabet lacks it.
  int a_letter(int i) const;
  int b_letter(int i) const;
  bool is_a(int letter) const { return kind_ == Kind::BA ? letter >= genus_
                                : kind_ == Kind::H       ? letter < genus_
                                                         : false; }

  // The letter carrying the homology class of a pi-generator, if any
  // (alpha_i has none in the B alphabet).
  std::optional<int> letter_for(Generator g) const;

  friend bool operator==(const WeightedAlphabet &,
                         const WeightedAlphabet &) = default;

private:
  WeightedAlphabet(Kind k, int genus) : kind_(k), genus_(genus) {
    if (genus < 1) throw AlgebraError("alphabet genus must be >= 1");
    if (size() > 15) throw AlgebraError("alphabet too large for packed words");
  }
  Kind kind_;
  int genus_;
};

inline std::string WeightedAlphabet::symbol(int letter) const {
  switch (kind_) {
  case Kind::B:
    return "b" + std::to_string(letter + 1);
  case Kind::BA:
    return letter < genus_ ? "b" + std::to_string(letter + 1)
                           : "a" + std::to_string(letter - genus_ + 1);
  case Kind::H:
    return letter < genus_ ? "a" + std::to_string(letter + 1)
                           : "b" + std::to_string(letter - genus_ + 1);
  }
  return {};
}

inline int WeightedAlphabet::a_letter(int i) const {
  if (i < 1 || i > genus_) throw AlgebraError("a-letter index out of range");
  switch (kind_) {
  case Kind::BA: return genus_ + i - 1;
  case Kind::H: return i - 1;
  case Kind::B: throw AlgebraError("B alphabet has no a-letters");
  }
  return -1;
}

inline int WeightedAlphabet::b_letter(int i) const {
  if (i < 1 || i > genus_) throw AlgebraError("b-letter index out of range");
  switch (kind_) {
  case Kind::BA: return i - 1;
  case Kind::H: return genus_ + i - 1;
  case Kind::B: return i - 1;
  }
  return -1;
}

inline std::optional<int> WeightedAlphabet::letter_for(Generator g) const {
  if (g.kind == Generator::Alpha) {
    if (kind_ == Kind::B) return std::nullopt;
    return a_letter(g.index);
  }
  return b_letter(g.index);
}

} // namespace torelli
