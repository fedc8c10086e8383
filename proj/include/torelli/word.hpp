#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace torelli {

struct WordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One of the 2g free generators of pi_1 of the genus-g surface with one
// boundary component: alpha_i (meridians) or beta_i (parallels), i in 1..g.
struct Generator {
  enum Kind : uint8_t { Alpha, Beta };
  Kind kind;
  int index; // 1-based

  friend bool operator==(const Generator &, const Generator &) = default;
  friend auto operator<=>(const Generator &, const Generator &) = default;
};

struct Letter {
  Generator gen;
  int exponent; // +1 or -1
  friend bool operator==(const Letter &, const Letter &) = default;
};

// Freely reduced word in the generators of pi.  Immutable after construction;
// equality is equality of reduced letter sequences.
class FreeWord {
public:
  explicit FreeWord(int genus) : genus_(genus) {
    if (genus < 1) throw WordError("genus must be >= 1");
  }
  // Reduces the given raw sequence.
  FreeWord(int genus, std::vector<Letter> raw);

  static FreeWord generator(int genus, Generator g, int exponent = 1);

  int genus() const { return genus_; }
  const std::vector<Letter> &letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }

  FreeWord operator*(const FreeWord &rhs) const;
  FreeWord inverse() const;

  friend bool operator==(const FreeWord &a, const FreeWord &b) {
    return a.genus_ == b.genus_ && a.letters_ == b.letters_;
  }

  std::string str() const;

  // Parses the canonical word grammar: whitespace-separated tokens
  // `a<i>` / `b<i>` with optional `^<exp>`, e.g. "a1 b2^-1 a1^3".
  static FreeWord parse(int genus, const std::string &text);

private:
  int genus_;
  std::vector<Letter> letters_;
};

FreeWord commutator(const FreeWord &u, const FreeWord &v); // u v u^-1 v^-1

// The boundary word prod_{i=1..g} [beta_i^-1, alpha_i].
FreeWord boundary_word(int genus);

} // namespace torelli
