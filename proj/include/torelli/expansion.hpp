#pragma once

#include <map>
#include <random>

#include "torelli/endo.hpp"
#include "torelli/lie.hpp"

namespace torelli {

// Filtration-membership failure: the word has a nonzero graded class below the
// claimed degree.
struct MembershipError : AlgebraError {
  MembershipError(std::string what, int degree_)
      : AlgebraError(std::move(what)), degree(degree_) {}
  int degree; // first nonzero degree
};

// Multiplicative map pi -> truncated tensor algebra, determined by group-like
// generator images with constant term 1.
class Expansion {
public:
  Expansion(WeightedAlphabet alphabet, int truncation,
            std::map<Generator, TensorSeries> images, std::string name);

  // theta(alpha_i) = exp(a_i), theta(beta_i) = exp(b_i) over the BA alphabet.
  static Expansion default_alt(int genus, int truncation);
  // all generators weight 1 over the H alphabet
  static Expansion classical(int genus, int truncation);
  // alpha_i -> 1, beta_i -> exp(b_i) over the B alphabet
  static Expansion handlebody(int genus, int truncation);
  // default_alt deformed by random higher Lie terms (weight >= 3 on alphas,
  // >= 2 on betas); still an alternative expansion
  static Expansion perturbed(int genus, int truncation, unsigned seed);

  const WeightedAlphabet &alphabet() const { return alphabet_; }
  int truncation() const { return truncation_; }
  int genus() const { return genus_; }
  const std::string &name() const { return name_; }

  const TensorSeries &image(Generator g) const;

  TensorSeries evaluate(const FreeWord &w) const;

  // Weight-m slice of log(evaluate(w)) as a Lie element; throws
  // MembershipError if any slice of weight < m is nonzero.
  LieElement leading_class(const FreeWord &w, int m) const;

private:
  WeightedAlphabet alphabet_;
  int truncation_;
  int genus_;
  std::string name_;
  std::map<Generator, TensorSeries> images_;
  std::map<Generator, TensorSeries> inverse_images_;
};

} // namespace torelli
