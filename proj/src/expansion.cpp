#include "torelli/expansion.hpp"

namespace torelli {

Expansion::Expansion(WeightedAlphabet alphabet, int truncation,
                     std::map<Generator, TensorSeries> images, std::string name)
    : alphabet_(std::move(alphabet)), truncation_(truncation),
      name_(std::move(name)), images_(std::move(images)) {
  if (images_.empty()) throw AlgebraError("expansion needs generator images");
  genus_ = 0;
  for (const auto &[g, s] : images_) {
    if (s.constant_term() != 1)
      throw AlgebraError("expansion image must have constant term 1");
    if (!(s.alphabet() == alphabet_) || s.truncation() != truncation_)
      throw AlgebraError("expansion image algebra mismatch");
    genus_ = std::max(genus_, g.index);
  }
  for (auto kind : {Generator::Alpha, Generator::Beta})
    for (int i = 1; i <= genus_; ++i)
      if (!images_.count({kind, i}))
        throw AlgebraError("expansion is missing a generator image");
  for (const auto &[g, s] : images_)
    inverse_images_.emplace(g, series_inverse(s));
}

Expansion Expansion::default_alt(int genus, int truncation) {
  if (truncation < 2) throw AlgebraError("alternative expansion needs truncation >= 2");
  auto a = WeightedAlphabet::ba(genus);
  std::map<Generator, TensorSeries> im;
  for (int i = 1; i <= genus; ++i) {
    im.emplace(Generator{Generator::Alpha, i},
               exp(TensorSeries::letter(a, truncation, a.a_letter(i))));
    im.emplace(Generator{Generator::Beta, i},
               exp(TensorSeries::letter(a, truncation, a.b_letter(i))));
  }
  return Expansion(a, truncation, std::move(im), "default-alt");
}

Expansion Expansion::classical(int genus, int truncation) {
  auto a = WeightedAlphabet::h(genus);
  std::map<Generator, TensorSeries> im;
  for (int i = 1; i <= genus; ++i) {
    im.emplace(Generator{Generator::Alpha, i},
               exp(TensorSeries::letter(a, truncation, a.a_letter(i))));
    im.emplace(Generator{Generator::Beta, i},
               exp(TensorSeries::letter(a, truncation, a.b_letter(i))));
  }
  return Expansion(a, truncation, std::move(im), "classical");
}

Expansion Expansion::handlebody(int genus, int truncation) {
  auto a = WeightedAlphabet::b(genus);
  std::map<Generator, TensorSeries> im;
  for (int i = 1; i <= genus; ++i) {
    im.emplace(Generator{Generator::Alpha, i}, TensorSeries::unit(a, truncation));
    im.emplace(Generator{Generator::Beta, i},
               exp(TensorSeries::letter(a, truncation, a.b_letter(i))));
  }
  return Expansion(a, truncation, std::move(im), "handlebody");
}

Expansion Expansion::perturbed(int genus, int truncation, unsigned seed) {
  if (truncation < 2) throw AlgebraError("alternative expansion needs truncation >= 2");
  auto a = WeightedAlphabet::ba(genus);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto noise = [&](int min_weight) {
    TensorSeries t(a, truncation);
    for (int w = min_weight; w <= truncation; ++w)
      for (const TWord &u : lyndon_basis(a, w)) {
        int c = coeff(rng);
        if (!c) continue;
        for (const auto &[v, cv] : lyndon_bracket_tensor(u))
          t.add_term(v, cv * c);
      }
    return t;
  };
  std::map<Generator, TensorSeries> im;
  for (int i = 1; i <= genus; ++i) {
    im.emplace(Generator{Generator::Alpha, i},
               exp(TensorSeries::letter(a, truncation, a.a_letter(i)) + noise(3)));
    im.emplace(Generator{Generator::Beta, i},
               exp(TensorSeries::letter(a, truncation, a.b_letter(i)) + noise(2)));
  }
  return Expansion(a, truncation, std::move(im),
                   "perturbed(" + std::to_string(seed) + ")");
}

const TensorSeries &Expansion::image(Generator g) const {
  auto it = images_.find(g);
  if (it == images_.end()) throw AlgebraError("generator not covered by expansion");
  return it->second;
}

TensorSeries Expansion::evaluate(const FreeWord &w) const {
  if (w.genus() != genus_) throw AlgebraError("genus mismatch in evaluate");
  TensorSeries r = TensorSeries::unit(alphabet_, truncation_);
  for (const Letter &l : w.letters()) {
    const auto &m = l.exponent == 1 ? images_ : inverse_images_;
    r = r * m.at(l.gen);
  }
  return r;
}

LieElement Expansion::leading_class(const FreeWord &w, int m) const {
  if (m < 1) throw AlgebraError("leading_class degree must be >= 1");
  if (truncation_ < m) throw AlgebraError("truncation too small for leading_class");
  TensorSeries l = log(evaluate(w));
  for (int d = 1; d < m; ++d)
    if (!l.weight_slice(d).is_zero())
      throw MembershipError("word has nonzero class in degree " +
                                std::to_string(d) + " (below claimed degree " +
                                std::to_string(m) + ")",
                            d);
  return from_primitive_tensor(l.weight_slice(m));
}

} // namespace torelli
