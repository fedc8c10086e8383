#pragma once

#include <map>
#include <optional>
#include <string>

#include "torelli/word.hpp"

namespace torelli {

// Endomorphism of pi given by the images of the 2g generators.  Mapping
// classes enter the library through their action h_# on pi; only endos that
// fix the boundary word are accepted by the Johnson-homomorphism layer.
class SurfaceEndo {
public:
  SurfaceEndo(int genus, std::map<Generator, FreeWord> images,
              std::string label = {});

  static SurfaceEndo identity(int genus);

  int genus() const { return genus_; }
  const std::string &label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  const FreeWord &image(Generator g) const;

  FreeWord apply(const FreeWord &w) const;

  // (*this) o rhs : rhs acts first.
  SurfaceEndo compose(const SurfaceEndo &rhs) const;

  // True iff the boundary word prod [beta_i^-1, alpha_i] is fixed.
  bool validates() const;
  // The boundary defect apply(boundary) * boundary^-1 (trivial iff valid).
  FreeWord boundary_defect() const;

  bool is_identity() const;

  friend bool operator==(const SurfaceEndo &a, const SurfaceEndo &b) {
    return a.genus_ == b.genus_ && a.images_ == b.images_;
  }

private:
  int genus_;
  std::map<Generator, FreeWord> images_;
  std::string label_;
};

// Built-in Dehn-twist generators and their inverses:
//   t_a<i>    twist along the i-th meridian alpha_i            (i in 1..g)
//   t_a<k><l> twist along the curve enclosing handles k < l    (g >= 2)
//   t_d       twist along the genus-1 separating curve delta
//   t_e       t_epsilon * t_{alpha_g}^-1                        (g >= 2)
// Every entry fixes the boundary word.  Inverses use the name suffix "^-1".
std::map<std::string, SurfaceEndo> twist_library(int genus);

} // namespace torelli
