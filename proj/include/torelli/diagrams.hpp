#pragma once

#include <memory>

#include "torelli/johnson.hpp"

namespace torelli {

// Planar binary tree whose leaves carry colors (letters of the BA alphabet).
struct Shape {
  int leaf = -1; // leaf color when there are no children
  std::shared_ptr<Shape> left, right;

  bool is_leaf() const { return !left; }
  static Shape leaf_of(int color) { return Shape{color, nullptr, nullptr}; }
  static Shape node(Shape l, Shape r) {
    return Shape{-1, std::make_shared<Shape>(std::move(l)),
                 std::make_shared<Shape>(std::move(r))};
  }
};

// Connected tree-like Jacobi diagram with legs colored by the basis of
// B + A, presented as a root leg plus a binary tree of the remaining legs.
class TreeDiagram {
public:
  TreeDiagram(int genus, int root_color, Shape shape);

  static TreeDiagram strut(int genus, int c1, int c2);
  // Shape given by the standard Lyndon bracketing of w.
  static TreeDiagram from_lyndon(int genus, int root_color, const TWord &w);

  int genus() const { return genus_; }
  int root_color() const { return root_; }
  const Shape &shape() const { return shape_; }
  const WeightedAlphabet &alphabet() const { return alphabet_; }

  bool is_strut() const { return shape_.is_leaf(); }
  std::vector<int> leg_colors() const;
  std::string str() const;

private:
  int genus_;
  WeightedAlphabet alphabet_;
  int root_;
  Shape shape_;
};

// a-deg(T) = 2 #(A-colored legs) + #(B-colored legs) - 3
int a_deg(const TreeDiagram &t);

// eta(T) = sum over legs v of color(v) (x) (T rooted at v), as an element of
// the derivation space of level a_deg(T).
DerivationElement eta(const TreeDiagram &t);

bool xi_of_eta_check(const TreeDiagram &t);

// Rational combination of diagrams of one alternative degree; equality is
// equality of eta-images (AS/IHX hold automatically there).
class DiagramElement {
public:
  static DiagramElement zero(int genus, int adeg);
  static DiagramElement from_terms(int genus,
                                   std::vector<std::pair<Rat, TreeDiagram>> terms);

  int genus() const { return genus_; }
  int adeg() const { return adeg_; }
  const std::vector<std::pair<Rat, TreeDiagram>> &terms() const { return terms_; }
  const DerivationElement &eta_image() const { return eta_; }
  bool is_zero() const { return eta_.is_zero(); }

  friend bool operator==(const DiagramElement &x, const DiagramElement &y) {
    return x.genus_ == y.genus_ && x.adeg_ == y.adeg_ && x.eta_ == y.eta_;
  }

  std::string str() const;

private:
  DiagramElement(int genus, int adeg, std::vector<std::pair<Rat, TreeDiagram>> t,
                 DerivationElement e)
      : genus_(genus), adeg_(adeg), terms_(std::move(t)), eta_(std::move(e)) {}
  int genus_;
  int adeg_;
  std::vector<std::pair<Rat, TreeDiagram>> terms_;
  DerivationElement eta_;
};

// Inverse of eta on D_m(B;A) (x) Q; requires xi(d) = 0.
DiagramElement eta_inverse(const DerivationElement &d);

DiagramElement diagrammatic_tau_alt(const SurfaceEndo &h, int m);

} // namespace torelli
