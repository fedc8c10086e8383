#include "torelli/diagrams.hpp"

#include <mutex>
#include <sstream>
#include <tuple>

namespace torelli {

namespace {

void check_color(const WeightedAlphabet &a, int c) {
  if (c < 0 || c >= a.size()) throw AlgebraError("diagram color out of range");
}

int count_legs(const Shape &s) {
  return s.is_leaf() ? 1 : count_legs(*s.left) + count_legs(*s.right);
}

void collect_colors(const Shape &s, std::vector<int> &out) {
  if (s.is_leaf()) out.push_back(s.leaf);
  else {
    collect_colors(*s.left, out);
    collect_colors(*s.right, out);
  }
}

LieElement shape_lie(const WeightedAlphabet &a, const Shape &s) {
  if (s.is_leaf()) return LieElement::letter(a, s.leaf);
  return bracket(shape_lie(a, *s.left), shape_lie(a, *s.right));
}

std::string shape_str(const WeightedAlphabet &a, const Shape &s) {
  if (s.is_leaf()) return a.symbol(s.leaf);
  return "[" + shape_str(a, *s.left) + "," + shape_str(a, *s.right) + "]";
}

void add_part(DerivationElement &d, const WeightedAlphabet &a, int color,
              const LieElement &v) {
  int g = a.genus();
  auto &part = a.is_a(color) ? d.a_part : d.b_part;
  int idx = a.is_a(color) ? color - g + 1 : color + 1;
  auto it = part.find(idx);
  if (it == part.end()) part.emplace(idx, v);
  else it->second += v;
}

// Contribution of every leaf of s, where ctx is the Lie reading of the rest
// of the diagram as seen from the edge above s.
void reroot(DerivationElement &d, const WeightedAlphabet &a, const Shape &s,
            const LieElement &ctx) {
  if (s.is_leaf()) {
    add_part(d, a, s.leaf, ctx);
    return;
  }
  reroot(d, a, *s.left, bracket(shape_lie(a, *s.right), ctx));
  reroot(d, a, *s.right, bracket(ctx, shape_lie(a, *s.left)));
}

void drop_zero_parts(std::map<int, LieElement> &m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

bool is_bb_strut(const TreeDiagram &t) { return a_deg(t) == -1; }

Shape lyndon_shape(const TWord &w) {
  if (w.len == 1) return Shape::leaf_of(w.letter(0));
  auto [u, v] = standard_factorization(w);
  return Shape::node(lyndon_shape(u), lyndon_shape(v));
}

} // namespace

TreeDiagram::TreeDiagram(int genus, int root_color, Shape shape)
    : genus_(genus), alphabet_(WeightedAlphabet::ba(genus)), root_(root_color),
      shape_(std::move(shape)) {
  check_color(alphabet_, root_);
  std::vector<int> cs;
  collect_colors(shape_, cs);
  if (cs.empty()) throw AlgebraError("diagram needs at least 2 legs");
  for (int c : cs) check_color(alphabet_, c);
}

TreeDiagram TreeDiagram::strut(int genus, int c1, int c2) {
  return TreeDiagram(genus, c1, Shape::leaf_of(c2));
}

TreeDiagram TreeDiagram::from_lyndon(int genus, int root_color, const TWord &w) {
  if (!is_lyndon(w)) throw AlgebraError("diagram word must be Lyndon");
  return TreeDiagram(genus, root_color, lyndon_shape(w));
}

std::vector<int> TreeDiagram::leg_colors() const {
  std::vector<int> cs{root_};
  collect_colors(shape_, cs);
  return cs;
}

std::string TreeDiagram::str() const {
  if (is_strut())
    return "strut(" + alphabet_.symbol(root_) + "," +
           alphabet_.symbol(shape_.leaf) + ")";
  return "tree(root=" + alphabet_.symbol(root_) + "; " +
         shape_str(alphabet_, shape_) + ")";
}

int a_deg(const TreeDiagram &t) {
  int a = 0, b = 0;
  for (int c : t.leg_colors()) (t.alphabet().is_a(c) ? a : b)++;
  return 2 * a + b - 3;
}

DerivationElement eta(const TreeDiagram &t) {
  const WeightedAlphabet &a = t.alphabet();
  DerivationElement d{t.genus(), a_deg(t), {}, {}, false};
  add_part(d, a, t.root_color(), shape_lie(a, t.shape()));
  reroot(d, a, t.shape(), LieElement::letter(a, t.root_color()));
  drop_zero_parts(d.a_part);
  drop_zero_parts(d.b_part);
  return d;
}

bool xi_of_eta_check(const TreeDiagram &t) { return xi(eta(t)).is_zero(); }

DiagramElement DiagramElement::zero(int genus, int adeg) {
  return DiagramElement(genus, adeg, {},
                        DerivationElement{genus, adeg, {}, {}, true});
}

DiagramElement DiagramElement::from_terms(
    int genus, std::vector<std::pair<Rat, TreeDiagram>> terms) {
  int adeg = terms.empty() ? 0 : a_deg(terms.front().second);
  DerivationElement sum{genus, adeg, {}, {}, false};
  std::vector<std::pair<Rat, TreeDiagram>> kept;
  for (auto &[c, t] : terms) {
    if (t.genus() != genus) throw AlgebraError("diagram genus mismatch");
    if (is_bb_strut(t))
      throw AlgebraError("b-b struts have a-deg -1 and are not diagram-space "
                         "elements");
    if (a_deg(t) != adeg)
      throw AlgebraError("diagram element must be a-deg homogeneous");
    if (c == 0) continue;
    DerivationElement e = eta(t);
    for (auto &[i, v] : e.a_part) {
      auto it = sum.a_part.find(i);
      if (it == sum.a_part.end()) sum.a_part.emplace(i, v * c);
      else it->second += v * c;
    }
    for (auto &[i, v] : e.b_part) {
      auto it = sum.b_part.find(i);
      if (it == sum.b_part.end()) sum.b_part.emplace(i, v * c);
      else it->second += v * c;
    }
    kept.emplace_back(c, std::move(t));
  }
  drop_zero_parts(sum.a_part);
  drop_zero_parts(sum.b_part);
  sum.symplectic = xi(sum).is_zero();
  return DiagramElement(genus, adeg, std::move(kept), std::move(sum));
}

std::string DiagramElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[c, t] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")·" << t.str();
  }
  return out.str();
}

namespace {

// Precomputed solver for eta over the (root color, Lyndon word) spanning set
// of one (genus, a-deg): RREF of the coefficient matrix together with the row
// transform, so each eta_inverse call is a matrix-vector product.
struct EtaSolver {
  std::vector<TreeDiagram> cands;
  std::map<std::tuple<int, int, uint64_t>, size_t> rows;
  std::vector<size_t> pivot_col;
  std::vector<std::vector<Rat>> transform; // r x r, rref = transform * A
  size_t rank = 0;
};

const EtaSolver &eta_solver(int g, int m) {
  static std::map<std::pair<int, int>, EtaSolver> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({g, m});
  if (it != cache.end()) return it->second;
  EtaSolver s;
  auto ba = WeightedAlphabet::ba(g);
  for (int c = 0; c < ba.size(); ++c) {
    int ww = m + 3 - ba.weight(c);
    if (ww < 1) continue;
    for (const TWord &w : lyndon_basis(ba, ww)) {
      TreeDiagram t = TreeDiagram::from_lyndon(g, c, w);
      if (!is_bb_strut(t)) s.cands.push_back(std::move(t));
    }
  }
  size_t n = s.cands.size();
  auto row_of = [&](int part, int idx, const TWord &w) {
    return s.rows.emplace(std::make_tuple(part, idx, w.bits), s.rows.size())
        .first->second;
  };
  std::vector<DerivationElement> etas;
  etas.reserve(n);
  for (const TreeDiagram &t : s.cands) {
    etas.push_back(eta(t));
    for (const auto &[i, v] : etas.back().a_part)
      for (const auto &[w, c] : v.terms()) row_of(0, i, w);
    for (const auto &[i, v] : etas.back().b_part)
      for (const auto &[w, c] : v.terms()) row_of(1, i, w);
  }
  size_t r = s.rows.size();
  // augmented [A | I]; row-reduce to get the transform alongside
  std::vector<std::vector<Rat>> mat(r, std::vector<Rat>(n + r, 0));
  for (size_t j = 0; j < n; ++j) {
    for (const auto &[i, v] : etas[j].a_part)
      for (const auto &[w, c] : v.terms()) mat[row_of(0, i, w)][j] = c;
    for (const auto &[i, v] : etas[j].b_part)
      for (const auto &[w, c] : v.terms()) mat[row_of(1, i, w)][j] = c;
  }
  for (size_t i = 0; i < r; ++i) mat[i][n + i] = 1;
  size_t lead = 0;
  for (size_t col = 0; col < n && lead < r; ++col) {
    size_t p = lead;
    while (p < r && mat[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(mat[lead], mat[p]);
    Rat dcoef = mat[lead][col];
    for (auto &x : mat[lead]) x /= dcoef;
    for (size_t q = 0; q < r; ++q)
      if (q != lead && mat[q][col] != 0) {
        Rat f = mat[q][col];
        for (size_t j = col; j < n + r; ++j) mat[q][j] -= f * mat[lead][j];
      }
    s.pivot_col.push_back(col);
    ++lead;
  }
  s.rank = lead;
  s.transform.assign(r, std::vector<Rat>(r, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) s.transform[i][j] = mat[i][n + j];
  return cache.emplace(std::make_pair(g, m), std::move(s)).first->second;
}

} // namespace

DiagramElement eta_inverse(const DerivationElement &d) {
  if (!xi(d).is_zero())
    throw AlgebraError("element is not in the image of eta: xi(d) != 0");
  int g = d.genus, m = d.level;
  const EtaSolver &s = eta_solver(g, m);
  size_t r = s.rows.size();
  std::vector<Rat> rhs(r, 0);
  auto fill = [&](int part, const std::map<int, LieElement> &vals) {
    for (const auto &[i, v] : vals)
      for (const auto &[w, c] : v.terms()) {
        auto it = s.rows.find(std::make_tuple(part, i, w.bits));
        if (it == s.rows.end())
          throw AlgebraError("eta_inverse internal error: inconsistent system");
        rhs[it->second] = c;
      }
  };
  fill(0, d.a_part);
  fill(1, d.b_part);
  std::vector<std::pair<Rat, TreeDiagram>> terms;
  for (size_t q = 0; q < r; ++q) {
    Rat y = 0;
    for (size_t j = 0; j < r; ++j)
      if (s.transform[q][j] != 0 && rhs[j] != 0) y += s.transform[q][j] * rhs[j];
    if (q >= s.rank) {
      if (y != 0)
        throw AlgebraError("eta_inverse internal error: inconsistent system");
    } else if (y != 0) {
      terms.emplace_back(y, s.cands[s.pivot_col[q]]);
    }
  }
  DiagramElement e = terms.empty() ? DiagramElement::zero(g, m)
                                   : DiagramElement::from_terms(g, std::move(terms));
  if (!(e.eta_image() == d))
    throw AlgebraError("eta_inverse internal error: residual is nonzero");
  return e;
}

DiagramElement diagrammatic_tau_alt(const SurfaceEndo &h, int m) {
  return eta_inverse(tau_alt(h, m));
}

} // namespace torelli
