#include "torelli/johnson.hpp"

#include <sstream>

namespace torelli {

namespace {

FreeWord gen_word(int genus, Generator g, int e = 1) {
  return FreeWord::generator(genus, g, e);
}

FreeWord defect(const SurfaceEndo &h, Generator g) {
  return h.image(g) * gen_word(h.genus(), g, -1);
}

void require_valid(const SurfaceEndo &h) {
  if (!h.validates())
    throw AlgebraError("endomorphism does not fix the boundary word");
}

bool log_vanishes_below(const Expansion &e, const FreeWord &w, int m) {
  int mw = log(e.evaluate(w)).min_weight();
  return mw == -1 || mw >= m;
}

template <typename K> void drop_zeros(std::map<K, LieElement> &m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

std::string gen_name(Generator g) {
  return (g.kind == Generator::Alpha ? "a" : "b") + std::to_string(g.index);
}

[[noreturn]] void rethrow_membership(const char *what, Generator g, int level,
                                     const MembershipError &err) {
  throw MembershipError(std::string(what) + ": image defect of " + gen_name(g) +
                            " has a nonzero class in degree " +
                            std::to_string(err.degree) +
                            " (filtration level " + std::to_string(level) + ")",
                        err.degree);
}

// images b_j -> b_j into the B alphabet (a-letters die)
std::map<int, LieElement> to_b_images(const WeightedAlphabet &src,
                                      const WeightedAlphabet &b) {
  std::map<int, LieElement> im;
  for (int j = 1; j <= src.genus(); ++j)
    im.emplace(src.b_letter(j), LieElement::letter(b, b.b_letter(j)));
  return im;
}

LieElement left_act(const IMat &r, const LieElement &x) {
  // Lambda^2 r, via the Lie morphism b_j -> sum_k r[k][j] b_k
  const WeightedAlphabet &b = x.alphabet();
  int g = b.genus();
  std::map<int, LieElement> im;
  for (int j = 1; j <= g; ++j) {
    LieElement v(b);
    for (int k = 1; k <= g; ++k)
      if (r[k - 1][j - 1] != 0)
        v += LieElement::letter(b, b.b_letter(k)) * Rat(r[k - 1][j - 1]);
    im.emplace(b.b_letter(j), v);
  }
  return substitute(x, b, im);
}

} // namespace

LieElement g_condition(const GElement &x) {
  auto b = WeightedAlphabet::b(x.genus);
  LieElement s(b);
  for (const auto &[i, m] : x.mu) {
    LieElement rb(b);
    for (int k = 1; k <= x.genus; ++k)
      if (x.R[k - 1][i - 1] != 0)
        rb += LieElement::letter(b, b.b_letter(k)) * Rat(x.R[k - 1][i - 1]);
    s += bracket(rb, m);
  }
  return s;
}

namespace {

template <typename K>
std::string tensor_str(const std::map<K, LieElement> &parts,
                       const std::string &side) {
  std::ostringstream out;
  bool first = true;
  for (const auto &[k, v] : parts) {
    if (!first) out << " + ";
    first = false;
    if constexpr (std::is_same_v<K, Generator>)
      out << gen_name(k);
    else
      out << side << k;
    out << "⊗(" << v.str() << ")";
  }
  return first ? "0" : out.str();
}

} // namespace

IMat imat_identity(int n) {
  IMat m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat imat_mul(const IMat &x, const IMat &y) {
  size_t n = x.size(), p = y.empty() ? 0 : y[0].size(), q = y.size();
  IMat r(n, std::vector<Int>(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < q; ++k)
      if (x[i][k] != 0)
        for (size_t j = 0; j < p; ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

IMat imat_inverse(const IMat &x) {
  size_t n = x.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(x[i][j]);
    a[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw AlgebraError("matrix is singular");
    std::swap(a[c], a[p]);
    Rat d = a[c][c];
    for (auto &v : a[c]) v /= d;
    for (size_t r = 0; r < n; ++r)
      if (r != c && a[r][c] != 0) {
        Rat f = a[r][c];
        for (size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
      }
  }
  IMat inv(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!is_integer(a[i][n + j]))
        throw AlgebraError("matrix inverse is not integral");
      inv[i][j] = numerator(a[i][n + j]);
    }
  return inv;
}

bool DerivationElement::is_zero() const { return a_part.empty() && b_part.empty(); }

DerivationElement DerivationElement::operator+(const DerivationElement &o) const {
  if (genus != o.genus || level != o.level)
    throw AlgebraError("derivation mismatch in +");
  DerivationElement r = *this;
  for (const auto &[i, v] : o.a_part) {
    auto it = r.a_part.find(i);
    if (it == r.a_part.end()) r.a_part.emplace(i, v);
    else it->second += v;
  }
  for (const auto &[i, v] : o.b_part) {
    auto it = r.b_part.find(i);
    if (it == r.b_part.end()) r.b_part.emplace(i, v);
    else it->second += v;
  }
  drop_zeros(r.a_part);
  drop_zeros(r.b_part);
  r.symplectic = symplectic && o.symplectic;
  return r;
}

std::string DerivationElement::str() const {
  if (is_zero()) return "0";
  std::string a = tensor_str(a_part, "a"), b = tensor_str(b_part, "b");
  if (a == "0") return b;
  if (b == "0") return a;
  return a + " + " + b;
}

bool ClassicalDerivation::is_zero() const { return parts.empty(); }
std::string ClassicalDerivation::str() const { return tensor_str(parts, ""); }

bool LevineDerivation::is_zero() const { return parts.empty(); }
std::string LevineDerivation::str() const { return tensor_str(parts, "b"); }

GElement GElement::identity(int genus) {
  return GElement{genus, imat_identity(genus), {}};
}

bool GElement::is_identity() const {
  return R == imat_identity(genus) && mu.empty();
}

std::string GElement::str() const {
  std::ostringstream out;
  out << "R=[";
  for (int i = 0; i < genus; ++i) {
    if (i) out << "; ";
    for (int j = 0; j < genus; ++j) {
      if (j) out << " ";
      out << R[i][j];
    }
  }
  out << "], mu: " << tensor_str(mu, "a");
  return out.str();
}

LieElement xi(const DerivationElement &d) {
  auto ba = WeightedAlphabet::ba(d.genus);
  LieElement s(ba);
  for (const auto &[i, v] : d.a_part)
    s += bracket(LieElement::letter(ba, ba.a_letter(i)), v);
  for (const auto &[i, v] : d.b_part)
    s += bracket(LieElement::letter(ba, ba.b_letter(i)), v);
  return s;
}

LieElement xi_classical(const ClassicalDerivation &d) {
  auto h = WeightedAlphabet::h(d.genus);
  LieElement s(h);
  for (const auto &[g, v] : d.parts)
    s += bracket(LieElement::letter(h, *h.letter_for(g)), v);
  return s;
}

LieElement xi_levine(const LevineDerivation &d) {
  auto b = WeightedAlphabet::b(d.genus);
  LieElement s(b);
  for (const auto &[i, v] : d.parts)
    s += bracket(LieElement::letter(b, b.b_letter(i)), v);
  return s;
}

DerivationElement tau_alt(const SurfaceEndo &h, int m, const Expansion &e) {
  require_valid(h);
  if (m < 1) throw AlgebraError("tau_alt level must be >= 1");
  if (e.genus() != h.genus()) throw AlgebraError("genus mismatch in tau_alt");
  if (e.alphabet().kind() != WeightedAlphabet::Kind::BA)
    throw AlgebraError("tau_alt needs an alternative expansion");
  if (e.truncation() < m + 2)
    throw AlgebraError("tau_alt needs truncation >= m+2");
  int g = h.genus();
  DerivationElement d{g, m, {}, {}, false};
  for (int i = 1; i <= g; ++i) {
    Generator beta{Generator::Beta, i}, alpha{Generator::Alpha, i};
    try {
      d.a_part.emplace(i, e.leading_class(defect(h, beta), m + 1));
    } catch (const MembershipError &err) {
      rethrow_membership("tau_alt", beta, m, err);
    }
    try {
      d.b_part.emplace(i, e.leading_class(defect(h, alpha), m + 2) * Rat(-1));
    } catch (const MembershipError &err) {
      rethrow_membership("tau_alt", alpha, m, err);
    }
  }
  drop_zeros(d.a_part);
  drop_zeros(d.b_part);
  d.symplectic = xi(d).is_zero();
  return d;
}

DerivationElement tau_alt(const SurfaceEndo &h, int m) {
  return tau_alt(h, m, Expansion::default_alt(h.genus(), m + 3));
}

ClassicalDerivation tau_classical(const SurfaceEndo &h, int m,
                                  const Expansion &e) {
  require_valid(h);
  if (m < 1) throw AlgebraError("tau_classical level must be >= 1");
  if (e.genus() != h.genus() ||
      e.alphabet().kind() != WeightedAlphabet::Kind::H)
    throw AlgebraError("tau_classical needs a classical expansion");
  if (e.truncation() < m + 1)
    throw AlgebraError("tau_classical needs truncation >= m+1");
  int g = h.genus();
  ClassicalDerivation d{g, m, {}};
  for (int i = 1; i <= g; ++i) {
    Generator beta{Generator::Beta, i}, alpha{Generator::Alpha, i};
    try {
      d.parts.emplace(Generator{Generator::Alpha, i},
                      e.leading_class(defect(h, beta), m + 1));
    } catch (const MembershipError &err) {
      rethrow_membership("tau_classical", beta, m, err);
    }
    try {
      d.parts.emplace(Generator{Generator::Beta, i},
                      e.leading_class(defect(h, alpha), m + 1) * Rat(-1));
    } catch (const MembershipError &err) {
      rethrow_membership("tau_classical", alpha, m, err);
    }
  }
  drop_zeros(d.parts);
  return d;
}

ClassicalDerivation tau_classical(const SurfaceEndo &h, int m) {
  return tau_classical(h, m, Expansion::classical(h.genus(), m + 2));
}

LevineDerivation tau_levine(const SurfaceEndo &h, int m, const Expansion &e) {
  require_valid(h);
  if (m < 1) throw AlgebraError("tau_levine level must be >= 1");
  if (e.genus() != h.genus() ||
      e.alphabet().kind() != WeightedAlphabet::Kind::B)
    throw AlgebraError("tau_levine needs a handlebody expansion");
  if (e.truncation() < m + 1)
    throw AlgebraError("tau_levine needs truncation >= m+1");
  int g = h.genus();
  LevineDerivation d{g, m, {}};
  for (int i = 1; i <= g; ++i) {
    Generator alpha{Generator::Alpha, i};
    try {
      d.parts.emplace(i, e.leading_class(h.image(alpha), m + 1) * Rat(-1));
    } catch (const MembershipError &err) {
      rethrow_membership("tau_levine", alpha, m, err);
    }
  }
  drop_zeros(d.parts);
  return d;
}

LevineDerivation tau_levine(const SurfaceEndo &h, int m) {
  return tau_levine(h, m, Expansion::handlebody(h.genus(), m + 2));
}

bool membership_alt(const SurfaceEndo &h, int m, const Expansion &e) {
  require_valid(h);
  if (m < 1) throw AlgebraError("membership level must be >= 1");
  if (e.truncation() < m + 1)
    throw AlgebraError("membership_alt needs truncation >= m+1");
  for (int i = 1; i <= h.genus(); ++i) {
    if (!log_vanishes_below(e, defect(h, {Generator::Beta, i}), m + 1))
      return false;
    if (!log_vanishes_below(e, defect(h, {Generator::Alpha, i}), m + 2))
      return false;
  }
  return true;
}

bool membership_alt(const SurfaceEndo &h, int m) {
  return membership_alt(h, m, Expansion::default_alt(h.genus(), m + 2));
}

bool membership_classical(const SurfaceEndo &h, int m, const Expansion &e) {
  require_valid(h);
  if (m < 1) throw AlgebraError("membership level must be >= 1");
  if (e.truncation() < m)
    throw AlgebraError("membership_classical needs truncation >= m");
  for (int i = 1; i <= h.genus(); ++i)
    for (auto kind : {Generator::Alpha, Generator::Beta})
      if (!log_vanishes_below(e, defect(h, {kind, i}), m + 1)) return false;
  return true;
}

bool membership_classical(const SurfaceEndo &h, int m) {
  return membership_classical(h, m, Expansion::classical(h.genus(), m + 1));
}

bool membership_levine(const SurfaceEndo &h, int m, const Expansion &e) {
  require_valid(h);
  if (m < 1) throw AlgebraError("membership level must be >= 1");
  if (e.truncation() < m)
    throw AlgebraError("membership_levine needs truncation >= m");
  for (int i = 1; i <= h.genus(); ++i)
    if (!log_vanishes_below(e, h.image({Generator::Alpha, i}), m + 1))
      return false;
  return true;
}

bool membership_levine(const SurfaceEndo &h, int m) {
  return membership_levine(h, m, Expansion::handlebody(h.genus(), m + 1));
}

IMat sigma_matrix(const SurfaceEndo &h) {
  require_valid(h);
  int g = h.genus();
  IMat m(2 * g, std::vector<Int>(2 * g, 0));
  auto col = [&](Generator x, int c) {
    for (const Letter &l : h.image(x).letters()) {
      int row = l.gen.kind == Generator::Alpha ? l.gen.index - 1
                                               : g + l.gen.index - 1;
      m[row][c] += l.exponent;
    }
  };
  for (int i = 1; i <= g; ++i) {
    col({Generator::Alpha, i}, i - 1);
    col({Generator::Beta, i}, g + i - 1);
  }
  // omega(x, y) = x^T J y with J = (0 Id; -Id 0)
  IMat j(2 * g, std::vector<Int>(2 * g, 0));
  for (int i = 0; i < g; ++i) {
    j[i][g + i] = 1;
    j[g + i][i] = -1;
  }
  IMat mt(2 * g, std::vector<Int>(2 * g));
  for (int r = 0; r < 2 * g; ++r)
    for (int c = 0; c < 2 * g; ++c) mt[r][c] = m[c][r];
  if (imat_mul(imat_mul(mt, j), m) != j)
    throw AlgebraError("homology action is not symplectic");
  return m;
}

GElement tau0_alt(const SurfaceEndo &h) {
  require_valid(h);
  int g = h.genus();
  IMat s = sigma_matrix(h);
  for (int r = g; r < 2 * g; ++r)
    for (int c = 0; c < g; ++c)
      if (s[r][c] != 0)
        throw AlgebraError("tau0_alt needs a Lagrangian-preserving class "
                           "(h_*(A) is not contained in A)");
  GElement x{g, IMat(g, std::vector<Int>(g)), {}};
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < g; ++c) x.R[r][c] = s[g + r][g + c];
  imat_inverse(x.R); // det check: must be invertible over the integers
  Expansion hb = Expansion::handlebody(g, 3);
  for (int i = 1; i <= g; ++i) {
    TensorSeries l = log(hb.evaluate(h.image({Generator::Alpha, i})));
    if (!l.weight_slice(1).is_zero())
      throw AlgebraError("tau0_alt internal error: degree-1 class survives");
    LieElement v = from_primitive_tensor(l.weight_slice(2));
    if (!v.is_zero()) x.mu.emplace(i, v);
  }
  if (!g_condition(x).is_zero())
    throw AlgebraError("tau0_alt internal error: bracket condition fails");
  return x;
}

GElement g_mul(const GElement &x, const GElement &y) {
  if (x.genus != y.genus) throw AlgebraError("genus mismatch in g_mul");
  int g = x.genus;
  GElement r{g, imat_mul(x.R, y.R), {}};
  // dual action on A: P = (R^T)^-1, so (mu . f)(a_i) = sum_j P[j][i] mu(a_j)
  IMat yt(g, std::vector<Int>(g));
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) yt[a][b] = y.R[b][a];
  IMat p = imat_inverse(yt);
  auto bal = WeightedAlphabet::b(g);
  for (int i = 1; i <= g; ++i) {
    LieElement v(bal);
    auto it = y.mu.find(i);
    if (it != y.mu.end()) v += left_act(x.R, it->second);
    for (const auto &[jj, mj] : x.mu)
      if (p[jj - 1][i - 1] != 0) v += mj * Rat(p[jj - 1][i - 1]);
    if (!v.is_zero()) r.mu.emplace(i, v);
  }
  return r;
}

GElement g_inv(const GElement &x) {
  int g = x.genus;
  GElement r{g, imat_inverse(x.R), {}};
  // (h, mu)^-1 = (h^-1, -h^-1 . mu . h^-1); the dual of h^-1 is R^T
  auto bal = WeightedAlphabet::b(g);
  for (int i = 1; i <= g; ++i) {
    LieElement v(bal);
    for (const auto &[jj, mj] : x.mu)
      if (x.R[i - 1][jj - 1] != 0)
        v += left_act(r.R, mj) * Rat(-x.R[i - 1][jj - 1]);
    if (!v.is_zero()) r.mu.emplace(i, v);
  }
  return r;
}

LevineDerivation iota_star(const DerivationElement &d) {
  auto ba = WeightedAlphabet::ba(d.genus), b = WeightedAlphabet::b(d.genus);
  auto im = to_b_images(ba, b);
  LevineDerivation r{d.genus, d.level + 1, {}};
  for (const auto &[i, v] : d.b_part) {
    LieElement s = substitute(v, b, im);
    if (!s.is_zero()) r.parts.emplace(i, s);
  }
  return r;
}

bool ProjectedRecord::is_zero() const {
  for (const auto &x : a_rows)
    if (!x.is_zero()) return false;
  for (const auto &m : mixed)
    for (const auto &row : m)
      for (const auto &c : row)
        if (c != 0) return false;
  return true;
}

std::string ProjectedRecord::str() const {
  std::ostringstream out;
  for (int i = 0; i < genus; ++i)
    if (!a_rows[i].is_zero())
      out << "a" << i + 1 << "⊗(" << a_rows[i].str() << ") ";
  for (int i = 0; i < genus; ++i)
    for (int k = 0; k < genus; ++k)
      for (int l = 0; l < genus; ++l)
        if (mixed[i][k][l] != 0)
          out << "b" << i + 1 << "⊗[" << mixed[i][k][l].str() << "(a"
              << k + 1 << "⊗b" << l + 1 << ")] ";
  std::string s = out.str();
  return s.empty() ? "0" : s;
}

static ProjectedRecord empty_record(int g) {
  ProjectedRecord r;
  r.genus = g;
  r.a_rows.assign(g, LieElement(WeightedAlphabet::b(g)));
  r.mixed.assign(g, std::vector<std::vector<Rat>>(g, std::vector<Rat>(g, 0)));
  return r;
}

ProjectedRecord p_project(const DerivationElement &d) {
  if (d.level != 1) throw AlgebraError("p_project needs a level-1 derivation");
  int g = d.genus;
  auto ba = WeightedAlphabet::ba(g), b = WeightedAlphabet::b(g);
  auto im = to_b_images(ba, b);
  ProjectedRecord r = empty_record(g);
  for (const auto &[i, v] : d.a_part) r.a_rows[i - 1] = substitute(v, b, im);
  for (const auto &[i, v] : d.b_part)
    for (const auto &[w, c] : v.terms())
      if (w.len == 2) { // the mixed Lyndon words of weight 3 are "b_l a_k"
        int l = w.letter(0) + 1, k = w.letter(1) - g + 1;
        r.mixed[i - 1][k - 1][l - 1] -= c; // [b_l, a_k] = -[a_k, b_l]
      }
  return r;
}

ProjectedRecord q_project(const ClassicalDerivation &d) {
  if (d.level != 1) throw AlgebraError("q_project needs a level-1 derivation");
  int g = d.genus;
  auto h = WeightedAlphabet::h(g), b = WeightedAlphabet::b(g);
  auto im = to_b_images(h, b);
  ProjectedRecord r = empty_record(g);
  for (const auto &[x, v] : d.parts) {
    if (x.kind == Generator::Alpha) {
      r.a_rows[x.index - 1] = substitute(v, b, im);
    } else {
      for (const auto &[w, c] : v.terms())
        if (h.is_a(w.letter(0)) && !h.is_a(w.letter(1))) { // "a_k b_l" words
          int k = w.letter(0) + 1, l = w.letter(1) - g + 1;
          r.mixed[x.index - 1][k - 1][l - 1] += c;
        }
    }
  }
  return r;
}

} // namespace torelli
