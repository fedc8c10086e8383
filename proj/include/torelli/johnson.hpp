#pragma once

#include <vector>

#include "torelli/expansion.hpp"

namespace torelli {

using IMat = std::vector<std::vector<Int>>;

IMat imat_identity(int n);
IMat imat_mul(const IMat &x, const IMat &y);
IMat imat_inverse(const IMat &x); // entries must stay integral (det = +-1)

// Element of D_m(Lie(B;A)) in tensor form: a_part(a_i) pairs with a_i and
// holds the beta_i-defect class (weight m+1), b_part(b_i) pairs with b_i and
// holds the negated alpha_i-defect class (weight m+2).
struct DerivationElement {
  int genus;
  int level; // m
  std::map<int, LieElement> a_part, b_part;
  bool symplectic = false; // xi(d) == 0, set by tau_alt

  bool is_zero() const;
  friend bool operator==(const DerivationElement &x, const DerivationElement &y) {
    return x.genus == y.genus && x.level == y.level && x.a_part == y.a_part &&
           x.b_part == y.b_part;
  }
  DerivationElement operator+(const DerivationElement &o) const;
  std::string str() const;
};

// Element of H (x) Lie_{m+1}(H) in the same tensor convention: parts(a_i)
// holds the beta_i-defect class and parts(b_i) the negated alpha_i-defect.
struct ClassicalDerivation {
  int genus;
  int level;
  std::map<Generator, LieElement> parts;

  bool is_zero() const;
  friend bool operator==(const ClassicalDerivation &x, const ClassicalDerivation &y) {
    return x.genus == y.genus && x.level == y.level && x.parts == y.parts;
  }
  std::string str() const;
};

// Element of B (x) Lie_{m+1}(B): parts(b_i) holds the negated class of
// iota(h(alpha_i)).
struct LevineDerivation {
  int genus;
  int level;
  std::map<int, LieElement> parts;

  bool is_zero() const;
  friend bool operator==(const LevineDerivation &x, const LevineDerivation &y) {
    return x.genus == y.genus && x.level == y.level && x.parts == y.parts;
  }
  std::string str() const;
};

// Element of Aut(B) x Hom(A, Lambda^2 B) subject to the bracket condition
// Xi_3(sum_j R(b_j) (x) mu(a_j)) = 0.
struct GElement {
  int genus;
  IMat R;                       // matrix of the action on B in basis b_1..b_g
  std::map<int, LieElement> mu; // a_i -> weight-2 pure-b Lie element

  static GElement identity(int genus);
  bool is_identity() const;
  friend bool operator==(const GElement &x, const GElement &y) {
    return x.genus == y.genus && x.R == y.R && x.mu == y.mu;
  }
  std::string str() const;
};

// Bracket contractions cutting out the derivation spaces.
LieElement xi(const DerivationElement &d);
LieElement xi_classical(const ClassicalDerivation &d);
LieElement xi_levine(const LevineDerivation &d);

// Johnson-type homomorphisms.  Membership in the corresponding filtration
// term is checked internally; failures raise MembershipError naming the
// violating generator and the offending degree.  The overloads taking an
// Expansion allow evaluation with a custom (e.g. perturbed) expansion.
DerivationElement tau_alt(const SurfaceEndo &h, int m);
DerivationElement tau_alt(const SurfaceEndo &h, int m, const Expansion &e);
ClassicalDerivation tau_classical(const SurfaceEndo &h, int m);
ClassicalDerivation tau_classical(const SurfaceEndo &h, int m, const Expansion &e);
LevineDerivation tau_levine(const SurfaceEndo &h, int m);
LevineDerivation tau_levine(const SurfaceEndo &h, int m, const Expansion &e);

bool membership_alt(const SurfaceEndo &h, int m);
bool membership_alt(const SurfaceEndo &h, int m, const Expansion &e);
bool membership_classical(const SurfaceEndo &h, int m);
bool membership_classical(const SurfaceEndo &h, int m, const Expansion &e);
bool membership_levine(const SurfaceEndo &h, int m);
bool membership_levine(const SurfaceEndo &h, int m, const Expansion &e);

// Action of h on H in the basis (a_1..a_g, b_1..b_g); symplectic by
// construction (checked, violation means h is not a mapping class).
IMat sigma_matrix(const SurfaceEndo &h);

// 0-th alternative Johnson homomorphism; requires h Lagrangian (h_*(A) in A).
GElement tau0_alt(const SurfaceEndo &h);

GElement g_mul(const GElement &x, const GElement &y);
GElement g_inv(const GElement &x);

// Value of Xi_3(sum_j R(b_j) (x) mu(a_j)); zero iff the element lies in G.
LieElement g_condition(const GElement &x);

// Levels down to the handlebody: drop a_part, kill the A-colors in b_part.
LevineDerivation iota_star(const DerivationElement &d);

// Common reduction of the level-1 alternative and classical derivations:
// per a_i the pure-b weight-2 content (in Lambda^2 B), per b_i the mixed
// A (x) B class with mixed[i][k][l] the coefficient of a_k (x) b_l.
struct ProjectedRecord {
  int genus;
  std::vector<LieElement> a_rows;              // index i-1, over the B alphabet
  std::vector<std::vector<std::vector<Rat>>> mixed; // [i-1][k-1][l-1]

  bool is_zero() const;
  friend bool operator==(const ProjectedRecord &x, const ProjectedRecord &y) {
    return x.genus == y.genus && x.a_rows == y.a_rows && x.mixed == y.mixed;
  }
  std::string str() const;
};

ProjectedRecord p_project(const DerivationElement &d);
ProjectedRecord q_project(const ClassicalDerivation &d);

} // namespace torelli
