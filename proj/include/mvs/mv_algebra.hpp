#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mvs/common.hpp"
#include "mvs/poset.hpp"

namespace mvs {

/// A finite MV-algebra given by its operation tables. Index 0 is the
/// constant 0; the top element is neg[0].
struct FiniteMvAlgebra {
  int size = 0;
  std::vector<std::vector<int>> oplus;  // size x size
  std::vector<int> neg;                 // size
  std::vector<std::string> labels;      // optional, empty or size entries

  int zero() const { return 0; }
  int one() const { return neg[0]; }

  int op(int x, int y) const { return oplus[x][y]; }
  int nn(int x) const { return neg[x]; }

  // Derived connectives, expanded from the defining identities.
  int join(int x, int y) const { return op(nn(op(nn(x), y)), y); }
  int meet(int x, int y) const { return nn(join(nn(x), nn(y))); }
  int odot(int x, int y) const { return nn(op(nn(x), nn(y))); }
  int ominus(int x, int y) const { return nn(op(nn(x), y)); }
  bool leq(int x, int y) const { return meet(x, y) == x; }

  std::string label(int x) const;
};

enum class DerivedOp { Join, Meet, Odot, Ominus, Leq };

/// Result of derived_op: an element index, or a boolean for Leq.
using DerivedValue = std::variant<int, bool>;

DerivedValue derived_op(const FiniteMvAlgebra& a, DerivedOp op, int x, int y);

struct AxiomViolation {
  std::string axiom;            // which law failed
  std::vector<int> witness;     // element tuple
};

struct ValidationReport {
  bool table_well_formed = true;
  std::vector<AxiomViolation> violations;
  bool ok() const { return table_well_formed && violations.empty(); }
  std::string describe() const;
};

/// Exhaustive check of the MV axioms on raw tables. Malformed tables
/// (indices out of range, wrong shapes) are reported via table_well_formed
/// before any axiom is evaluated.
ValidationReport validate_algebra(const FiniteMvAlgebra& a);

/// Least n with the n-fold sum of x equal to 1; nullopt means infinite
/// order (the oplus-orbit of x stabilizes below 1).
std::optional<int> ord(const FiniteMvAlgebra& a, int x);

// ---------------------------------------------------------------------------
// Terms

struct MvTerm;
using MvTermPtr = std::shared_ptr<const MvTerm>;

/// Expression tree over variables, 0 and the connectives oplus, neg.
/// Derived connectives are expanded at construction.
struct MvTerm {
  enum class Kind { Zero, Var, Neg, Oplus } kind;
  int var_index = -1;
  MvTermPtr lhs, rhs;

  static MvTermPtr zero();
  static MvTermPtr one();
  static MvTermPtr var(int i);
  static MvTermPtr neg(MvTermPtr t);
  static MvTermPtr oplus(MvTermPtr l, MvTermPtr r);
  static MvTermPtr join(MvTermPtr l, MvTermPtr r);
  static MvTermPtr meet(MvTermPtr l, MvTermPtr r);
  static MvTermPtr odot(MvTermPtr l, MvTermPtr r);
  static MvTermPtr ominus(MvTermPtr l, MvTermPtr r);

  int max_var() const;
};

int eval_term(const FiniteMvAlgebra& a, const MvTermPtr& t,
              const std::vector<int>& assignment);

// ---------------------------------------------------------------------------
// Homomorphisms, products, quotients

struct FiniteMvAlgebraRef {
  const FiniteMvAlgebra* ptr = nullptr;
  const FiniteMvAlgebra& get() const { return *ptr; }
};

struct MvHom {
  FiniteMvAlgebra source;
  FiniteMvAlgebra target;
  std::vector<int> map;  // source index -> target index
};

struct HomCheck {
  bool ok = false;
  std::string reason;
  std::vector<int> witness;  // violating pair (or singleton)
};

HomCheck validate_hom(const MvHom& h);

bool is_surjective(const MvHom& h);

/// Kernel of a validated hom: preimage of 0.
Mask hom_kernel(const MvHom& h);

/// Componentwise product on the cartesian carrier; pair (x, y) is encoded
/// as x * |B| + y.
FiniteMvAlgebra product(const FiniteMvAlgebra& a, const FiniteMvAlgebra& b);

/// The 1-element algebra.
FiniteMvAlgebra trivial_algebra();

/// Brute-force isomorphism search (bijections fixing 0).
bool mv_isomorphic(const FiniteMvAlgebra& a, const FiniteMvAlgebra& b);

/// Contains 0, closed under oplus, downward closed.
bool is_ideal_mask(const FiniteMvAlgebra& a, Mask members);

struct QuotientResult {
  FiniteMvAlgebra algebra;
  MvHom canonical;  // the surjection x -> x/I
};

/// Quotient by the congruence x ~ y iff (x ominus y) oplus (y ominus x)
/// lies in the ideal (given as a member mask). Throws InputError if the
/// mask is not an ideal.
QuotientResult quotient(const FiniteMvAlgebra& a, Mask ideal_members);

}  // namespace mvs
