#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mvs/mv_algebra.hpp"
#include "mvs/spectra.hpp"

namespace mvs {

/// Lexicographic product of copies of Z and Q: elements are tuples
/// compared lexicographically, added coordinatewise. Rank 0 is the
/// trivial group.
struct LexGroup {
  int rank = 0;
  std::vector<bool> integer_coord;  // per coordinate: Z (true) or Q (false)
  std::string name = "0";

  using Elem = std::vector<Rational>;

  static LexGroup trivial();
  static LexGroup Z();
  static LexGroup Q();
  static LexGroup ZxZ();
  /// Prepends an integer coordinate (the construction underlying delta).
  static LexGroup z_lex(const LexGroup& g);
  /// Parses "0", "Z", "Q", "ZxZ", "ZxZxZ", "ZxQ".
  static LexGroup parse(const std::string& s);

  Elem zero() const { return Elem(rank, Rational(0)); }
  Elem add(const Elem& a, const Elem& b) const;
  Elem negate(const Elem& a) const;
  int cmp(const Elem& a, const Elem& b) const;  // lex: -1, 0, +1
  bool contains(const Elem& a) const;           // arity + integrality
};

struct UnitalLGroup {
  LexGroup group;
  LexGroup::Elem unit;

  /// u > 0 with positive leading coordinate (the lex strong-unit
  /// criterion).
  bool strong_unit_ok() const;
};

enum class SymPresentation { GammaOfUnitalLex, Chang, Komori };

/// An interval algebra [0, u] of a unital lex group, never materialized:
/// operations are closed-form on tuples.
struct SymbolicMvAlgebra {
  SymPresentation presentation = SymPresentation::GammaOfUnitalLex;
  int komori_m = 0;  // set for Chang (1) and Komori presentations
  UnitalLGroup gu;

  using Elem = LexGroup::Elem;

  bool contains(const Elem& e) const;
  void require(const Elem& e) const;

  Elem zero() const { return gu.group.zero(); }
  Elem one() const { return gu.unit; }
  Elem oplus(const Elem& a, const Elem& b) const;  // (a + b) ^ u
  Elem neg(const Elem& a) const;                   // u - a
  Elem join(const Elem& a, const Elem& b) const;
  Elem meet(const Elem& a, const Elem& b) const;
  Elem odot(const Elem& a, const Elem& b) const;

  /// Least n with the n-fold sum reaching 1, nullopt if none (finite
  /// order iff the leading coordinate is positive).
  std::optional<int> ord(const Elem& e) const;

  std::string show(const Elem& e) const;  // tuple, or nc / 1-nc for Chang
};

using GammaResult = std::variant<FiniteMvAlgebra, SymbolicMvAlgebra>;

/// Interval algebra of (G, u); materialized as a finite table when G = Z.
GammaResult gamma(const UnitalLGroup& gu);

/// gamma(Z lex G, (1,0,...,0)).
GammaResult delta(const LexGroup& g);

SymbolicMvAlgebra komori(int m);
SymbolicMvAlgebra chang_algebra();
FiniteMvAlgebra lukasiewicz(int m);  // the m+1 element chain

/// Chang elements in the nc / 1-nc notation.
struct ChangElem {
  bool upper = false;  // false: nc, true: 1 - nc
  Integer n = 0;       // n >= 0
};

ChangElem chang_oplus(const ChangElem& x, const ChangElem& y);
ChangElem chang_neg(const ChangElem& x);
SymbolicMvAlgebra::Elem chang_encode(const ChangElem& x);

/// Evaluate a term over a symbolic algebra.
SymbolicMvAlgebra::Elem eval_term_symbolic(
    const SymbolicMvAlgebra& s, const MvTermPtr& t,
    const std::vector<SymbolicMvAlgebra::Elem>& assignment);

// ---------------------------------------------------------------------------
// Belluce and principal-ideal lattices of finite algebras

/// Quotient of the carrier by "member of the same prime ideals", with the
/// induced bounded distributive lattice structure.
FiniteDistLattice belluce(const FiniteMvAlgebra& a);

/// Principal ideals ordered by inclusion; join and meet verified
/// principal (generators a+b and a^b).
FiniteDistLattice idc(const FiniteMvAlgebra& a);

// ---------------------------------------------------------------------------
// Symbolic spectra

/// The chain of prime ideals induced by the convex-subgroup chain of the
/// lex group. Supported for Komori/Chang and gamma presentations of rank
/// at most 4.
SpecPoset symbolic_spec(const SymbolicMvAlgebra& s);

/// Poset of prime l-ideals: the proper convex subgroups of the lex chain.
SpecPoset lgroup_prime_spectrum(const LexGroup& g);

/// Desk-scale spectrum comparison: Spec(delta(G)) minus its
/// unique closed point is order-isomorphic to the prime spectrum of G.
bool verify_lspec(const LexGroup& g);

}  // namespace mvs
