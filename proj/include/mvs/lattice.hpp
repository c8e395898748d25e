#pragma once

#include <string>
#include <vector>

#include "mvs/common.hpp"
#include "mvs/poset.hpp"

namespace mvs {

/// Bounded distributive lattice given by join/meet tables. The order is
/// derived: x <= y iff x v y = y.
struct FiniteDistLattice {
  int size = 0;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<int>> meet;
  int bottom = 0;
  int top = 0;
  std::vector<std::string> labels;

  int jn(int x, int y) const { return join[x][y]; }
  int mt(int x, int y) const { return meet[x][y]; }
  bool leq(int x, int y) const { return join[x][y] == y; }

  Poset order() const;

  static FiniteDistLattice chain(int k);
  /// Lattice of the given down-sets (of some poset) under union and
  /// intersection; down_sets must be closed under both.
  static FiniteDistLattice of_sets(const std::vector<Mask>& sets);
};

struct LatticeCheck {
  bool ok = true;
  std::string reason;
};

/// Lattice axioms, distributivity, bounds.
LatticeCheck validate_lattice(const FiniteDistLattice& l);

struct LatticeHom {
  FiniteDistLattice source;
  FiniteDistLattice target;
  std::vector<int> map;
};

LatticeCheck validate_lattice_hom(const LatticeHom& f);
bool lattice_hom_surjective(const LatticeHom& f);

bool lattice_isomorphic(const FiniteDistLattice& a, const FiniteDistLattice& b);

// ---------------------------------------------------------------------------
// Downsets and lattice ideals (member masks over the carrier)

Mask principal_downset(const FiniteDistLattice& l, int b);
bool is_lattice_ideal(const FiniteDistLattice& l, Mask m);  // join-closed downset

/// All lattice ideals / prime ideals, sorted by mask.
std::vector<Mask> lattice_ideals(const FiniteDistLattice& l);
std::vector<Mask> lattice_primes(const FiniteDistLattice& l);

/// Least ideal containing both.
Mask ideal_join(const FiniteDistLattice& l, Mask i, Mask j);

// ---------------------------------------------------------------------------
// Closed epimorphisms (three equivalent routes) and Stone duals

bool is_closed_epi_defn(const LatticeHom& f);
bool is_closed_epi_downsets(const LatticeHom& f);
bool is_closed_epi_ideals(const LatticeHom& f);

/// Dual map on prime ideals: P (prime of target) -> preimage (prime of
/// source). Entry k is the index into lattice_primes(source) of the
/// preimage of lattice_primes(target)[k].
std::vector<int> stone_dual(const LatticeHom& f);

/// Whether the Stone dual of f sends closed sets to closed sets.
/// Computed twice (ideal-theoretic criterion and directly on the finite
/// spectra); throws InternalConsistencyError if the routes disagree.
bool dual_preserves_closed(const LatticeHom& f);

/// Same verdict plus, on failure, the first source prime that contains
/// the preimage of some target ideal without being the preimage of a
/// prime above it. Masks are element sets of the respective carriers.
struct ClosedDualReport {
  bool preserves = true;
  Mask witness_prime = 0;
  Mask witness_ideal = 0;
};

ClosedDualReport dual_preserves_closed_report(const LatticeHom& f);

/// The closure-equality characterization of duals of closed epimorphisms:
/// preimage commutation, ideals-to-ideals, and the closure identity
/// cl(g(C & D)) = cl(g(C)) & cl(g(D)) over all closed pairs.
bool dual_closure_equalities(const LatticeHom& f);

}  // namespace mvs
