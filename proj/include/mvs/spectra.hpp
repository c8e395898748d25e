#pragma once

#include <string>
#include <vector>

#include "mvs/lattice.hpp"
#include "mvs/mv_algebra.hpp"
#include "mvs/poset.hpp"

namespace mvs {

/// An ideal of a finite MV-algebra, as a member mask over the carrier.
struct IdealSet {
  Mask members = 1;
};

bool is_ideal(const FiniteMvAlgebra& a, const IdealSet& i);

/// Least ideal containing the seed set (fixpoint of oplus-closure and
/// downward closure, always containing 0).
IdealSet ideal_generated(const FiniteMvAlgebra& a, Mask seed);

/// All ideals, in increasing mask order.
std::vector<IdealSet> enumerate_ideals(const FiniteMvAlgebra& a);

bool is_prime(const FiniteMvAlgebra& a, const IdealSet& i);

/// The prime ideals ordered by inclusion; doubles as the finite spectral
/// space (closed sets are the up-sets). For symbolic spectra the point
/// masks are absent and only labels and the order carry meaning.
struct SpecPoset {
  std::vector<IdealSet> points;     // may be empty for symbolic spectra
  std::vector<std::string> labels;  // one per point
  Poset order;

  static SpecPoset labelled_chain(const std::vector<std::string>& labels);
};

SpecPoset spec(const FiniteMvAlgebra& a);

/// Indices (into spec.points) of the order-maximal primes.
std::vector<int> maximals(const SpecPoset& s);

/// Maximal ideals of the algebra itself.
std::vector<IdealSet> maximal_ideals(const FiniteMvAlgebra& a);

/// V(I): primes containing I, as a mask over the spec points (an up-set).
Mask closed_of_ideal(const SpecPoset& s, const IdealSet& i);
/// O(a): primes not containing a, as a mask over the spec points.
Mask open_of_element(const SpecPoset& s, int a);

/// Intersection of all maximal ideals.
IdealSet radical(const FiniteMvAlgebra& a);

/// A finite topology as a list of closed sets over {0..n-1}.
struct FiniteTopology {
  int points = 0;
  std::vector<Mask> closed_sets;

  bool valid() const;  // contains empty/full, closed under union/intersection
  std::vector<Mask> open_sets() const;
  Mask closure(Mask x) const;  // smallest closed superset
};

/// Closed sets = all up-sets of the prime poset.
FiniteTopology zariski_topology(const SpecPoset& s);

/// Every irreducible closed set is the closure of exactly one point.
bool is_sober(const FiniteTopology& t);
/// Sober + compact + compact opens form a basis closed under binary
/// intersection. Finiteness makes compactness automatic, but each clause
/// is still checked literally.
bool is_spectral(const FiniteTopology& t);

bool is_root_system(const SpecPoset& s);

/// The lattice of compact open subsets: all down-sets of the prime poset
/// under union and intersection.
FiniteDistLattice compact_opens_lattice(const SpecPoset& s);

/// True iff the compact-open lattices are isomorphic; for finite posets
/// this coincides with order isomorphism, and both routes are computed
/// and must agree.
bool homeomorphic(const SpecPoset& s1, const SpecPoset& s2);

/// Preimage of a prime ideal of the target under a validated hom.
IdealSet pullback_prime(const MvHom& h, const IdealSet& prime_of_target);

}  // namespace mvs
