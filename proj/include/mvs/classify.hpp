#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvs/functors.hpp"
#include "mvs/mv_algebra.hpp"
#include "mvs/spectra.hpp"

namespace mvs {

/// Exactly one of x and neg x has finite order, for every x. For finite
/// algebras the verdict is cross-checked against A = Rad u negRad and
/// against the odot-power criterion; disagreement throws.
bool is_perfect(const FiniteMvAlgebra& a);
bool is_perfect(const SymbolicMvAlgebra& s);

/// A/I is perfect; cross-checked against the power biconditional on I.
bool is_perfect_ideal(const FiniteMvAlgebra& a, const IdealSet& i);

/// Unique maximal ideal; cross-checked against the ord criterion.
bool is_local(const FiniteMvAlgebra& a);

/// x odot y in I forces an odot-power of x or y into I. Rejects I = A.
bool is_primary(const FiniteMvAlgebra& a, const IdealSet& i);

/// radical(A) = {0}.
bool is_semisimple(const FiniteMvAlgebra& a);

/// M maximal with 2-element quotient.
bool is_supermaximal(const FiniteMvAlgebra& a, const IdealSet& m);

/// Number of radical classes minus one (so finite chains have rank equal
/// to their Lukasiewicz index).
int rank(const FiniteMvAlgebra& a);
int rank(const SymbolicMvAlgebra& s);
int rank_of_prime(const FiniteMvAlgebra& a, const IdealSet& p);

/// Membership in the variety of the Chang algebra, computed three ways
/// (supermaximality of maximals, perfection of primes, perfection through
/// the quotient presentation); routes must agree.
bool in_VC(const FiniteMvAlgebra& a);
bool in_VC(const SymbolicMvAlgebra& s);

/// Membership in the m-th Komori variety: all prime ranks divide m;
/// cross-checked on maximals only.
bool in_VKm(const FiniteMvAlgebra& a, int m);

/// The three equivalent local-spectrum conditions for A/I where C = V(I).
struct LocalProfile {
  bool quotient_local = false;
  bool one_closed_point = false;
  bool intersection_primary = false;
  bool consistent() const {
    return quotient_local == one_closed_point &&
           one_closed_point == intersection_primary;
  }
};

LocalProfile local_spectrum_profile(const FiniteMvAlgebra& a,
                                    const IdealSet& i);

struct ClassificationReport {
  bool perfect = false;
  bool local = false;
  bool semisimple = false;
  int rank_value = 0;
  bool in_vc = false;
  std::map<int, bool> in_vkm;
  // witnesses for negative verdicts: element whose orders break
  // perfection/locality, extra maximal ideal masks, etc.
  std::optional<int> perfect_witness;
  std::optional<int> local_witness;
  std::vector<Mask> maximal_ideals;
  Mask radical_mask = 1;
};

ClassificationReport classify(const FiniteMvAlgebra& a,
                              const std::vector<int>& vkm_values);

}  // namespace mvs
