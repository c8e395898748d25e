#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mvs/common.hpp"

namespace mvs {

/// Finite partial order given by its comparability matrix.
struct Poset {
  int n = 0;
  std::vector<std::vector<bool>> leq;  // leq[x][y] means x <= y

  static Poset chain(int k);
  static Poset antichain(int k);

  bool valid() const;  // reflexive, antisymmetric, transitive
  bool is_chain() const;

  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;

  Mask up_set(int x) const;
  Mask down_set(int x) const;
  bool is_up_set(Mask m) const;
  bool is_down_set(Mask m) const;

  /// All down-sets, sorted by mask value.
  std::vector<Mask> all_down_sets() const;
  std::vector<Mask> all_up_sets() const;

  /// Every principal up-set is totally ordered.
  bool is_root_system() const;
};

/// Order isomorphism by backtracking with degree-profile pruning.
bool poset_isomorphic(const Poset& a, const Poset& b);

}  // namespace mvs
