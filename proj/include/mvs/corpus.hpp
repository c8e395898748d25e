#pragma once

#include <vector>

#include "mvs/lattice.hpp"
#include "mvs/mv_algebra.hpp"

namespace mvs {

struct CorpusSpec {
  int max_algebra_size = 6;
  int max_lattice_size = 6;
  std::vector<std::vector<int>> chain_shapes = {
      {1, 1}, {1, 2}, {1, 3}, {4}, {2, 2}, {1, 1, 1}, {3, 3}};
  unsigned seed = 20260823;
};

/// Every MV-algebra on n elements up to isomorphism, by exhaustive table
/// search with incremental axiom pruning. n <= 6.
std::vector<FiniteMvAlgebra> all_mv_algebras(int n);

/// Product of the Lukasiewicz chains of the given indices.
FiniteMvAlgebra chain_products(const std::vector<int>& shape);

/// Every bounded distributive lattice with at most max_size elements, up
/// to isomorphism, as down-set lattices of small posets. max_size <= 6.
std::vector<FiniteDistLattice> all_dist_lattices(int max_size);

/// All posets on n elements up to isomorphism.
std::vector<Poset> all_posets(int n);

/// Every surjective lattice homomorphism between corpus lattices of at
/// most max_size elements, by exhaustive map search. max_size <= 6.
std::vector<LatticeHom> all_surjective_lattice_homs(int max_size);

/// The full algebra corpus for a spec: exhaustive families plus chain
/// products, validated.
std::vector<FiniteMvAlgebra> corpus_algebras(const CorpusSpec& spec);

}  // namespace mvs
