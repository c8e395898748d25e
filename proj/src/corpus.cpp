#include "mvs/corpus.hpp"

#include <algorithm>

#include "mvs/functors.hpp"

namespace mvs {

namespace {

/// Involutions of {0..n-1} with neg[0] = n-1 pinned (the top element).
void involutions(int n, std::vector<int>& neg, int from,
                 std::vector<std::vector<int>>& out) {
  int i = from;
  while (i < n && neg[i] >= 0) ++i;
  if (i == n) { out.push_back(neg); return; }
  neg[i] = i;
  involutions(n, neg, i + 1, out);
  neg[i] = -1;
  for (int j = i + 1; j < n; ++j) {
    if (neg[j] >= 0) continue;
    neg[i] = j;
    neg[j] = i;
    involutions(n, neg, i + 1, out);
    neg[i] = neg[j] = -1;
  }
}

struct TableSearch {
  int n;
  std::vector<int> neg;
  std::vector<std::vector<int>> op;  // -1 = undefined
  std::vector<std::pair<int, int>> slots;
  std::vector<FiniteMvAlgebra>* found = nullptr;

  int at(int x, int y) const { return op[x][y]; }

  /// Checks every fully determined axiom instance. Partial tables only
  /// fail here for reasons every completion would inherit.
  bool consistent() const {
    // lukasiewicz: neg(neg x + y) + y symmetric in x, y
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int t1 = at(neg[x], y);
        int t2 = at(neg[y], x);
        if (t1 < 0 || t2 < 0) continue;
        int l = at(neg[t1], y);
        int r = at(neg[t2], x);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    // associativity
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y)
        for (int z = y; z < n; ++z) {
          int xy = at(x, y);
          int yz = at(y, z);
          if (xy < 0 || yz < 0) continue;
          int l = at(xy, z);
          int r = at(x, yz);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
    return true;
  }

  void run(size_t k) {
    if (k == slots.size()) {
      FiniteMvAlgebra a;
      a.size = n;
      a.oplus = op;
      a.neg = neg;
      if (!validate_algebra(a).ok()) return;
      for (const auto& seen : *found)
        if (mv_isomorphic(seen, a)) return;
      found->push_back(a);
      return;
    }
    auto [x, y] = slots[k];
    const int one = n - 1;
    for (int v = 0; v < n; ++v) {
      // x + y = 0 forces x = y = 0; x + neg x = 1: safe cuts, both are
      // theorems of the full axiom set
      if (v == 0) continue;
      if (y == neg[x] && v != one) continue;
      op[x][y] = op[y][x] = v;
      if (consistent()) run(k + 1);
      op[x][y] = op[y][x] = -1;
    }
  }
};

}  // namespace

std::vector<FiniteMvAlgebra> all_mv_algebras(int n) {
  if (n < 1 || n > 6) throw InputError("all_mv_algebras: size must be 1..6");
  std::vector<FiniteMvAlgebra> out;
  if (n == 1) {
    out.push_back(trivial_algebra());
    return out;
  }
  std::vector<int> seed(n, -1);
  seed[0] = n - 1;
  seed[n - 1] = 0;
  std::vector<std::vector<int>> negs;
  involutions(n, seed, 1, negs);
  for (const auto& neg : negs) {
    TableSearch s;
    s.n = n;
    s.neg = neg;
    s.op.assign(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x) {
      s.op[0][x] = s.op[x][0] = x;          // x + 0 = x
      s.op[n - 1][x] = s.op[x][n - 1] = n - 1;  // x + 1 = 1
    }
    for (int x = 1; x < n - 1; ++x)
      for (int y = x; y < n - 1; ++y) s.slots.push_back({x, y});
    s.found = &out;
    if (s.consistent()) s.run(0);
  }
  return out;
}

FiniteMvAlgebra chain_products(const std::vector<int>& shape) {
  if (shape.empty()) throw InputError("chain_products: empty shape");
  long long total = 1;
  for (int m : shape) {
    if (m < 1) throw InputError("chain_products: indices must be positive");
    total *= m + 1;
    check_size_guard(static_cast<int>(std::min<long long>(total, 1 << 20)),
                     "chain_products");
  }
  FiniteMvAlgebra acc = lukasiewicz(shape[0]);
  for (size_t i = 1; i < shape.size(); ++i)
    acc = product(acc, lukasiewicz(shape[i]));
  return acc;
}

std::vector<Poset> all_posets(int n) {
  if (n < 0 || n > 5) throw InputError("all_posets: size must be 0..5");
  std::vector<Poset> out;
  if (n == 0) {
    out.push_back(Poset{0, {}});
    return out;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.push_back({i, j});
  const int bits = static_cast<int>(pairs.size());
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << bits); ++m) {
    Poset p;
    p.n = n;
    p.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) p.leq[i][i] = true;
    for (int k = 0; k < bits; ++k)
      if (m & (std::uint32_t{1} << k)) p.leq[pairs[k].first][pairs[k].second] = true;
    if (!p.valid()) continue;
    bool fresh = true;
    for (const auto& seen : out)
      if (poset_isomorphic(seen, p)) { fresh = false; break; }
    if (fresh) out.push_back(p);
  }
  return out;
}

std::vector<FiniteDistLattice> all_dist_lattices(int max_size) {
  if (max_size < 1 || max_size > 6)
    throw InputError("all_dist_lattices: size must be 1..6");
  // Birkhoff: each one is the down-set lattice of its poset of
  // join-irreducibles, so posets up to 5 points cover sizes up to 6.
  std::vector<FiniteDistLattice> out;
  for (int k = 0; k <= std::min(5, max_size - 1); ++k) {
    for (const auto& p : all_posets(k)) {
      auto downs = p.all_down_sets();
      if (static_cast<int>(downs.size()) > max_size) continue;
      auto l = FiniteDistLattice::of_sets(downs);
      bool fresh = true;
      for (const auto& seen : out)
        if (seen.size == l.size && lattice_isomorphic(seen, l)) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(l);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FiniteDistLattice& a, const FiniteDistLattice& b) {
                     return a.size < b.size;
                   });
  return out;
}

std::vector<LatticeHom> all_surjective_lattice_homs(int max_size) {
  if (max_size < 1 || max_size > 6)
    throw InputError("all_surjective_lattice_homs: size must be 1..6");
  auto lattices = all_dist_lattices(max_size);
  std::vector<LatticeHom> out;
  for (const auto& src : lattices) {
    for (const auto& tgt : lattices) {
      if (tgt.size > src.size) continue;
      // bottom and top are pinned; enumerate the rest as a mixed-radix
      // counter
      std::vector<int> free;
      for (int x = 0; x < src.size; ++x)
        if (x != src.bottom && x != src.top) free.push_back(x);
      std::vector<int> digits(free.size(), 0);
      while (true) {
        LatticeHom h;
        h.source = src;
        h.target = tgt;
        h.map.assign(src.size, 0);
        h.map[src.bottom] = tgt.bottom;
        h.map[src.top] = tgt.top;
        for (size_t i = 0; i < free.size(); ++i) h.map[free[i]] = digits[i];
        if (validate_lattice_hom(h).ok && lattice_hom_surjective(h))
          out.push_back(h);
        size_t c = 0;
        while (c < digits.size() && ++digits[c] == tgt.size) digits[c++] = 0;
        if (c == digits.size()) break;
      }
    }
  }
  return out;
}

std::vector<FiniteMvAlgebra> corpus_algebras(const CorpusSpec& spec) {
  std::vector<FiniteMvAlgebra> out;
  for (int n = 1; n <= spec.max_algebra_size; ++n)
    for (auto& a : all_mv_algebras(n)) out.push_back(std::move(a));
  for (const auto& shape : spec.chain_shapes) {
    auto a = chain_products(shape);
    if (!validate_algebra(a).ok())
      throw InternalConsistencyError("corpus_algebras: invalid chain product");
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace mvs
