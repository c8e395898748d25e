#include "mvs/lattice.hpp"

#include <algorithm>
#include <set>

namespace mvs {

Poset FiniteDistLattice::order() const {
  Poset p;
  p.n = size;
  p.leq.assign(size, std::vector<bool>(size, false));
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) p.leq[x][y] = leq(x, y);
  return p;
}

FiniteDistLattice FiniteDistLattice::chain(int k) {
  FiniteDistLattice l;
  l.size = k;
  l.join.assign(k, std::vector<int>(k));
  l.meet.assign(k, std::vector<int>(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      l.join[x][y] = std::max(x, y);
      l.meet[x][y] = std::min(x, y);
    }
  l.bottom = 0;
  l.top = k - 1;
  return l;
}

FiniteDistLattice FiniteDistLattice::of_sets(const std::vector<Mask>& sets) {
  if (sets.empty()) throw InputError("of_sets: empty family");
  std::vector<Mask> s(sets);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  auto idx = [&](Mask m) {
    auto it = std::lower_bound(s.begin(), s.end(), m);
    if (it == s.end() || *it != m)
      throw InputError("of_sets: family not closed under union/intersection");
    return static_cast<int>(it - s.begin());
  };
  FiniteDistLattice l;
  l.size = static_cast<int>(s.size());
  l.join.assign(l.size, std::vector<int>(l.size));
  l.meet.assign(l.size, std::vector<int>(l.size));
  for (int i = 0; i < l.size; ++i)
    for (int j = 0; j < l.size; ++j) {
      l.join[i][j] = idx(s[i] | s[j]);
      l.meet[i][j] = idx(s[i] & s[j]);
    }
  Mask all = 0, none = ~Mask{0};
  for (Mask m : s) { all |= m; none &= m; }
  l.bottom = idx(none & all);
  l.top = idx(all);
  return l;
}

LatticeCheck validate_lattice(const FiniteDistLattice& l) {
  const int n = l.size;
  if (n <= 0 || static_cast<int>(l.join.size()) != n ||
      static_cast<int>(l.meet.size()) != n)
    return {false, "malformed tables"};
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(l.join[x].size()) != n ||
        static_cast<int>(l.meet[x].size()) != n)
      return {false, "malformed tables"};
    for (int y = 0; y < n; ++y)
      if (l.join[x][y] < 0 || l.join[x][y] >= n || l.meet[x][y] < 0 ||
          l.meet[x][y] >= n)
        return {false, "index out of range"};
  }
  for (int x = 0; x < n; ++x) {
    if (l.jn(x, x) != x || l.mt(x, x) != x) return {false, "idempotence"};
    if (l.jn(l.bottom, x) != x) return {false, "bottom"};
    if (l.mt(l.top, x) != x) return {false, "top"};
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (l.jn(x, y) != l.jn(y, x) || l.mt(x, y) != l.mt(y, x))
        return {false, "commutativity"};
      if (l.jn(x, l.mt(x, y)) != x || l.mt(x, l.jn(x, y)) != x)
        return {false, "absorption"};
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (l.jn(l.jn(x, y), z) != l.jn(x, l.jn(y, z)))
          return {false, "join associativity"};
        if (l.mt(l.mt(x, y), z) != l.mt(x, l.mt(y, z)))
          return {false, "meet associativity"};
        if (l.mt(x, l.jn(y, z)) != l.jn(l.mt(x, y), l.mt(x, z)))
          return {false, "distributivity"};
      }
  return {};
}

LatticeCheck validate_lattice_hom(const LatticeHom& f) {
  const auto& a = f.source;
  const auto& b = f.target;
  if (static_cast<int>(f.map.size()) != a.size)
    return {false, "map arity mismatch"};
  for (int v : f.map)
    if (v < 0 || v >= b.size) return {false, "map value out of range"};
  if (f.map[a.bottom] != b.bottom) return {false, "bottom not preserved"};
  if (f.map[a.top] != b.top) return {false, "top not preserved"};
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) {
      if (f.map[a.jn(x, y)] != b.jn(f.map[x], f.map[y]))
        return {false, "join not preserved"};
      if (f.map[a.mt(x, y)] != b.mt(f.map[x], f.map[y]))
        return {false, "meet not preserved"};
    }
  return {};
}

bool lattice_hom_surjective(const LatticeHom& f) {
  std::set<int> image(f.map.begin(), f.map.end());
  return static_cast<int>(image.size()) == f.target.size;
}

bool lattice_isomorphic(const FiniteDistLattice& a,
                        const FiniteDistLattice& b) {
  // joins and meets are determined by the order, so order isomorphism is
  // lattice isomorphism
  return poset_isomorphic(a.order(), b.order());
}

Mask principal_downset(const FiniteDistLattice& l, int b) {
  Mask m = 0;
  for (int x = 0; x < l.size; ++x)
    if (l.leq(x, b)) m |= Mask{1} << x;
  return m;
}

bool is_lattice_ideal(const FiniteDistLattice& l, Mask m) {
  if (!has_bit(m, l.bottom)) return false;
  auto elems = mask_to_vec(m);
  for (int x : elems) {
    if (x >= l.size) return false;
    for (int y : elems)
      if (!has_bit(m, l.jn(x, y))) return false;
    for (int y = 0; y < l.size; ++y)
      if (l.leq(y, x) && !has_bit(m, y)) return false;
  }
  return true;
}

namespace {

Mask ideal_closure(const FiniteDistLattice& l, Mask seed) {
  Mask m = seed | (Mask{1} << l.bottom);
  bool changed = true;
  while (changed) {
    changed = false;
    auto elems = mask_to_vec(m);
    for (int x : elems) {
      for (int y : elems) {
        int j = l.jn(x, y);
        if (!has_bit(m, j)) { m |= Mask{1} << j; changed = true; }
      }
      for (int y = 0; y < l.size; ++y)
        if (l.leq(y, x) && !has_bit(m, y)) {
          m |= Mask{1} << y;
          changed = true;
        }
    }
  }
  return m;
}

}  // namespace

std::vector<Mask> lattice_ideals(const FiniteDistLattice& l) {
  check_size_guard(l.size, "lattice_ideals");
  std::set<Mask> seen;
  std::vector<Mask> frontier = {ideal_closure(l, 0)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    Mask m = frontier.back();
    frontier.pop_back();
    for (int a = 0; a < l.size; ++a) {
      if (has_bit(m, a)) continue;
      Mask next = ideal_closure(l, m | (Mask{1} << a));
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return std::vector<Mask>(seen.begin(), seen.end());
}

std::vector<Mask> lattice_primes(const FiniteDistLattice& l) {
  std::vector<Mask> out;
  Mask all = full_mask(l.size);
  for (Mask i : lattice_ideals(l)) {
    if (i == all) continue;
    bool prime = true;
    for (int x = 0; x < l.size && prime; ++x)
      for (int y = 0; y < l.size && prime; ++y)
        if (has_bit(i, l.mt(x, y)) && !has_bit(i, x) && !has_bit(i, y))
          prime = false;
    if (prime) out.push_back(i);
  }
  return out;
}

Mask ideal_join(const FiniteDistLattice& l, Mask i, Mask j) {
  if (!is_lattice_ideal(l, i) || !is_lattice_ideal(l, j))
    throw InputError("ideal_join: inputs must be lattice ideals");
  return ideal_closure(l, i | j);
}

// ---------------------------------------------------------------------------
// Closedness predicates

namespace {

void require_surjective(const LatticeHom& f, const char* who) {
  auto c = validate_lattice_hom(f);
  if (!c.ok) throw InputError(std::string(who) + ": not a hom: " + c.reason);
  if (!lattice_hom_surjective(f))
    throw InputError(std::string(who) + ": hom is not surjective");
}

Mask preimage(const LatticeHom& f, Mask target_set) {
  Mask m = 0;
  for (int x = 0; x < f.source.size; ++x)
    if (has_bit(target_set, f.map[x])) m |= Mask{1} << x;
  return m;
}

/// Elementwise join of two subsets: { u v v : u in B, v in C }.
Mask setwise_join(const FiniteDistLattice& l, Mask b, Mask c) {
  Mask out = 0;
  for (int u : mask_to_vec(b))
    for (int v : mask_to_vec(c)) out |= Mask{1} << l.jn(u, v);
  return out;
}

}  // namespace

bool is_closed_epi_defn(const LatticeHom& f) {
  require_surjective(f, "is_closed_epi_defn");
  const auto& l = f.source;
  const auto& lp = f.target;
  // Surjective case: the witness a1 ranges over the whole fiber of b, so
  // the hypothesis is stated on b in the target rather than on a chosen
  // preimage.
  for (int a0 = 0; a0 < l.size; ++a0)
    for (int b = 0; b < lp.size; ++b)
      for (int c = 0; c < lp.size; ++c) {
        if (!lp.leq(f.map[a0], lp.jn(b, c))) continue;
        bool found = false;
        for (int a1 = 0; a1 < l.size && !found; ++a1) {
          if (f.map[a1] != b) continue;
          for (int x = 0; x < l.size && !found; ++x)
            if (l.leq(a0, l.jn(a1, x)) && lp.leq(f.map[x], c)) found = true;
        }
        if (!found) return false;
      }
  return true;
}

bool is_closed_epi_downsets(const LatticeHom& f) {
  require_surjective(f, "is_closed_epi_downsets");
  const auto& l = f.source;
  const auto& lp = f.target;
  for (int b = 0; b < lp.size; ++b)
    for (int c = 0; c < lp.size; ++c) {
      Mask lhs = preimage(f, setwise_join(lp, principal_downset(lp, b),
                                          principal_downset(lp, c)));
      Mask rhs = setwise_join(l, preimage(f, principal_downset(lp, b)),
                              preimage(f, principal_downset(lp, c)));
      if (lhs & ~rhs) return false;
    }
  return true;
}

bool is_closed_epi_ideals(const LatticeHom& f) {
  require_surjective(f, "is_closed_epi_ideals");
  auto ideals = lattice_ideals(f.target);
  for (Mask i : ideals)
    for (Mask j : ideals) {
      Mask lhs = preimage(f, ideal_join(f.target, i, j));
      Mask rhs = ideal_join(f.source, preimage(f, i), preimage(f, j));
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<int> stone_dual(const LatticeHom& f) {
  auto c = validate_lattice_hom(f);
  if (!c.ok) throw InputError("stone_dual: not a hom: " + c.reason);
  auto src_primes = lattice_primes(f.source);
  auto tgt_primes = lattice_primes(f.target);
  std::vector<int> out;
  out.reserve(tgt_primes.size());
  for (Mask p : tgt_primes) {
    Mask pre = preimage(f, p);
    auto it = std::find(src_primes.begin(), src_primes.end(), pre);
    if (it == src_primes.end())
      throw InternalConsistencyError(
          "stone_dual: preimage of a prime is not prime");
    out.push_back(static_cast<int>(it - src_primes.begin()));
  }
  return out;
}

namespace {

/// Zariski closure of a set of primes (indices into `primes`):
/// all primes containing the intersection of the set's members.
Mask spec_closure(const std::vector<Mask>& primes, Mask point_set,
                  int carrier_size) {
  Mask inter = full_mask(carrier_size);
  for (int i = 0; i < static_cast<int>(primes.size()); ++i)
    if (has_bit(point_set, i)) inter &= primes[i];
  if (point_set == 0) return 0;  // closure of the empty set is empty
  Mask out = 0;
  for (int i = 0; i < static_cast<int>(primes.size()); ++i)
    if ((inter & ~primes[i]) == 0) out |= Mask{1} << i;
  return out;
}

Poset inclusion_poset(const std::vector<Mask>& primes) {
  Poset p;
  p.n = static_cast<int>(primes.size());
  p.leq.assign(p.n, std::vector<bool>(p.n, false));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      p.leq[i][j] = (primes[i] & ~primes[j]) == 0;
  return p;
}

}  // namespace

ClosedDualReport dual_preserves_closed_report(const LatticeHom& f) {
  auto src_primes = lattice_primes(f.source);
  auto tgt_ideals = lattice_ideals(f.target);
  auto tgt_primes = lattice_primes(f.target);
  ClosedDualReport r;
  // report the largest offending prime: deterministic, and the most
  // informative witness (it sits highest in the spectrum)
  std::reverse(src_primes.begin(), src_primes.end());
  for (Mask p : src_primes) {
    for (Mask i : tgt_ideals) {
      if (preimage(f, i) & ~p) continue;
      bool found = false;
      for (Mask q : tgt_primes)
        if ((i & ~q) == 0 && preimage(f, q) == p) { found = true; break; }
      if (!found) {
        r.preserves = false;
        r.witness_prime = p;
        r.witness_ideal = i;
        return r;
      }
    }
  }
  return r;
}

bool dual_preserves_closed(const LatticeHom& f) {
  auto src_primes = lattice_primes(f.source);
  auto tgt_ideals = lattice_ideals(f.target);
  auto tgt_primes = lattice_primes(f.target);

  // Route (a): the ideal-theoretic criterion.
  bool route_a = true;
  for (Mask p : src_primes) {
    for (Mask i : tgt_ideals) {
      if (preimage(f, i) & ~p) continue;  // P does not contain f^-1(I)
      bool found = false;
      for (Mask q : tgt_primes)
        if ((i & ~q) == 0 && preimage(f, q) == p) { found = true; break; }
      if (!found) { route_a = false; break; }
    }
    if (!route_a) break;
  }

  // Route (b): the dual map sends closed sets of Spec(target) to closed
  // sets of Spec(source). Closed sets of a finite spectrum are the
  // inclusion up-sets of its primes.
  auto dual = stone_dual(f);
  Poset tgt_poset = inclusion_poset(tgt_primes);
  bool route_b = true;
  for (Mask c : tgt_poset.all_up_sets()) {
    Mask image = 0;
    for (int i = 0; i < tgt_poset.n; ++i)
      if (has_bit(c, i)) image |= Mask{1} << dual[i];
    Mask closure = spec_closure(src_primes, image, f.source.size);
    if (closure != image) { route_b = false; break; }
  }

  if (route_a != route_b)
    throw InternalConsistencyError(
        "dual_preserves_closed: criterion and direct topology disagree");
  return route_a;
}

bool dual_closure_equalities(const LatticeHom& f) {
  require_surjective(f, "dual_closure_equalities");
  auto src_primes = lattice_primes(f.source);
  auto tgt_primes = lattice_primes(f.target);
  auto tgt_ideals = lattice_ideals(f.target);
  auto dual = stone_dual(f);

  // Preimage commutation with unions/intersections over ideal families.
  for (Mask i : tgt_ideals)
    for (Mask j : tgt_ideals) {
      if (preimage(f, i & j) != (preimage(f, i) & preimage(f, j)))
        return false;
      if (preimage(f, i | j) != (preimage(f, i) | preimage(f, j)))
        return false;
    }
  // Preimages of ideals are ideals.
  for (Mask i : tgt_ideals)
    if (!is_lattice_ideal(f.source, preimage(f, i))) return false;

  // Closure equality over all pairs of closed sets of Spec(target).
  Poset tgt_poset = inclusion_poset(tgt_primes);
  auto closed_sets = tgt_poset.all_up_sets();
  auto image_of = [&](Mask c) {
    Mask image = 0;
    for (int i = 0; i < tgt_poset.n; ++i)
      if (has_bit(c, i)) image |= Mask{1} << dual[i];
    return image;
  };
  for (Mask c : closed_sets)
    for (Mask d : closed_sets) {
      Mask lhs = spec_closure(src_primes, image_of(c & d), f.source.size);
      Mask rhs = spec_closure(src_primes, image_of(c), f.source.size) &
                 spec_closure(src_primes, image_of(d), f.source.size);
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace mvs
