#include "mvs/spectra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mvs {

bool is_ideal(const FiniteMvAlgebra& a, const IdealSet& i) {
  return is_ideal_mask(a, i.members);
}

IdealSet ideal_generated(const FiniteMvAlgebra& a, Mask seed) {
  Mask m = seed | 1;
  bool changed = true;
  while (changed) {
    changed = false;
    auto elems = mask_to_vec(m);
    for (int x : elems) {
      for (int y : elems) {
        int s = a.op(x, y);
        if (!has_bit(m, s)) { m |= Mask{1} << s; changed = true; }
      }
      for (int y = 0; y < a.size; ++y)
        if (a.leq(y, x) && !has_bit(m, y)) {
          m |= Mask{1} << y;
          changed = true;
        }
    }
  }
  return {m};
}

std::vector<IdealSet> enumerate_ideals(const FiniteMvAlgebra& a) {
  check_size_guard(a.size, "enumerate_ideals");
  std::set<Mask> seen = {1};
  std::vector<Mask> frontier = {1};
  while (!frontier.empty()) {
    Mask m = frontier.back();
    frontier.pop_back();
    for (int x = 1; x < a.size; ++x) {
      if (has_bit(m, x)) continue;
      Mask next = ideal_generated(a, m | (Mask{1} << x)).members;
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  std::vector<IdealSet> out;
  for (Mask m : seen) out.push_back({m});
  return out;
}

bool is_prime(const FiniteMvAlgebra& a, const IdealSet& i) {
  if (!is_ideal(a, i)) throw InputError("is_prime: not an ideal");
  if (i.members == full_mask(a.size)) return false;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y)
      if (has_bit(i.members, a.meet(x, y)) && !has_bit(i.members, x) &&
          !has_bit(i.members, y))
        return false;
  return true;
}

SpecPoset SpecPoset::labelled_chain(const std::vector<std::string>& labels) {
  SpecPoset s;
  s.labels = labels;
  s.order = Poset::chain(static_cast<int>(labels.size()));
  return s;
}

SpecPoset spec(const FiniteMvAlgebra& a) {
  SpecPoset s;
  for (const auto& i : enumerate_ideals(a))
    if (is_prime(a, i)) s.points.push_back(i);
  const int n = static_cast<int>(s.points.size());
  s.order.n = n;
  s.order.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      s.order.leq[i][j] =
          (s.points[i].members & ~s.points[j].members) == 0;
    std::ostringstream os;
    os << "{";
    auto elems = mask_to_vec(s.points[i].members);
    for (size_t k = 0; k < elems.size(); ++k)
      os << (k ? "," : "") << a.label(elems[k]);
    os << "}";
    s.labels.push_back(os.str());
  }
  return s;
}

std::vector<int> maximals(const SpecPoset& s) {
  return s.order.maximal_elements();
}

std::vector<IdealSet> maximal_ideals(const FiniteMvAlgebra& a) {
  auto s = spec(a);
  std::vector<IdealSet> out;
  for (int i : maximals(s)) out.push_back(s.points[i]);
  return out;
}

Mask closed_of_ideal(const SpecPoset& s, const IdealSet& i) {
  Mask out = 0;
  for (size_t k = 0; k < s.points.size(); ++k)
    if ((i.members & ~s.points[k].members) == 0) out |= Mask{1} << k;
  return out;
}

Mask open_of_element(const SpecPoset& s, int a) {
  Mask out = 0;
  for (size_t k = 0; k < s.points.size(); ++k)
    if (!has_bit(s.points[k].members, a)) out |= Mask{1} << k;
  return out;
}

IdealSet radical(const FiniteMvAlgebra& a) {
  Mask m = full_mask(a.size);
  for (const auto& mx : maximal_ideals(a)) m &= mx.members;
  return {m};
}

bool FiniteTopology::valid() const {
  Mask full = full_mask(points);
  auto has = [&](Mask m) {
    return std::find(closed_sets.begin(), closed_sets.end(), m) !=
           closed_sets.end();
  };
  if (!has(0) || !has(full)) return false;
  for (Mask a : closed_sets)
    for (Mask b : closed_sets)
      if (!has(a | b) || !has(a & b)) return false;
  return true;
}

std::vector<Mask> FiniteTopology::open_sets() const {
  Mask full = full_mask(points);
  std::vector<Mask> out;
  out.reserve(closed_sets.size());
  for (Mask c : closed_sets) out.push_back(full & ~c);
  std::sort(out.begin(), out.end());
  return out;
}

Mask FiniteTopology::closure(Mask x) const {
  Mask out = full_mask(points);
  for (Mask c : closed_sets)
    if ((x & ~c) == 0 && popcount(c) < popcount(out)) out = c;
  return out;
}

FiniteTopology zariski_topology(const SpecPoset& s) {
  FiniteTopology t;
  t.points = s.order.n;
  t.closed_sets = s.order.all_up_sets();
  return t;
}

bool is_sober(const FiniteTopology& t) {
  for (Mask c : t.closed_sets) {
    if (c == 0) continue;
    // irreducible: not the union of two proper closed subsets
    bool irreducible = true;
    for (Mask a : t.closed_sets) {
      if (!irreducible) break;
      if (a == c || (a & ~c)) continue;
      for (Mask b : t.closed_sets) {
        if (b == c || (b & ~c)) continue;
        if ((a | b) == c) { irreducible = false; break; }
      }
    }
    if (!irreducible) continue;
    int generic_points = 0;
    for (int p = 0; p < t.points; ++p)
      if (has_bit(c, p) && t.closure(Mask{1} << p) == c) ++generic_points;
    if (generic_points != 1) return false;
  }
  return true;
}

namespace {

/// Literal compactness check: every open cover of u drawn from `opens`
/// admits a finite subcover. The canonical maximal cover suffices: if it
/// has a finite subcover, so does every refinement that covers u.
bool is_compact_open(const std::vector<Mask>& opens, Mask u) {
  std::vector<Mask> cover;
  for (Mask v : opens)
    if ((v & ~u) == 0) cover.push_back(v);
  Mask covered = 0;
  for (Mask v : cover) covered |= v;
  if (covered != u) return true;  // no cover exists at all
  // greedy finite subcover
  Mask acc = 0;
  size_t used = 0;
  while (acc != u && used < cover.size()) {
    Mask best = 0;
    for (Mask v : cover)
      if (popcount(v & ~acc) > popcount(best & ~acc)) best = v;
    if ((best & ~acc) == 0) return false;
    acc |= best;
    ++used;
  }
  return acc == u;
}

}  // namespace

bool is_spectral(const FiniteTopology& t) {
  if (!is_sober(t)) return false;
  auto opens = t.open_sets();
  Mask full = full_mask(t.points);
  // whole space compact
  if (!is_compact_open(opens, full)) return false;
  std::vector<Mask> compact_opens;
  for (Mask u : opens)
    if (is_compact_open(opens, u)) compact_opens.push_back(u);
  // basis: every open is a union of compact opens below it
  for (Mask u : opens) {
    Mask acc = 0;
    for (Mask v : compact_opens)
      if ((v & ~u) == 0) acc |= v;
    if (acc != u) return false;
  }
  // closed under binary intersection
  for (Mask a : compact_opens)
    for (Mask b : compact_opens) {
      Mask i = a & b;
      if (std::find(compact_opens.begin(), compact_opens.end(), i) ==
          compact_opens.end())
        return false;
    }
  return true;
}

bool is_root_system(const SpecPoset& s) { return s.order.is_root_system(); }

FiniteDistLattice compact_opens_lattice(const SpecPoset& s) {
  auto downs = s.order.all_down_sets();
  auto l = FiniteDistLattice::of_sets(downs);
  return l;
}

bool homeomorphic(const SpecPoset& s1, const SpecPoset& s2) {
  bool by_order = poset_isomorphic(s1.order, s2.order);
  bool by_lattice =
      lattice_isomorphic(compact_opens_lattice(s1), compact_opens_lattice(s2));
  if (by_order != by_lattice)
    throw InternalConsistencyError(
        "homeomorphic: order and compact-open routes disagree");
  return by_order;
}

IdealSet pullback_prime(const MvHom& h, const IdealSet& prime_of_target) {
  auto c = validate_hom(h);
  if (!c.ok) throw InputError("pullback_prime: not a hom: " + c.reason);
  if (!is_prime(h.target, prime_of_target))
    throw InputError("pullback_prime: ideal is not prime");
  Mask m = 0;
  for (int x = 0; x < h.source.size; ++x)
    if (has_bit(prime_of_target.members, h.map[x])) m |= Mask{1} << x;
  IdealSet out{m};
  if (!is_prime(h.source, out))
    throw InternalConsistencyError(
        "pullback_prime: preimage of a prime is not prime");
  return out;
}

}  // namespace mvs
