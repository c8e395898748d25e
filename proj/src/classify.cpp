#include "mvs/classify.hpp"

#include <algorithm>

namespace mvs {

namespace {

/// Whether some odot-power of x lands in `members`. The power orbit over a
/// finite carrier stabilizes within size steps.
bool power_hits(const FiniteMvAlgebra& a, int x, Mask members) {
  int p = x;
  for (int k = 0; k < a.size + 1; ++k) {
    if (has_bit(members, p)) return true;
    p = a.odot(p, x);
  }
  return false;
}

bool maximal_ideal(const FiniteMvAlgebra& a, const IdealSet& m) {
  auto maxes = maximal_ideals(a);
  return std::any_of(maxes.begin(), maxes.end(),
                     [&](const IdealSet& x) { return x.members == m.members; });
}

}  // namespace

bool is_perfect(const FiniteMvAlgebra& a) {
  // (a) exactly one of ord(x), ord(neg x) finite
  bool by_defn = true;
  for (int x = 0; x < a.size && by_defn; ++x) {
    bool fx = ord(a, x).has_value();
    bool fn = ord(a, a.nn(x)).has_value();
    if (fx == fn) by_defn = false;
  }
  // (b) every element lies in Rad or neg Rad
  Mask rad = radical(a).members;
  bool by_radical = true;
  for (int x = 0; x < a.size; ++x)
    if (!has_bit(rad, x) && !has_bit(rad, a.nn(x))) { by_radical = false; break; }
  if (by_radical)
    for (int x = 0; x < a.size; ++x)
      if (has_bit(rad, x) && has_bit(rad, a.nn(x))) { by_radical = false; break; }
  // (c) exactly one of x, neg x nilpotent under odot
  bool by_powers = true;
  for (int x = 0; x < a.size && by_powers; ++x) {
    bool nx = power_hits(a, x, Mask{1});
    bool nn = power_hits(a, a.nn(x), Mask{1});
    if (nx == nn) by_powers = false;
  }
  if (by_defn != by_radical || by_defn != by_powers)
    throw InternalConsistencyError("is_perfect: routes disagree");
  return by_defn;
}

bool is_perfect(const SymbolicMvAlgebra& s) {
  if (s.presentation != SymPresentation::Chang &&
      s.presentation != SymPresentation::Komori)
    throw InputError("is_perfect: unsupported symbolic presentation");
  // Elements are (k, z) with 0 <= k <= m; ord finite iff k >= 1. Both x
  // and neg x = (m - k, -z) have finite order exactly when 1 <= k <= m-1,
  // which is possible iff m >= 2.
  return s.komori_m == 1;
}

bool is_perfect_ideal(const FiniteMvAlgebra& a, const IdealSet& i) {
  if (!is_ideal(a, i)) throw InputError("is_perfect_ideal: not an ideal");
  if (i.members == full_mask(a.size))
    throw InputError("is_perfect_ideal: ideal is not proper");
  bool by_cond = true;
  for (int x = 0; x < a.size; ++x) {
    bool px = power_hits(a, x, i.members);
    bool pn = power_hits(a, a.nn(x), i.members);
    if (px == pn) { by_cond = false; break; }
  }
  bool by_quotient = is_perfect(quotient(a, i.members).algebra);
  if (by_cond != by_quotient)
    throw InternalConsistencyError("is_perfect_ideal: routes disagree");
  return by_cond;
}

bool is_local(const FiniteMvAlgebra& a) {
  if (a.size == 1) return false;  // no maximal ideal at all
  bool by_maximals = maximal_ideals(a).size() == 1;
  bool by_ord = true;
  for (int x = 0; x < a.size; ++x)
    if (!ord(a, x) && !ord(a, a.nn(x))) { by_ord = false; break; }
  if (by_maximals != by_ord)
    throw InternalConsistencyError("is_local: routes disagree");
  return by_maximals;
}

bool is_primary(const FiniteMvAlgebra& a, const IdealSet& i) {
  if (!is_ideal(a, i)) throw InputError("is_primary: not an ideal");
  if (i.members == full_mask(a.size))
    throw InputError("is_primary: ideal is not proper");
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y)
      if (has_bit(i.members, a.odot(x, y)) &&
          !power_hits(a, x, i.members) && !power_hits(a, y, i.members))
        return false;
  return true;
}

bool is_semisimple(const FiniteMvAlgebra& a) {
  return radical(a).members == Mask{1};
}

bool is_supermaximal(const FiniteMvAlgebra& a, const IdealSet& m) {
  if (!is_ideal(a, m)) throw InputError("is_supermaximal: not an ideal");
  if (!maximal_ideal(a, m))
    throw InputError("is_supermaximal: ideal is not maximal");
  return quotient(a, m.members).algebra.size == 2;
}

int rank(const FiniteMvAlgebra& a) {
  return quotient(a, radical(a).members).algebra.size - 1;
}

int rank(const SymbolicMvAlgebra& s) {
  if (s.presentation != SymPresentation::Chang &&
      s.presentation != SymPresentation::Komori)
    throw InputError("rank: unsupported symbolic presentation");
  // Radical classes are indexed by the leading coordinate 0..m.
  return s.komori_m;
}

int rank_of_prime(const FiniteMvAlgebra& a, const IdealSet& p) {
  if (!is_prime(a, p)) throw InputError("rank_of_prime: not prime");
  return rank(quotient(a, p.members).algebra);
}

bool in_VC(const FiniteMvAlgebra& a) {
  auto s = spec(a);
  bool route_a = true;
  for (int m : maximals(s))
    if (!is_supermaximal(a, s.points[m])) { route_a = false; break; }
  bool route_b = true;
  for (const auto& p : s.points)
    if (!is_perfect_ideal(a, p)) { route_b = false; break; }
  // Present A as the quotient A/{0}; primes in V({0}) are all primes,
  // checked through their quotient algebras.
  bool route_c = true;
  for (const auto& p : s.points)
    if (!is_perfect(quotient(a, p.members).algebra)) { route_c = false; break; }
  if (route_a != route_b || route_a != route_c)
    throw InternalConsistencyError("in_VC: routes disagree");
  return route_a;
}

bool in_VC(const SymbolicMvAlgebra& s) {
  if (s.presentation != SymPresentation::Chang &&
      s.presentation != SymPresentation::Komori)
    throw InputError("in_VC: unsupported symbolic presentation");
  // The spectrum is the 2-chain C0 < C1; the quotient at the top prime is
  // the m-element chain and at the bottom the algebra itself, so every
  // prime is perfect exactly when m = 1.
  return s.komori_m == 1;
}

bool in_VKm(const FiniteMvAlgebra& a, int m) {
  if (m <= 0) throw InputError("in_VKm: m must be positive");
  auto s = spec(a);
  bool by_primes = true;
  for (const auto& p : s.points)
    if (m % rank_of_prime(a, p) != 0) { by_primes = false; break; }
  bool by_maximals = true;
  for (int i : maximals(s))
    if (m % rank_of_prime(a, s.points[i]) != 0) { by_maximals = false; break; }
  if (by_primes != by_maximals)
    throw InternalConsistencyError("in_VKm: routes disagree");
  return by_primes;
}

LocalProfile local_spectrum_profile(const FiniteMvAlgebra& a,
                                    const IdealSet& i) {
  if (!is_ideal(a, i)) throw InputError("local_spectrum_profile: not an ideal");
  if (i.members == full_mask(a.size))
    throw InputError("local_spectrum_profile: ideal is not proper");
  LocalProfile out;
  out.quotient_local = is_local(quotient(a, i.members).algebra);
  auto s = spec(a);
  Mask v = closed_of_ideal(s, i);
  int closed_points = 0;
  Mask inter = full_mask(a.size);
  for (size_t k = 0; k < s.points.size(); ++k) {
    if (!has_bit(v, k)) continue;
    inter &= s.points[k].members;
    bool top = true;
    for (size_t j = 0; j < s.points.size(); ++j)
      if (j != k && has_bit(v, j) && s.order.leq[static_cast<int>(k)][static_cast<int>(j)])
        top = false;
    if (top) ++closed_points;
  }
  out.one_closed_point = closed_points == 1;
  out.intersection_primary = is_primary(a, {inter});
  return out;
}

ClassificationReport classify(const FiniteMvAlgebra& a,
                              const std::vector<int>& vkm_values) {
  ClassificationReport r;
  r.perfect = is_perfect(a);
  if (!r.perfect)
    for (int x = 0; x < a.size; ++x)
      if (ord(a, x).has_value() == ord(a, a.nn(x)).has_value()) {
        r.perfect_witness = x;
        break;
      }
  r.local = is_local(a);
  if (!r.local)
    for (int x = 0; x < a.size; ++x)
      if (!ord(a, x) && !ord(a, a.nn(x))) { r.local_witness = x; break; }
  r.semisimple = is_semisimple(a);
  r.rank_value = rank(a);
  r.in_vc = in_VC(a);
  for (int m : vkm_values) r.in_vkm[m] = in_VKm(a, m);
  for (const auto& m : maximal_ideals(a)) r.maximal_ideals.push_back(m.members);
  r.radical_mask = radical(a).members;
  return r;
}

}  // namespace mvs
