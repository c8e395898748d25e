#include "mvs/functors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mvs {

LexGroup LexGroup::trivial() { return LexGroup{}; }

LexGroup LexGroup::Z() {
  LexGroup g;
  g.rank = 1;
  g.integer_coord = {true};
  g.name = "Z";
  return g;
}

LexGroup LexGroup::Q() {
  LexGroup g;
  g.rank = 1;
  g.integer_coord = {false};
  g.name = "Q";
  return g;
}

LexGroup LexGroup::ZxZ() { return z_lex(Z()); }

LexGroup LexGroup::z_lex(const LexGroup& g) {
  LexGroup out;
  out.rank = g.rank + 1;
  out.integer_coord = {true};
  out.integer_coord.insert(out.integer_coord.end(), g.integer_coord.begin(),
                           g.integer_coord.end());
  out.name = g.rank == 0 ? "Z" : "Zx" + g.name;
  return out;
}

LexGroup LexGroup::parse(const std::string& s) {
  if (s == "0" || s == "trivial") return trivial();
  LexGroup g;
  size_t pos = 0;
  while (pos < s.size()) {
    char c = s[pos];
    if (c == 'Z')
      g.integer_coord.push_back(true);
    else if (c == 'Q')
      g.integer_coord.push_back(false);
    else
      throw InputError("LexGroup::parse: bad group name '" + s + "'");
    ++pos;
    if (pos < s.size()) {
      if (s[pos] != 'x')
        throw InputError("LexGroup::parse: bad group name '" + s + "'");
      ++pos;
    }
  }
  g.rank = static_cast<int>(g.integer_coord.size());
  g.name = s;
  if (g.rank == 0) throw InputError("LexGroup::parse: empty group name");
  return g;
}

LexGroup::Elem LexGroup::add(const Elem& a, const Elem& b) const {
  Elem out(rank);
  for (int i = 0; i < rank; ++i) out[i] = a[i] + b[i];
  return out;
}

LexGroup::Elem LexGroup::negate(const Elem& a) const {
  Elem out(rank);
  for (int i = 0; i < rank; ++i) out[i] = -a[i];
  return out;
}

int LexGroup::cmp(const Elem& a, const Elem& b) const {
  for (int i = 0; i < rank; ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

bool LexGroup::contains(const Elem& a) const {
  if (static_cast<int>(a.size()) != rank) return false;
  for (int i = 0; i < rank; ++i)
    if (integer_coord[i] && denominator(a[i]) != 1) return false;
  return true;
}

bool UnitalLGroup::strong_unit_ok() const {
  if (group.rank == 0) return false;
  if (!group.contains(unit)) return false;
  return unit[0] > 0;
}

bool SymbolicMvAlgebra::contains(const Elem& e) const {
  return gu.group.contains(e) && gu.group.cmp(zero(), e) <= 0 &&
         gu.group.cmp(e, one()) <= 0;
}

void SymbolicMvAlgebra::require(const Elem& e) const {
  if (!contains(e))
    throw InputError("symbolic element outside the unit interval");
}

SymbolicMvAlgebra::Elem SymbolicMvAlgebra::oplus(const Elem& a,
                                                 const Elem& b) const {
  require(a);
  require(b);
  Elem s = gu.group.add(a, b);
  return gu.group.cmp(s, one()) <= 0 ? s : one();
}

SymbolicMvAlgebra::Elem SymbolicMvAlgebra::neg(const Elem& a) const {
  require(a);
  return gu.group.add(one(), gu.group.negate(a));
}

SymbolicMvAlgebra::Elem SymbolicMvAlgebra::join(const Elem& a,
                                                const Elem& b) const {
  // lattice order of the interval algebra is the lex order
  return gu.group.cmp(a, b) >= 0 ? a : b;
}

SymbolicMvAlgebra::Elem SymbolicMvAlgebra::meet(const Elem& a,
                                                const Elem& b) const {
  return gu.group.cmp(a, b) <= 0 ? a : b;
}

SymbolicMvAlgebra::Elem SymbolicMvAlgebra::odot(const Elem& a,
                                                const Elem& b) const {
  return neg(oplus(neg(a), neg(b)));
}

std::optional<int> SymbolicMvAlgebra::ord(const Elem& e) const {
  require(e);
  if (e[0] == 0) {
    // leading coordinate zero: sums stay below the unit forever
    return gu.group.cmp(e, one()) == 0 ? std::optional<int>(1) : std::nullopt;
  }
  Elem acc = e;
  for (int n = 1;; ++n) {
    if (gu.group.cmp(acc, one()) >= 0) return n;
    acc = gu.group.add(acc, e);
  }
}

std::string SymbolicMvAlgebra::show(const Elem& e) const {
  if (presentation == SymPresentation::Chang ||
      (presentation == SymPresentation::Komori && komori_m == 1)) {
    if (e == zero()) return "0";
    if (e == one()) return "1";
    if (e[0] == 0) {
      std::ostringstream os;
      os << e[1] << "c";
      return os.str();
    }
    std::ostringstream os;
    os << "1-" << -e[1] << "c";
    return os.str();
  }
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

GammaResult gamma(const UnitalLGroup& gu) {
  if (!gu.strong_unit_ok())
    throw InputError("gamma: unit is not a strong unit above zero");
  const auto& g = gu.group;
  if (g.rank == 1 && g.integer_coord[0]) {
    Integer m = numerator(gu.unit[0]);
    if (m > size_guard())
      throw InputError("gamma: finite chain exceeds size guard");
    return lukasiewicz(static_cast<int>(m));
  }
  SymbolicMvAlgebra s;
  s.presentation = SymPresentation::GammaOfUnitalLex;
  s.gu = gu;
  return s;
}

GammaResult delta(const LexGroup& g) {
  UnitalLGroup gu;
  gu.group = LexGroup::z_lex(g);
  gu.unit = gu.group.zero();
  gu.unit[0] = 1;
  return gamma(gu);
}

SymbolicMvAlgebra komori(int m) {
  if (m < 1) throw InputError("komori: m must be positive");
  SymbolicMvAlgebra s;
  s.presentation = m == 1 ? SymPresentation::Chang : SymPresentation::Komori;
  s.komori_m = m;
  s.gu.group = LexGroup::ZxZ();
  s.gu.unit = {Rational(m), Rational(0)};
  return s;
}

SymbolicMvAlgebra chang_algebra() { return komori(1); }

FiniteMvAlgebra lukasiewicz(int m) {
  if (m < 0) throw InputError("lukasiewicz: m must be nonnegative");
  FiniteMvAlgebra a;
  a.size = m + 1;
  a.oplus.assign(a.size, std::vector<int>(a.size));
  a.neg.assign(a.size, 0);
  a.labels.resize(a.size);
  for (int x = 0; x <= m; ++x) {
    a.neg[x] = m - x;
    a.labels[x] = std::to_string(x) + "/" + std::to_string(m);
    for (int y = 0; y <= m; ++y) a.oplus[x][y] = std::min(m, x + y);
  }
  if (m == 0) a.labels[0] = "0";
  return a;
}

// The four-case table of the Chang algebra. The cases for mixed operands
// follow truncated addition in Z lex Z: nc + (1-mc) reaches 1 exactly
// when n >= m.
ChangElem chang_oplus(const ChangElem& x, const ChangElem& y) {
  if (x.n < 0 || y.n < 0) throw InputError("chang_oplus: malformed element");
  if (!x.upper && !y.upper) return {false, x.n + y.n};
  if (x.upper && !y.upper) {
    // (1 - nc) + mc
    if (y.n < x.n) return {true, x.n - y.n};
    return {true, 0};
  }
  if (!x.upper && y.upper) return chang_oplus(y, x);
  return {true, 0};  // (1 - nc) + (1 - mc) = 1
}

ChangElem chang_neg(const ChangElem& x) {
  if (x.n < 0) throw InputError("chang_neg: malformed element");
  return {!x.upper, x.n};
}

SymbolicMvAlgebra::Elem chang_encode(const ChangElem& x) {
  if (x.upper) return {Rational(1), Rational(-x.n)};
  return {Rational(0), Rational(x.n)};
}

SymbolicMvAlgebra::Elem eval_term_symbolic(
    const SymbolicMvAlgebra& s, const MvTermPtr& t,
    const std::vector<SymbolicMvAlgebra::Elem>& assignment) {
  switch (t->kind) {
    case MvTerm::Kind::Zero: return s.zero();
    case MvTerm::Kind::Var:
      if (t->var_index >= static_cast<int>(assignment.size()))
        throw InputError("eval_term_symbolic: unbound variable");
      s.require(assignment[t->var_index]);
      return assignment[t->var_index];
    case MvTerm::Kind::Neg:
      return s.neg(eval_term_symbolic(s, t->lhs, assignment));
    case MvTerm::Kind::Oplus:
      return s.oplus(eval_term_symbolic(s, t->lhs, assignment),
                     eval_term_symbolic(s, t->rhs, assignment));
  }
  throw InputError("eval_term_symbolic: bad term");
}

// ---------------------------------------------------------------------------

FiniteDistLattice belluce(const FiniteMvAlgebra& a) {
  check_size_guard(a.size, "belluce");
  auto s = spec(a);
  const int np = static_cast<int>(s.points.size());
  // prime-membership signature per element
  std::vector<Mask> sig(a.size, 0);
  for (int x = 0; x < a.size; ++x)
    for (int p = 0; p < np; ++p)
      if (has_bit(s.points[p].members, x)) sig[x] |= Mask{1} << p;
  std::map<Mask, int> cls_of_sig;
  std::vector<int> cls(a.size);
  std::vector<int> reps;
  for (int x = 0; x < a.size; ++x) {
    auto it = cls_of_sig.find(sig[x]);
    if (it == cls_of_sig.end()) {
      it = cls_of_sig.emplace(sig[x], static_cast<int>(reps.size())).first;
      reps.push_back(x);
    }
    cls[x] = it->second;
  }
  // well-definedness of the induced operations
  for (int x = 0; x < a.size; ++x)
    for (int x2 = 0; x2 < a.size; ++x2) {
      if (cls[x] != cls[x2]) continue;
      for (int y = 0; y < a.size; ++y) {
        if (cls[a.join(x, y)] != cls[a.join(x2, y)] ||
            cls[a.meet(x, y)] != cls[a.meet(x2, y)])
          throw InternalConsistencyError(
              "belluce: induced lattice operations not well defined");
      }
    }
  FiniteDistLattice l;
  l.size = static_cast<int>(reps.size());
  l.join.assign(l.size, std::vector<int>(l.size));
  l.meet.assign(l.size, std::vector<int>(l.size));
  for (int i = 0; i < l.size; ++i)
    for (int j = 0; j < l.size; ++j) {
      l.join[i][j] = cls[a.join(reps[i], reps[j])];
      l.meet[i][j] = cls[a.meet(reps[i], reps[j])];
    }
  l.bottom = cls[0];
  l.top = cls[a.one()];
  return l;
}

FiniteDistLattice idc(const FiniteMvAlgebra& a) {
  check_size_guard(a.size, "idc");
  std::vector<Mask> principal;
  std::vector<int> generator_of;  // one generator per distinct principal ideal
  for (int x = 0; x < a.size; ++x) {
    Mask m = ideal_generated(a, Mask{1} << x).members;
    if (std::find(principal.begin(), principal.end(), m) == principal.end()) {
      principal.push_back(m);
      generator_of.push_back(x);
    }
  }
  auto idx_of = [&](Mask m) {
    auto it = std::find(principal.begin(), principal.end(), m);
    if (it == principal.end())
      throw InternalConsistencyError("idc: ideal is not principal");
    return static_cast<int>(it - principal.begin());
  };
  const int n = static_cast<int>(principal.size());
  FiniteDistLattice l;
  l.size = n;
  l.join.assign(n, std::vector<int>(n));
  l.meet.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int gi = generator_of[i], gj = generator_of[j];
      // join of principal ideals: generated by the union; checked against
      // the generator a+b rather than assumed
      Mask jn = ideal_generated(a, principal[i] | principal[j]).members;
      if (jn != ideal_generated(a, Mask{1} << a.op(gi, gj)).members)
        throw InternalConsistencyError("idc: join generator mismatch");
      l.join[i][j] = idx_of(jn);
      // meet: intersection, verified principal with generator a^b
      Mask mt = principal[i] & principal[j];
      if (mt != ideal_generated(a, Mask{1} << a.meet(gi, gj)).members)
        throw InternalConsistencyError("idc: meet is not principal");
      l.meet[i][j] = idx_of(mt);
    }
  l.bottom = idx_of(Mask{1});
  l.top = idx_of(full_mask(a.size));
  return l;
}

// ---------------------------------------------------------------------------

SpecPoset symbolic_spec(const SymbolicMvAlgebra& s) {
  const auto& g = s.gu.group;
  if (g.rank < 1 || g.rank > 4)
    throw InputError("symbolic_spec: unsupported presentation rank");
  if (!s.gu.strong_unit_ok())
    throw InputError("symbolic_spec: unit is not a strong unit");
  // The convex subgroups of a lex product form a chain; the primes of the
  // interval algebra are the proper ones. C_k fixes the leading rank-k
  // coordinates to zero.
  std::vector<std::string> labels;
  for (int k = 0; k < g.rank; ++k) {
    std::ostringstream os;
    os << "C" << k;
    labels.push_back(os.str());
  }
  return SpecPoset::labelled_chain(labels);
}

SpecPoset lgroup_prime_spectrum(const LexGroup& g) {
  if (g.rank > 4)
    throw InputError("lgroup_prime_spectrum: unsupported rank");
  std::vector<std::string> labels;
  for (int k = 0; k < g.rank; ++k) {
    std::ostringstream os;
    os << "C" << k;
    labels.push_back(os.str());
  }
  return SpecPoset::labelled_chain(labels);
}

bool verify_lspec(const LexGroup& g) {
  auto d = delta(g);
  SpecPoset y;
  if (std::holds_alternative<FiniteMvAlgebra>(d))
    y = spec(std::get<FiniteMvAlgebra>(d));
  else
    y = symbolic_spec(std::get<SymbolicMvAlgebra>(d));
  auto maxes = maximals(y);
  if (maxes.size() != 1) return false;
  int m = maxes[0];
  // Y minus its unique closed point
  Poset x;
  x.n = y.order.n - 1;
  x.leq.assign(x.n, std::vector<bool>(x.n, false));
  std::vector<int> keep;
  for (int i = 0; i < y.order.n; ++i)
    if (i != m) keep.push_back(i);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) x.leq[i][j] = y.order.leq[keep[i]][keep[j]];
  return poset_isomorphic(x, lgroup_prime_spectrum(g).order);
}

}  // namespace mvs
