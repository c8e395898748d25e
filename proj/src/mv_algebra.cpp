#include "mvs/mv_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace mvs {

std::string FiniteMvAlgebra::label(int x) const {
  if (!labels.empty() && x < static_cast<int>(labels.size())) return labels[x];
  return std::to_string(x);
}

DerivedValue derived_op(const FiniteMvAlgebra& a, DerivedOp op, int x, int y) {
  if (x < 0 || x >= a.size || y < 0 || y >= a.size)
    throw InputError("derived_op: element index out of range");
  switch (op) {
    case DerivedOp::Join: return a.join(x, y);
    case DerivedOp::Meet: return a.meet(x, y);
    case DerivedOp::Odot: return a.odot(x, y);
    case DerivedOp::Ominus: return a.ominus(x, y);
    case DerivedOp::Leq: return a.leq(x, y);
  }
  throw InputError("derived_op: unknown operation");
}

std::string ValidationReport::describe() const {
  if (!table_well_formed) return "malformed table";
  if (violations.empty()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.axiom << " at (";
    for (size_t i = 0; i < v.witness.size(); ++i)
      os << (i ? "," : "") << v.witness[i];
    os << "); ";
  }
  return os.str();
}

ValidationReport validate_algebra(const FiniteMvAlgebra& a) {
  ValidationReport r;
  const int n = a.size;
  if (n <= 0 || static_cast<int>(a.oplus.size()) != n ||
      static_cast<int>(a.neg.size()) != n) {
    r.table_well_formed = false;
    return r;
  }
  for (const auto& row : a.oplus) {
    if (static_cast<int>(row.size()) != n) { r.table_well_formed = false; return r; }
    for (int v : row)
      if (v < 0 || v >= n) { r.table_well_formed = false; return r; }
  }
  for (int v : a.neg)
    if (v < 0 || v >= n) { r.table_well_formed = false; return r; }

  auto report = [&](const char* ax, std::vector<int> w) {
    r.violations.push_back({ax, std::move(w)});
  };

  for (int x = 0; x < n; ++x) {
    if (a.op(0, x) != x || a.op(x, 0) != x) report("identity", {x});
    if (a.nn(a.nn(x)) != x) report("involution", {x});
    if (a.op(x, a.one()) != a.one()) report("absorb-one", {x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (a.op(x, y) != a.op(y, x)) report("commutativity", {x, y});
      if (a.op(a.nn(a.op(a.nn(x), y)), y) != a.op(a.nn(a.op(a.nn(y), x)), x))
        report("lukasiewicz", {x, y});
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (a.op(a.op(x, y), z) != a.op(x, a.op(y, z)))
          report("associativity", {x, y, z});
  return r;
}

std::optional<int> ord(const FiniteMvAlgebra& a, int x) {
  if (x < 0 || x >= a.size) throw InputError("ord: element out of range");
  std::set<int> visited;
  int acc = x;
  int n = 1;
  while (true) {
    if (acc == a.one()) return n;
    if (!visited.insert(acc).second) return std::nullopt;
    acc = a.op(acc, x);
    ++n;
  }
}

// ---------------------------------------------------------------------------
// Terms

MvTermPtr MvTerm::zero() {
  auto t = std::make_shared<MvTerm>();
  t->kind = Kind::Zero;
  return t;
}
MvTermPtr MvTerm::one() { return neg(zero()); }
MvTermPtr MvTerm::var(int i) {
  if (i < 0) throw InputError("MvTerm: negative variable index");
  auto t = std::make_shared<MvTerm>();
  t->kind = Kind::Var;
  t->var_index = i;
  return t;
}
MvTermPtr MvTerm::neg(MvTermPtr x) {
  auto t = std::make_shared<MvTerm>();
  t->kind = Kind::Neg;
  t->lhs = std::move(x);
  return t;
}
MvTermPtr MvTerm::oplus(MvTermPtr l, MvTermPtr r) {
  auto t = std::make_shared<MvTerm>();
  t->kind = Kind::Oplus;
  t->lhs = std::move(l);
  t->rhs = std::move(r);
  return t;
}
MvTermPtr MvTerm::join(MvTermPtr l, MvTermPtr r) {
  // x v y = neg(neg x + y) + y
  return oplus(neg(oplus(neg(l), r)), r);
}
MvTermPtr MvTerm::meet(MvTermPtr l, MvTermPtr r) {
  return neg(join(neg(l), neg(r)));
}
MvTermPtr MvTerm::odot(MvTermPtr l, MvTermPtr r) {
  return neg(oplus(neg(l), neg(r)));
}
MvTermPtr MvTerm::ominus(MvTermPtr l, MvTermPtr r) {
  return neg(oplus(neg(l), r));
}

int MvTerm::max_var() const {
  switch (kind) {
    case Kind::Zero: return -1;
    case Kind::Var: return var_index;
    case Kind::Neg: return lhs->max_var();
    case Kind::Oplus: return std::max(lhs->max_var(), rhs->max_var());
  }
  return -1;
}

int eval_term(const FiniteMvAlgebra& a, const MvTermPtr& t,
              const std::vector<int>& assignment) {
  switch (t->kind) {
    case MvTerm::Kind::Zero: return 0;
    case MvTerm::Kind::Var:
      if (t->var_index >= static_cast<int>(assignment.size()))
        throw InputError("eval_term: unbound variable x" +
                         std::to_string(t->var_index));
      return assignment[t->var_index];
    case MvTerm::Kind::Neg: return a.nn(eval_term(a, t->lhs, assignment));
    case MvTerm::Kind::Oplus:
      return a.op(eval_term(a, t->lhs, assignment),
                  eval_term(a, t->rhs, assignment));
  }
  throw InputError("eval_term: bad term");
}

// ---------------------------------------------------------------------------
// Homs, products, quotients

HomCheck validate_hom(const MvHom& h) {
  const auto& a = h.source;
  const auto& b = h.target;
  if (static_cast<int>(h.map.size()) != a.size)
    throw InputError("validate_hom: map arity mismatch");
  for (int v : h.map)
    if (v < 0 || v >= b.size)
      throw InputError("validate_hom: map value out of range");
  if (h.map[0] != 0) return {false, "zero not preserved", {0}};
  for (int x = 0; x < a.size; ++x)
    if (h.map[a.nn(x)] != b.nn(h.map[x]))
      return {false, "neg not preserved", {x}};
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y)
      if (h.map[a.op(x, y)] != b.op(h.map[x], h.map[y]))
        return {false, "oplus not preserved", {x, y}};
  return {true, "", {}};
}

bool is_surjective(const MvHom& h) {
  std::set<int> image(h.map.begin(), h.map.end());
  return static_cast<int>(image.size()) == h.target.size;
}

Mask hom_kernel(const MvHom& h) {
  Mask m = 0;
  for (int x = 0; x < h.source.size; ++x)
    if (h.map[x] == 0) m |= Mask{1} << x;
  return m;
}

FiniteMvAlgebra product(const FiniteMvAlgebra& a, const FiniteMvAlgebra& b) {
  long long sz = static_cast<long long>(a.size) * b.size;
  check_size_guard(static_cast<int>(std::min<long long>(sz, 1 << 20)),
                   "product");
  FiniteMvAlgebra p;
  p.size = static_cast<int>(sz);
  p.oplus.assign(p.size, std::vector<int>(p.size));
  p.neg.assign(p.size, 0);
  auto enc = [&](int x, int y) { return x * b.size + y; };
  for (int x1 = 0; x1 < a.size; ++x1)
    for (int y1 = 0; y1 < b.size; ++y1) {
      p.neg[enc(x1, y1)] = enc(a.nn(x1), b.nn(y1));
      for (int x2 = 0; x2 < a.size; ++x2)
        for (int y2 = 0; y2 < b.size; ++y2)
          p.oplus[enc(x1, y1)][enc(x2, y2)] =
              enc(a.op(x1, x2), b.op(y1, y2));
    }
  if (!a.labels.empty() || !b.labels.empty()) {
    p.labels.resize(p.size);
    for (int x = 0; x < a.size; ++x)
      for (int y = 0; y < b.size; ++y)
        p.labels[enc(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
  }
  return p;
}

FiniteMvAlgebra trivial_algebra() {
  FiniteMvAlgebra a;
  a.size = 1;
  a.oplus = {{0}};
  a.neg = {0};
  return a;
}

namespace {

bool is_full_iso(const FiniteMvAlgebra& a, const FiniteMvAlgebra& b,
                 const std::vector<int>& map) {
  for (int x = 0; x < a.size; ++x) {
    if (map[a.nn(x)] != b.nn(map[x])) return false;
    for (int y = 0; y < a.size; ++y)
      if (map[a.op(x, y)] != b.op(map[x], map[y])) return false;
  }
  return true;
}

}  // namespace

bool mv_isomorphic(const FiniteMvAlgebra& a, const FiniteMvAlgebra& b) {
  if (a.size != b.size) return false;
  // permutation search fixing 0, verified in full at each completion
  std::vector<int> perm(a.size);
  std::iota(perm.begin(), perm.end(), 0);
  // quick invariant: multiset of ord values must match
  auto ord_sig = [](const FiniteMvAlgebra& m) {
    std::multiset<int> s;
    for (int x = 0; x < m.size; ++x) {
      auto o = ord(m, x);
      s.insert(o ? *o : -1);
    }
    return s;
  };
  if (ord_sig(a) != ord_sig(b)) return false;
  std::sort(perm.begin() + 1, perm.end());
  do {
    std::vector<int> map(a.size);
    for (int i = 0; i < a.size; ++i) map[i] = perm[i];
    if (map[0] != 0) continue;
    if (is_full_iso(a, b, map)) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

bool is_ideal_mask(const FiniteMvAlgebra& a, Mask members) {
  if (!has_bit(members, 0)) return false;
  auto elems = mask_to_vec(members);
  for (int x : elems) {
    if (x >= a.size) return false;
    for (int y : elems)
      if (!has_bit(members, a.op(x, y))) return false;
    for (int y = 0; y < a.size; ++y)
      if (a.leq(y, x) && !has_bit(members, y)) return false;
  }
  return true;
}

QuotientResult quotient(const FiniteMvAlgebra& a, Mask ideal_members) {
  if (!is_ideal_mask(a, ideal_members))
    throw InputError("quotient: member set is not an ideal");
  const int n = a.size;
  auto dist = [&](int x, int y) {
    return a.op(a.ominus(x, y), a.ominus(y, x));
  };
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int y = x; y < n; ++y)
      if (cls[y] < 0 && has_bit(ideal_members, dist(x, y))) cls[y] = id;
  }
  // class of 0 is first since 0 is the smallest index
  FiniteMvAlgebra q;
  q.size = static_cast<int>(reps.size());
  q.oplus.assign(q.size, std::vector<int>(q.size));
  q.neg.assign(q.size, 0);
  for (int i = 0; i < q.size; ++i) {
    q.neg[i] = cls[a.nn(reps[i])];
    for (int j = 0; j < q.size; ++j)
      q.oplus[i][j] = cls[a.op(reps[i], reps[j])];
  }
  MvHom h;
  h.source = a;
  h.target = q;
  h.map = cls;
  return {std::move(q), std::move(h)};
}

}  // namespace mvs
