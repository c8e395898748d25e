#include "mvs/mcnaughton.hpp"

#include <algorithm>
#include <set>

namespace mvs {

void check_normal_form(const NormalForm& nf) {
  if (nf.arity < 0) throw InputError("normal form: negative arity");
  if (nf.meets.empty()) throw InputError("normal form: empty meet");
  for (const auto& group : nf.meets) {
    if (group.empty()) throw InputError("normal form: empty join group");
    for (const auto& p : group)
      if (static_cast<int>(p.a.size()) != nf.arity)
        throw InputError("normal form: coefficient arity mismatch");
  }
}

Rational rho(const Rational& q) {
  if (q < 0) return Rational(0);
  if (q > 1) return Rational(1);
  return q;
}

namespace {

Rational piece_value(const Piece& p, const RatPoint& x) {
  Rational s(p.b);
  for (size_t i = 0; i < p.a.size(); ++i) s += Rational(p.a[i]) * x[i];
  return rho(s);
}

}  // namespace

Rational eval_nf(const NormalForm& nf, const RatPoint& x) {
  check_normal_form(nf);
  if (static_cast<int>(x.size()) != nf.arity)
    throw InputError("eval_nf: point arity mismatch");
  for (const auto& c : x)
    if (c < 0 || c > 1) throw InputError("eval_nf: point outside unit cube");
  Rational meet_acc(1);
  bool first_group = true;
  for (const auto& group : nf.meets) {
    Rational join_acc(0);
    for (const auto& p : group) join_acc = std::max(join_acc, piece_value(p, x));
    meet_acc = first_group ? join_acc : std::min(meet_acc, join_acc);
    first_group = false;
  }
  return meet_acc;
}

bool is_syntactically_homogeneous(const NormalForm& nf) {
  check_normal_form(nf);
  for (const auto& group : nf.meets)
    for (const auto& p : group)
      if (p.b != 0) return false;
  return true;
}

bool zero_at_origin_criterion(const NormalForm& nf) {
  check_normal_form(nf);
  bool by_constants = false;
  for (const auto& group : nf.meets) {
    bool all_nonpos = true;
    for (const auto& p : group)
      if (p.b > 0) { all_nonpos = false; break; }
    if (all_nonpos) { by_constants = true; break; }
  }
  bool by_eval = eval_nf(nf, RatPoint(nf.arity, Rational(0))) == 0;
  if (by_constants != by_eval)
    throw InternalConsistencyError(
        "zero_at_origin_criterion: constant criterion disagrees with "
        "evaluation");
  return by_constants;
}

bool is_locally_homogeneous(const NormalForm& nf, const LocalHomConfig& cfg) {
  check_normal_form(nf);
  bool verdict = eval_nf(nf, RatPoint(nf.arity, Rational(0))) == 0;
  if (!verdict || nf.arity == 0) return verdict;

  // Radius small enough that pieces with b <= -1 stay at 0, pieces with
  // b >= 1 stay above 1/2, and b = 0 pieces stay linear under scaling by
  // max_n; within it the scaling identity is exact, not just sampled.
  Integer maxcoef = 1;
  for (const auto& group : nf.meets)
    for (const auto& p : group)
      for (const auto& c : p.a) {
        Integer ac = c < 0 ? Integer(-c) : c;
        maxcoef = std::max(maxcoef, ac);
      }
  Rational radius = std::min(
      cfg.norm_bound, Rational(Integer(1), Integer(8 * maxcoef * nf.arity)));

  std::vector<std::vector<int>> directions;
  for (int i = 0; i < nf.arity; ++i) {
    std::vector<int> e(nf.arity, 0);
    e[i] = 1;
    directions.push_back(e);
  }
  directions.push_back(std::vector<int>(nf.arity, 1));
  for (const auto& d : directions) {
    for (int n = 1; n <= cfg.max_n; ++n) {
      for (int q = 1; q <= 3; ++q) {
        RatPoint x(nf.arity);
        for (int i = 0; i < nf.arity; ++i)
          x[i] = Rational(d[i]) * radius / Integer(n * q);
        RatPoint nx(nf.arity);
        for (int i = 0; i < nf.arity; ++i) nx[i] = Rational(n) * x[i];
        if (eval_nf(nf, nx) != Rational(n) * eval_nf(nf, x))
          throw InternalConsistencyError(
              "is_locally_homogeneous: scaling identity failed near origin");
      }
    }
  }
  return verdict;
}

NormalForm homogenize(const NormalForm& nf) {
  check_normal_form(nf);
  NormalForm out;
  out.arity = nf.arity + 1;
  for (const auto& group : nf.meets) {
    std::vector<Piece> g;
    for (const auto& p : group) {
      Piece q;
      q.a = p.a;
      q.a.push_back(p.b);
      q.b = 0;
      g.push_back(q);
    }
    out.meets.push_back(g);
  }
  return out;
}

Interval1D Interval1D::of(std::vector<std::pair<Rational, Rational>> raw) {
  Interval1D out;
  std::sort(raw.begin(), raw.end());
  for (const auto& piece : raw) {
    if (piece.second < piece.first)
      throw InputError("Interval1D: reversed endpoints");
    if (!out.pieces.empty() && piece.first <= out.pieces.back().second) {
      out.pieces.back().second =
          std::max(out.pieces.back().second, piece.second);
    } else {
      out.pieces.push_back(piece);
    }
  }
  return out;
}

bool Interval1D::contains(const Rational& q) const {
  for (const auto& p : pieces)
    if (p.first <= q && q <= p.second) return true;
  return false;
}

Interval1D zeroset_1d(const NormalForm& nf) {
  check_normal_form(nf);
  if (nf.arity != 1) throw InputError("zeroset_1d: arity must be 1");
  std::set<Rational> bps = {Rational(0), Rational(1)};
  for (const auto& group : nf.meets)
    for (const auto& p : group) {
      if (p.a[0] == 0) continue;
      // boost rejects negative denominators in the two-argument ctor
      Rational lo = Rational(Integer(-p.b)) / Rational(p.a[0]);
      Rational hi = Rational(Integer(1 - p.b)) / Rational(p.a[0]);
      if (lo >= 0 && lo <= 1) bps.insert(lo);
      if (hi >= 0 && hi <= 1) bps.insert(hi);
    }
  std::vector<Rational> pts(bps.begin(), bps.end());
  auto zero_at = [&](const Rational& q) { return eval_nf(nf, {q}) == 0; };
  std::vector<std::pair<Rational, Rational>> raw;
  for (const auto& q : pts)
    if (zero_at(q)) raw.push_back({q, q});
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational mid = (pts[i] + pts[i + 1]) / 2;
    // phi is affine on the gap: zero on the whole closed interval exactly
    // when zero at both ends and in the middle
    if (zero_at(pts[i]) && zero_at(mid) && zero_at(pts[i + 1]))
      raw.push_back({pts[i], pts[i + 1]});
  }
  return Interval1D::of(raw);
}

bool is_cone_1d(const Interval1D& z) {
  if (z.pieces.empty()) return true;
  if (z.pieces.size() != 1) return false;
  const auto& p = z.pieces[0];
  return (p.first == 0 && p.second == 0) || (p.first == 0 && p.second == 1);
}

bool homogeneous_zeroset_check(const NormalForm& nf) {
  check_normal_form(nf);
  if (nf.arity != 1) throw InputError("homogeneous_zeroset_check: arity 1");
  if (!is_syntactically_homogeneous(nf)) return true;
  return is_cone_1d(zeroset_1d(nf));
}

SymbolicMvAlgebra delta_m_q(int m) {
  if (m <= 0) throw InputError("delta_m_q: m must be positive");
  UnitalLGroup gu;
  gu.group = LexGroup::parse("ZxQ");
  gu.unit = {Rational(m), Rational(0)};
  return std::get<SymbolicMvAlgebra>(gamma(gu));
}

SymbolicMvAlgebra::Elem eval_delta_term(
    const MvTermPtr& t, const std::vector<SymbolicMvAlgebra::Elem>& point,
    int m) {
  auto s = delta_m_q(m);
  for (const auto& e : point) s.require(e);
  return eval_term_symbolic(s, t, point);
}

bool form1_member(const ZerosetForm1& z,
                  const std::vector<SymbolicMvAlgebra::Elem>& point) {
  if (static_cast<int>(point.size()) != z.arity)
    throw InputError("form1_member: arity mismatch");
  if (z.vertices.size() != z.cones.size())
    throw InputError("form1_member: vertex/cone count mismatch");
  std::vector<int> v(z.arity);
  for (int i = 0; i < z.arity; ++i) {
    const auto& e = point[i];
    if (e.size() != 2 || denominator(e[0]) != 1)
      throw InputError("form1_member: point is not a rank-2 lex pair");
    v[i] = static_cast<int>(numerator(e[0]));
  }
  for (size_t k = 0; k < z.vertices.size(); ++k) {
    if (static_cast<int>(z.vertices[k].size()) != z.arity)
      throw InputError("form1_member: vertex arity mismatch");
    if (z.vertices[k] != v) continue;
    for (const auto& ineq : z.cones[k]) {
      if (static_cast<int>(ineq.size()) != z.arity)
        throw InputError("form1_member: inequality arity mismatch");
      Rational s(0);
      for (int i = 0; i < z.arity; ++i) s += ineq[i] * point[i][1];
      if (s > 0) return false;
    }
    return true;
  }
  return false;
}

}  // namespace mvs
