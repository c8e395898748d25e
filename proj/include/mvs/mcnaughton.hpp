#pragma once

#include <utility>
#include <vector>

#include "mvs/common.hpp"
#include "mvs/functors.hpp"
#include "mvs/mv_algebra.hpp"

namespace mvs {

/// One truncated affine piece rho(a . x + b), integer coefficients.
struct Piece {
  std::vector<Integer> a;
  Integer b = 0;
};

/// phi(x) = meet over groups of the join over pieces of rho(a . x + b).
/// Both aggregation levels must be nonempty.
struct NormalForm {
  int arity = 0;
  std::vector<std::vector<Piece>> meets;
};

/// Throws InputError on empty aggregates or arity mismatches.
void check_normal_form(const NormalForm& nf);

using RatPoint = std::vector<Rational>;

/// Truncation to [0, 1].
Rational rho(const Rational& q);

/// Exact evaluation; the point must lie in the unit cube.
Rational eval_nf(const NormalForm& nf, const RatPoint& x);

/// Every constant term is zero.
bool is_syntactically_homogeneous(const NormalForm& nf);

/// Some join group has all constants <= 0. Asserted against direct
/// evaluation at the origin.
bool zero_at_origin_criterion(const NormalForm& nf);

struct LocalHomConfig {
  int max_denominator = 24;
  Rational norm_bound = Rational(1, 8);
  int max_n = 4;
};

/// phi(0) = 0, with the scaling identity phi(n x) = n phi(x) sampled on a
/// neighborhood of the origin small enough for phi to be linear along
/// rays (the stated bound is shrunk by the largest coefficient).
bool is_locally_homogeneous(const NormalForm& nf,
                            const LocalHomConfig& cfg = {});

/// Each rho(a . x + b) becomes rho(a . x + b y) in one extra variable.
NormalForm homogenize(const NormalForm& nf);

/// Finite union of disjoint closed intervals in [0, 1]; lo == hi encodes
/// an isolated point. Always kept sorted and merged.
struct Interval1D {
  std::vector<std::pair<Rational, Rational>> pieces;

  static Interval1D of(std::vector<std::pair<Rational, Rational>> raw);
  bool contains(const Rational& q) const;
  bool operator==(const Interval1D& o) const { return pieces == o.pieces; }
};

/// Exact zero locus on [0, 1] by breakpoint analysis: phi is affine
/// between consecutive points where some piece crosses 0 or 1.
Interval1D zeroset_1d(const NormalForm& nf);

/// Z is empty, {0}, or all of [0, 1].
bool is_cone_1d(const Interval1D& z);

/// Syntactic homogeneity forces a cone zeroset; evaluates that
/// implication.
bool homogeneous_zeroset_check(const NormalForm& nf);

/// The interval algebra of (Z lex Q, (m, 0)).
SymbolicMvAlgebra delta_m_q(int m);

/// Evaluate an MV term at points of delta_m_q(m)^n, exactly.
SymbolicMvAlgebra::Elem eval_delta_term(
    const MvTermPtr& t, const std::vector<SymbolicMvAlgebra::Elem>& point,
    int m);

/// A zeroset presentation over the square of the rank-2 lex algebra: a
/// set S of Boolean vertices, and for each vertex a rational cone of the
/// infinitesimal parts given by homogeneous inequalities a . x <= 0.
struct ZerosetForm1 {
  int arity = 0;
  std::vector<std::vector<int>> vertices;              // members of S, 0/1
  std::vector<std::vector<std::vector<Rational>>> cones;  // per vertex
};

bool form1_member(const ZerosetForm1& z,
                  const std::vector<SymbolicMvAlgebra::Elem>& point);

}  // namespace mvs
