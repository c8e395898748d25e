#include "mvs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "mvs/classify.hpp"
#include "mvs/functors.hpp"
#include "mvs/json_io.hpp"
#include "mvs/mcnaughton.hpp"
#include "mvs/spectra.hpp"

namespace mvs {

namespace {

struct SuiteResult {
  bool pass = true;
  std::string detail;
};

using Suite = std::function<SuiteResult(const CorpusSpec&)>;

SuiteResult fail(const std::string& detail) { return {false, detail}; }

std::string algebra_tag(const FiniteMvAlgebra& a, size_t index) {
  std::ostringstream os;
  os << "algebra #" << index << " (size " << a.size << ")";
  return os.str();
}

// --------------------------------------------------------------------------
// ideal-lattice laws

SuiteResult suite_meet_of_closed(const CorpusSpec& cs) {
  auto corpus = corpus_algebras(cs);
  for (size_t ai = 0; ai < corpus.size(); ++ai) {
    const auto& a = corpus[ai];
    auto s = spec(a);
    auto ideals = enumerate_ideals(a);
    for (const auto& i : ideals)
      for (const auto& j : ideals) {
        Mask lhs = closed_of_ideal(s, i) & closed_of_ideal(s, j);
        Mask rhs =
            closed_of_ideal(s, ideal_generated(a, i.members | j.members));
        if (lhs != rhs)
          return fail(algebra_tag(a, ai) + ": V(I)&V(J) != V(<I,J>)");
        for (const auto& k : ideals) {
          Mask l3 = lhs & closed_of_ideal(s, k);
          Mask r3 = closed_of_ideal(
              s, ideal_generated(a, i.members | j.members | k.members));
          if (l3 != r3)
            return fail(algebra_tag(a, ai) + ": triple V-intersection law");
        }
      }
  }
  return {};
}

SuiteResult suite_open_of_sum(const CorpusSpec& cs) {
  auto corpus = corpus_algebras(cs);
  for (size_t ai = 0; ai < corpus.size(); ++ai) {
    const auto& a = corpus[ai];
    auto s = spec(a);
    for (int f = 0; f < a.size; ++f)
      for (int g = 0; g < a.size; ++g)
        if (open_of_element(s, a.op(f, g)) !=
            (open_of_element(s, f) | open_of_element(s, g)))
          return fail(algebra_tag(a, ai) + ": O(f+g) != O(f) u O(g) at (" +
                      std::to_string(f) + "," + std::to_string(g) + ")");
  }
  return {};
}

// --------------------------------------------------------------------------
// spectral topology

SuiteResult suite_sober(const CorpusSpec& cs) {
  auto corpus = corpus_algebras(cs);
  for (size_t ai = 0; ai < corpus.size(); ++ai) {
    auto t = zariski_topology(spec(corpus[ai]));
    if (!t.valid())
      return fail(algebra_tag(corpus[ai], ai) + ": topology axioms");
    if (!is_sober(t)) return fail(algebra_tag(corpus[ai], ai) + ": not sober");
  }
  return {};
}

SuiteResult suite_spectral_roots(const CorpusSpec& cs) {
  auto corpus = corpus_algebras(cs);
  for (size_t ai = 0; ai < corpus.size(); ++ai) {
    auto s = spec(corpus[ai]);
    if (!is_spectral(zariski_topology(s)))
      return fail(algebra_tag(corpus[ai], ai) + ": not spectral");
    if (!is_root_system(s))
      return fail(algebra_tag(corpus[ai], ai) + ": not a root system");
  }
  return {};
}

// --------------------------------------------------------------------------
// closed epimorphisms

std::string hom_tag(const LatticeHom& h, size_t index) {
  std::ostringstream os;
  os << "hom #" << index << " (" << h.source.size << " -> " << h.target.size
     << ", map";
  for (int v : h.map) os << " " << v;
  os << ")";
  return os.str();
}

SuiteResult suite_closed_defn_downsets(const CorpusSpec&) {
  auto homs = all_surjective_lattice_homs(6);
  for (size_t i = 0; i < homs.size(); ++i)
    if (is_closed_epi_defn(homs[i]) != is_closed_epi_downsets(homs[i]))
      return fail(hom_tag(homs[i], i) + ": defn vs downsets");
  return {};
}

SuiteResult suite_closed_downsets_ideals(const CorpusSpec&) {
  auto homs = all_surjective_lattice_homs(6);
  for (size_t i = 0; i < homs.size(); ++i)
    if (is_closed_epi_downsets(homs[i]) != is_closed_epi_ideals(homs[i]))
      return fail(hom_tag(homs[i], i) + ": downsets vs ideals");
  return {};
}

SuiteResult suite_closed_defn_ideals(const CorpusSpec&) {
  auto homs = all_surjective_lattice_homs(6);
  for (size_t i = 0; i < homs.size(); ++i)
    if (is_closed_epi_defn(homs[i]) != is_closed_epi_ideals(homs[i]))
      return fail(hom_tag(homs[i], i) + ": defn vs ideals");
  return {};
}

SuiteResult suite_closure_equalities(const CorpusSpec&) {
  auto homs = all_surjective_lattice_homs(6);
  for (size_t i = 0; i < homs.size(); ++i)
    if (dual_closure_equalities(homs[i]) != is_closed_epi_ideals(homs[i]))
      return fail(hom_tag(homs[i], i) + ": closure equalities vs closedness");
  return {};
}

SuiteResult suite_preserves_closed(const CorpusSpec&) {
  auto homs = all_surjective_lattice_homs(6);
  size_t non_closed = 0, closed_not_preserving = 0;
  for (size_t i = 0; i < homs.size(); ++i) {
    bool closed = is_closed_epi_defn(homs[i]);
    bool preserves = dual_preserves_closed(homs[i]);  // cross-checks inside
    if (!closed) ++non_closed;
    if (closed && !preserves) ++closed_not_preserving;
  }
  SuiteResult r;
  std::ostringstream os;
  os << homs.size() << " homs, " << non_closed << " non-closed, "
     << closed_not_preserving << " closed but not closed-set-preserving";
  r.detail = os.str();
  if (closed_not_preserving == 0)
    return fail("no closed hom failing to preserve closed sets was found; " +
                r.detail);
  if (non_closed == 0)
    r.detail += "; no non-closed surjection exists at these sizes";
  return r;
}

SuiteResult suite_counterexample_5_3(const CorpusSpec&) {
  LatticeHom f;
  f.source = FiniteDistLattice::chain(4);
  f.target = FiniteDistLattice::chain(2);
  f.map = {0, 1, 1, 1};
  if (!is_closed_epi_defn(f)) return fail("4->2 chain hom not closed");
  if (dual_preserves_closed(f))
    return fail("4->2 chain hom unexpectedly preserves closed sets");
  auto rep = dual_preserves_closed_report(f);
  if (rep.preserves) return fail("report disagrees with predicate");
  if (rep.witness_prime != Mask{0b0111})
    return fail("witness prime is not {0,1,2}");
  return {};
}

SuiteResult suite_chain_homs_closed(const CorpusSpec&) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= n; ++m) {
      auto src = FiniteDistLattice::chain(n);
      auto tgt = FiniteDistLattice::chain(m);
      // enumerate monotone surjections as homs via the generic search
      std::vector<int> map(n, 0);
      std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
          LatticeHom h{src, tgt, map};
          if (!validate_lattice_hom(h).ok || !lattice_hom_surjective(h))
            return;
          if (!is_closed_epi_defn(h))
            throw InternalConsistencyError("non-closed chain hom found");
          return;
        }
        int lo = pos == 0 ? 0 : map[pos - 1];
        for (int v = lo; v < m; ++v) {
          map[pos] = v;
          rec(pos + 1);
        }
      };
      rec(0);
    }
  return {};
}

// --------------------------------------------------------------------------
// Belluce / principal ideals / compact opens

SuiteResult suite_belluce_iso(const CorpusSpec& cs) {
  auto corpus = corpus_algebras(cs);
  for (size_t ai = 0; ai < corpus.size(); ++ai) {
    const auto& a = corpus[ai];
    auto b = belluce(a);
    auto i = idc(a);
    auto k = compact_opens_lattice(spec(a));
    if (!lattice_isomorphic(b, i))
      return fail(algebra_tag(a, ai) + ": belluce != idc");
    if (!lattice_isomorphic(i, k))
      return fail(algebra_tag(a, ai) + ": idc != compact opens");
    if (!lattice_isomorphic(b, k))
      return fail(algebra_tag(a, ai) + ": belluce != compact opens");
  }
  return {};
}

// --------------------------------------------------------------------------
// classification

SuiteResult suite_vc_routes(const CorpusSpec& cs) {
  auto corpus = corpus_algebras(cs);
  for (size_t ai = 0; ai < corpus.size(); ++ai)
    (void)in_VC(corpus[ai]);  // throws InternalConsistencyError on mismatch
  if (!in_VC(chang_algebra())) return fail("Chang algebra not in V(C)");
  return {};
}

SuiteResult suite_vkm_routes(const CorpusSpec& cs) {
  auto corpus = corpus_algebras(cs);
  for (size_t ai = 0; ai < corpus.size(); ++ai) {
    const auto& a = corpus[ai];
    std::map<int, bool> verdicts;
    for (int m = 1; m <= 6; ++m) verdicts[m] = in_VKm(a, m);
    for (int m = 1; m <= 6; ++m)
      for (int mm = m; mm <= 6; mm += m)
        if (verdicts[m] && !verdicts[mm])
          return fail(algebra_tag(a, ai) + ": divisibility monotonicity at " +
                      std::to_string(m) + " | " + std::to_string(mm));
  }
  for (int d = 1; d <= 6; ++d)
    for (int m = 1; m <= 6; ++m)
      if (in_VKm(lukasiewicz(d), m) != (m % d == 0))
        return fail("chain membership: L_" + std::to_string(d) + " in VK_" +
                    std::to_string(m));
  return {};
}

/// Unique maximal prime above the given spec point; uniqueness re-checked.
int maximal_above(const SpecPoset& s, int k) {
  int found = -1;
  for (int j = 0; j < s.order.n; ++j) {
    if (!s.order.leq[k][j]) continue;
    bool is_max = true;
    for (int l = 0; l < s.order.n; ++l)
      if (l != j && s.order.leq[j][l]) is_max = false;
    if (!is_max) continue;
    if (found >= 0)
      throw InternalConsistencyError("prime below two distinct maximals");
    found = j;
  }
  if (found < 0) throw InternalConsistencyError("prime with no maximal above");
  return found;
}

SuiteResult suite_sit(const CorpusSpec& cs) {
  auto corpus = corpus_algebras(cs);
  for (size_t ai = 0; ai < corpus.size(); ++ai) {
    const auto& a = corpus[ai];
    auto s = spec(a);
    for (int k = 0; k < s.order.n; ++k) {
      auto m = s.points[maximal_above(s, k)];
      if (is_perfect_ideal(a, s.points[k]) != is_supermaximal(a, m))
        return fail(algebra_tag(a, ai) + ": perfect prime vs supermaximal");
    }
  }
  return {};
}

SuiteResult suite_rank_of_prime(const CorpusSpec& cs) {
  auto corpus = corpus_algebras(cs);
  for (size_t ai = 0; ai < corpus.size(); ++ai) {
    const auto& a = corpus[ai];
    auto s = spec(a);
    for (int k = 0; k < s.order.n; ++k)
      if (rank_of_prime(a, s.points[k]) !=
          rank_of_prime(a, s.points[maximal_above(s, k)]))
        return fail(algebra_tag(a, ai) + ": prime rank vs maximal rank");
  }
  return {};
}

SuiteResult suite_local_profile(const CorpusSpec& cs) {
  auto corpus = corpus_algebras(cs);
  for (size_t ai = 0; ai < corpus.size(); ++ai) {
    const auto& a = corpus[ai];
    for (const auto& i : enumerate_ideals(a)) {
      if (i.members == full_mask(a.size)) continue;
      if (!local_spectrum_profile(a, i).consistent())
        return fail(algebra_tag(a, ai) + ": local profile inconsistent");
    }
  }
  return {};
}

SuiteResult suite_roots(const CorpusSpec& cs) {
  auto corpus = corpus_algebras(cs);
  for (size_t ai = 0; ai < corpus.size(); ++ai) {
    const auto& a = corpus[ai];
    auto s = spec(a);
    for (int k = 0; k < s.order.n; ++k) {
      // the root through k: primes above k (a chain, by root-systemhood)
      Mask root = s.order.up_set(k);
      auto m = s.points[maximal_above(s, k)];
      bool all_perfect = true;
      for (int j = 0; j < s.order.n; ++j)
        if (has_bit(root, j) && !is_perfect_ideal(a, s.points[j]))
          all_perfect = false;
      if (is_supermaximal(a, m) != all_perfect)
        return fail(algebra_tag(a, ai) + ": root perfection vs supermaximal");
    }
  }
  return {};
}

// --------------------------------------------------------------------------
// lex groups and Chang

SuiteResult suite_lspec(const CorpusSpec&) {
  for (const char* name : {"0", "Z", "ZxZ"})
    if (!verify_lspec(LexGroup::parse(name)))
      return fail(std::string("spectrum mismatch for ") + name);
  SpecPoset two = symbolic_spec(komori(1));
  if (two.order.n != 2 || !two.order.is_chain())
    return fail("K_1 spectrum is not a 2-chain");
  for (int m = 2; m <= 8; ++m) {
    auto s = symbolic_spec(komori(m));
    if (s.order.n != 2 || !s.order.is_chain())
      return fail("K_" + std::to_string(m) + " spectrum is not a 2-chain");
    if (!homeomorphic(two, s))
      return fail("K_" + std::to_string(m) + " not homeomorphic to K_1");
  }
  return {};
}

SuiteResult suite_chang_table(const CorpusSpec&) {
  auto c = chang_algebra();
  std::vector<ChangElem> elems;
  for (int n = 0; n <= 50; ++n) {
    elems.push_back({false, n});
    elems.push_back({true, n});
  }
  for (const auto& x : elems) {
    auto ex = chang_encode(x);
    if (chang_encode(chang_neg(x)) != c.neg(ex))
      return fail("negation table mismatch");
    for (const auto& y : elems)
      if (chang_encode(chang_oplus(x, y)) != c.oplus(ex, chang_encode(y)))
        return fail("sum table mismatch at (" + c.show(ex) + ", " +
                    c.show(chang_encode(y)) + ")");
  }
  return {};
}

// --------------------------------------------------------------------------
// McNaughton

NormalForm random_nf(std::mt19937& rng, int max_arity, int max_coef) {
  std::uniform_int_distribution<int> arity_d(1, max_arity);
  std::uniform_int_distribution<int> count_d(1, 3);
  NormalForm nf;
  nf.arity = arity_d(rng);
  std::uniform_int_distribution<int> coef_d(-max_coef, max_coef);
  int groups = count_d(rng);
  for (int g = 0; g < groups; ++g) {
    int pieces = count_d(rng);
    std::vector<Piece> group;
    for (int p = 0; p < pieces; ++p) {
      Piece piece;
      for (int i = 0; i < nf.arity; ++i) piece.a.push_back(coef_d(rng));
      piece.b = coef_d(rng);
      group.push_back(piece);
    }
    nf.meets.push_back(group);
  }
  return nf;
}

NormalForm witness_nf() {
  // x ^ rho(2x - 1)
  NormalForm nf;
  nf.arity = 1;
  nf.meets = {{Piece{{Integer(1)}, Integer(0)}},
              {Piece{{Integer(2)}, Integer(-1)}}};
  return nf;
}

SuiteResult suite_mcnaughton(const CorpusSpec& cs) {
  // truncation biconditional on a rational grid
  for (int num = -36; num <= 36; ++num)
    for (int den = 1; den <= 12; ++den) {
      Rational q(num, den);
      if ((rho(q) == 0) != (q <= 0)) return fail("rho biconditional");
    }

  std::mt19937 rng(cs.seed);
  for (int t = 0; t < 10000; ++t) {
    auto nf = random_nf(rng, 3, 10);
    bool at_zero = eval_nf(nf, RatPoint(nf.arity, Rational(0))) == 0;
    if (zero_at_origin_criterion(nf) != at_zero)
      return fail("origin criterion vs evaluation");
  }

  auto w = witness_nf();
  if (!zero_at_origin_criterion(w)) return fail("witness: phi(0) != 0");
  if (is_syntactically_homogeneous(w))
    return fail("witness: unexpectedly homogeneous");
  if (!is_locally_homogeneous(w))
    return fail("witness: not locally homogeneous");
  if (zeroset_1d(w) != Interval1D::of({{Rational(0), Rational(1, 2)}}))
    return fail("witness: zeroset is not [0, 1/2]");

  // homogenization: psi(x, 1) = phi(x) on the denominator-24 grid
  for (int t = 0; t < 1000; ++t) {
    auto nf = random_nf(rng, 1, 10);
    auto h = homogenize(nf);
    if (!is_syntactically_homogeneous(h))
      return fail("homogenize: result not homogeneous");
    for (int k = 0; k <= 24; ++k) {
      Rational x(k, 24);
      if (eval_nf(h, {x, Rational(1)}) != eval_nf(nf, {x}))
        return fail("homogenize: psi(x,1) != phi(x)");
    }
  }

  // exact 1-D zerosets against dense rational sampling
  for (int t = 0; t < 1000; ++t) {
    auto nf = random_nf(rng, 1, 10);
    auto z = zeroset_1d(nf);
    for (int den : {97, 89, 24}) {
      for (int k = 0; k <= den; ++k) {
        Rational x(k, den);
        if (z.contains(x) != (eval_nf(nf, {x}) == 0))
          return fail("zeroset_1d vs dense sampling");
      }
    }
  }

  // homogeneous 1-D zerosets are cones
  for (int t = 0; t < 1000; ++t) {
    auto nf = random_nf(rng, 1, 10);
    for (auto& group : nf.meets)
      for (auto& piece : group) piece.b = 0;
    if (!homogeneous_zeroset_check(nf))
      return fail("homogeneous zeroset is not a cone");
  }
  return {};
}

SuiteResult suite_local_homogeneity(const CorpusSpec& cs) {
  std::mt19937 rng(cs.seed + 1);
  for (int t = 0; t < 10000; ++t) {
    auto nf = random_nf(rng, 3, 10);
    bool at_zero = eval_nf(nf, RatPoint(nf.arity, Rational(0))) == 0;
    // throws InternalConsistencyError if the sampled scaling identity
    // falsifies a positive verdict
    if (is_locally_homogeneous(nf) != at_zero)
      return fail("local homogeneity vs phi(0)=0");
  }
  if (!is_locally_homogeneous(witness_nf()))
    return fail("witness not locally homogeneous");
  return {};
}

// --------------------------------------------------------------------------
// form (1) zerosets over the rank-2 symbolic algebra

SuiteResult suite_form1(const CorpusSpec&) {
  auto alg = delta_m_q(1);
  using Elem = SymbolicMvAlgebra::Elem;

  // sample pool per coordinate: infinitesimals and coinfinitesimals
  std::vector<Elem> pool;
  for (const auto& q :
       {Rational(0), Rational(1), Rational(2), Rational(1, 2), Rational(3)})
    pool.push_back({Rational(0), q});
  for (const auto& q :
       {Rational(0), Rational(1), Rational(1, 2), Rational(2)})
    pool.push_back({Rational(1), -q});

  std::vector<std::vector<Elem>> base_points;
  for (const auto& x : pool)
    for (const auto& y : pool) base_points.push_back({x, y});

  const std::vector<Rational> scales = {Rational(1), Rational(2),
                                        Rational(1, 2), Rational(3)};
  auto scaled = [](const std::vector<Elem>& p, const Rational& lam) {
    std::vector<Elem> out = p;
    for (auto& e : out) e[1] *= lam;
    return out;
  };

  // all evaluation points: base points and their ray companions
  std::vector<std::vector<Elem>> eval_points;
  for (const auto& p : base_points)
    for (const auto& lam : scales) eval_points.push_back(scaled(p, lam));

  // semantic closure of terms up to depth 4, deduplicated by their value
  // profile on the evaluation points
  struct Entry {
    MvTermPtr term;
    std::vector<Elem> values;
  };
  std::vector<Entry> entries;
  std::set<std::vector<Elem>> seen;
  // profiles compose pointwise, so new values come from the parents'
  // cached rows rather than re-walking the term tree
  auto add = [&](MvTermPtr t, std::vector<Elem> vals) {
    if (seen.insert(vals).second) entries.push_back({std::move(t), std::move(vals)});
  };
  auto leaf = [&](const MvTermPtr& t) {
    std::vector<Elem> vals;
    vals.reserve(eval_points.size());
    for (const auto& p : eval_points)
      vals.push_back(eval_term_symbolic(alg, t, p));
    add(t, std::move(vals));
  };
  leaf(MvTerm::zero());
  leaf(MvTerm::var(0));
  leaf(MvTerm::var(1));
  for (int depth = 1; depth <= 4 && entries.size() < 4000; ++depth) {
    size_t level_end = entries.size();
    for (size_t i = 0; i < level_end && entries.size() < 4000; ++i) {
      std::vector<Elem> nv;
      nv.reserve(eval_points.size());
      for (const auto& v : entries[i].values) nv.push_back(alg.neg(v));
      add(MvTerm::neg(entries[i].term), std::move(nv));
      for (size_t j = 0; j < level_end && entries.size() < 4000; ++j) {
        std::vector<Elem> sv;
        sv.reserve(eval_points.size());
        for (size_t k = 0; k < eval_points.size(); ++k)
          sv.push_back(alg.oplus(entries[i].values[k], entries[j].values[k]));
        add(MvTerm::oplus(entries[i].term, entries[j].term), std::move(sv));
      }
    }
  }

  // eval_points[bi * |scales| + si] is base point bi scaled by scales[si],
  // with scales[0] = 1; the profiles already hold every needed value
  const Elem zero = alg.zero();
  for (const auto& e : entries) {
    for (size_t bi = 0; bi < base_points.size(); ++bi) {
      bool member = e.values[bi * scales.size()] == zero;
      // membership is constant along the ray of the infinitesimal parts
      for (size_t si = 1; si < scales.size(); ++si)
        if ((e.values[bi * scales.size() + si] == zero) != member)
          return fail("zeroset membership not constant on a ray");
    }
  }
  std::ostringstream os;
  os << entries.size() << " semantically distinct terms checked";
  return {true, os.str()};
}

// --------------------------------------------------------------------------

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> reg = {
      {"Lemma-lemm", suite_meet_of_closed},
      {"Lemma-propo", suite_open_of_sum},
      {"Prop-pr", suite_sober},
      {"Thm-thm:kospec", suite_spectral_roots},
      {"Thm-thm:closed", suite_closed_defn_downsets},
      {"Cor-cor:equality", suite_closed_downsets_ideals},
      {"Cor-cor:ideals", suite_closed_defn_ideals},
      {"Sec5.2-Theorem", suite_closure_equalities},
      {"Lemma-preserv", suite_preserves_closed},
      {"Sec5.3-counterexample", suite_counterexample_5_3},
      {"Sec5.3-chain-homs", suite_chain_homs_closed},
      {"Sec5.3-Belluce-iso", suite_belluce_iso},
      {"Thm-theor", suite_vc_routes},
      {"Thm-theori", suite_vkm_routes},
      {"Lemma-sit", suite_sit},
      {"Sec9-Lemma", suite_rank_of_prime},
      {"Thm-thm:local", suite_local_profile},
      {"Sec8-roots", suite_roots},
      {"Thm-thm:lspec", suite_lspec},
      {"Sec8-Chang", suite_chang_table},
      {"Sec12-McNaughton", suite_mcnaughton},
      {"Sec12.1-local-homogeneity", suite_local_homogeneity},
      {"Sec11-form1", suite_form1},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& registry_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, suite] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

std::vector<VerifyReport> run_verify(
    const CorpusSpec& spec, const std::vector<std::string>& selection) {
  std::vector<VerifyReport> out;
  for (const auto& id : selection) {
    auto it = registry().find(id);
    if (it == registry().end()) throw InputError("unknown suite id: " + id);
    VerifyReport r;
    r.id = id;
    auto start = std::chrono::steady_clock::now();
    try {
      auto res = it->second(spec);
      r.pass = res.pass;
      r.detail = res.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    out.push_back(r);
  }
  return out;
}

}  // namespace mvs
