#include "mvs/json_io.hpp"

#include <fstream>
#include <sstream>

namespace mvs {

namespace {

std::vector<std::vector<int>> table_from(const Json& j, const char* key,
                                         int n) {
  if (!j.contains(key) || !j[key].is_array())
    throw InputError(std::string("json: missing table '") + key + "'");
  auto t = j[key].get<std::vector<std::vector<int>>>();
  if (static_cast<int>(t.size()) != n)
    throw InputError(std::string("json: table '") + key + "' has wrong shape");
  for (const auto& row : t)
    if (static_cast<int>(row.size()) != n)
      throw InputError(std::string("json: table '") + key +
                       "' has wrong shape");
  return t;
}

}  // namespace

Json algebra_to_json(const FiniteMvAlgebra& a) {
  Json j;
  j["size"] = a.size;
  j["oplus"] = a.oplus;
  j["neg"] = a.neg;
  if (!a.labels.empty()) j["labels"] = a.labels;
  return j;
}

FiniteMvAlgebra algebra_from_json(const Json& j) {
  FiniteMvAlgebra a;
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw InputError("json: algebra needs an integer 'size'");
  a.size = j["size"].get<int>();
  if (a.size < 1) throw InputError("json: algebra size must be positive");
  check_size_guard(a.size, "algebra_from_json");
  a.oplus = table_from(j, "oplus", a.size);
  if (!j.contains("neg")) throw InputError("json: algebra needs 'neg'");
  a.neg = j["neg"].get<std::vector<int>>();
  if (static_cast<int>(a.neg.size()) != a.size)
    throw InputError("json: 'neg' has wrong length");
  if (j.contains("labels")) {
    a.labels = j["labels"].get<std::vector<std::string>>();
    if (static_cast<int>(a.labels.size()) != a.size)
      throw InputError("json: 'labels' has wrong length");
  }
  return a;
}

Json mv_hom_to_json(const MvHom& h) {
  Json j;
  j["source"] = algebra_to_json(h.source);
  j["target"] = algebra_to_json(h.target);
  j["map"] = h.map;
  return j;
}

MvHom mv_hom_from_json(const Json& j) {
  MvHom h;
  if (!j.contains("source") || !j.contains("target") || !j.contains("map"))
    throw InputError("json: hom needs 'source', 'target', 'map'");
  h.source = algebra_from_json(j["source"]);
  h.target = algebra_from_json(j["target"]);
  h.map = j["map"].get<std::vector<int>>();
  return h;
}

Json lattice_to_json(const FiniteDistLattice& l) {
  Json j;
  j["size"] = l.size;
  j["join"] = l.join;
  j["meet"] = l.meet;
  return j;
}

FiniteDistLattice lattice_from_json(const Json& j) {
  FiniteDistLattice l;
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw InputError("json: lattice needs an integer 'size'");
  l.size = j["size"].get<int>();
  if (l.size < 1) throw InputError("json: lattice size must be positive");
  check_size_guard(l.size, "lattice_from_json");
  l.join = table_from(j, "join", l.size);
  l.meet = table_from(j, "meet", l.size);
  // locate the bounds from the tables
  for (int x = 0; x < l.size; ++x) {
    bool bot = true, top = true;
    for (int y = 0; y < l.size; ++y) {
      if (l.join[x][y] != y) bot = false;
      if (l.join[x][y] != x) top = false;
    }
    if (bot) l.bottom = x;
    if (top) l.top = x;
  }
  return l;
}

Json lattice_hom_to_json(const LatticeHom& h) {
  Json j;
  j["source"] = lattice_to_json(h.source);
  j["target"] = lattice_to_json(h.target);
  j["map"] = h.map;
  return j;
}

LatticeHom lattice_hom_from_json(const Json& j) {
  LatticeHom h;
  if (!j.contains("source") || !j.contains("target") || !j.contains("map"))
    throw InputError("json: hom needs 'source', 'target', 'map'");
  h.source = lattice_from_json(j["source"]);
  h.target = lattice_from_json(j["target"]);
  h.map = j["map"].get<std::vector<int>>();
  return h;
}

Json normal_form_to_json(const NormalForm& nf) {
  Json j;
  j["arity"] = nf.arity;
  Json meets = Json::array();
  for (const auto& group : nf.meets) {
    Json g = Json::array();
    for (const auto& p : group) {
      Json piece;
      std::vector<long long> a;
      for (const auto& c : p.a) a.push_back(c.convert_to<long long>());
      piece["a"] = a;
      piece["b"] = p.b.convert_to<long long>();
      g.push_back(piece);
    }
    meets.push_back(g);
  }
  j["meets"] = meets;
  return j;
}

NormalForm normal_form_from_json(const Json& j) {
  NormalForm nf;
  if (!j.contains("arity") || !j.contains("meets"))
    throw InputError("json: normal form needs 'arity' and 'meets'");
  nf.arity = j["arity"].get<int>();
  for (const auto& group : j["meets"]) {
    std::vector<Piece> g;
    for (const auto& piece : group) {
      Piece p;
      if (!piece.contains("a") || !piece.contains("b"))
        throw InputError("json: piece needs 'a' and 'b'");
      for (long long c : piece["a"].get<std::vector<long long>>())
        p.a.push_back(Integer(c));
      p.b = Integer(piece["b"].get<long long>());
      g.push_back(p);
    }
    nf.meets.push_back(g);
  }
  check_normal_form(nf);
  return nf;
}

Json classification_to_json(const ClassificationReport& r) {
  Json j;
  j["perfect"] = r.perfect;
  j["local"] = r.local;
  j["semisimple"] = r.semisimple;
  j["rank"] = r.rank_value;
  j["inVC"] = r.in_vc;
  Json vk = Json::object();
  for (const auto& [m, v] : r.in_vkm) vk[std::to_string(m)] = v;
  j["inVK"] = vk;
  Json w = Json::object();
  if (r.perfect_witness) w["perfect"] = *r.perfect_witness;
  if (r.local_witness) w["local"] = *r.local_witness;
  w["maximalIdeals"] = Json::array();
  for (Mask m : r.maximal_ideals) w["maximalIdeals"].push_back(mask_to_vec(m));
  w["radical"] = mask_to_vec(r.radical_mask);
  j["witnesses"] = w;
  return j;
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw InputError("rational: zero denominator");
    return Rational(num) / Rational(den);
  } catch (const std::exception&) {
    throw InputError("rational: cannot parse '" + s + "'");
  }
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

std::string interval_to_string(const Interval1D& z) {
  if (z.pieces.empty()) return "{}";
  std::ostringstream os;
  for (size_t i = 0; i < z.pieces.size(); ++i) {
    if (i) os << " u ";
    const auto& p = z.pieces[i];
    if (p.first == p.second)
      os << "{" << rational_to_string(p.first) << "}";
    else
      os << "[" << rational_to_string(p.first) << ", "
         << rational_to_string(p.second) << "]";
  }
  return os.str();
}

std::string emit_dot(const Poset& p, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < p.n; ++i) {
    std::string label =
        i < static_cast<int>(labels.size()) ? labels[i] : std::to_string(i);
    os << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (x == y || !p.leq[x][y]) continue;
      bool covering = true;
      for (int z = 0; z < p.n; ++z)
        if (z != x && z != y && p.leq[x][z] && p.leq[z][y]) {
          covering = false;
          break;
        }
      if (covering) os << "  n" << x << " -> n" << y << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string emit_dot(const SpecPoset& s) { return emit_dot(s.order, s.labels); }

std::string emit_dot(const FiniteDistLattice& l) {
  return emit_dot(l.order(), l.labels);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("cannot parse JSON from " + path + ": " + e.what());
  }
  return j;
}

}  // namespace mvs
