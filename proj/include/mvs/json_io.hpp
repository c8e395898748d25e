#pragma once

#include <string>

#include <json.hpp>

#include "mvs/classify.hpp"
#include "mvs/lattice.hpp"
#include "mvs/mcnaughton.hpp"
#include "mvs/mv_algebra.hpp"
#include "mvs/spectra.hpp"

namespace mvs {

using Json = nlohmann::json;

// Algebra files: { "size": n, "oplus": [[int]], "neg": [int],
//                  "labels": [string]? }
Json algebra_to_json(const FiniteMvAlgebra& a);
FiniteMvAlgebra algebra_from_json(const Json& j);

// Hom files: { "source": <algebra>, "target": <algebra>, "map": [int] }
Json mv_hom_to_json(const MvHom& h);
MvHom mv_hom_from_json(const Json& j);

// Lattice files: { "size": n, "join": [[int]], "meet": [[int]] }
Json lattice_to_json(const FiniteDistLattice& l);
FiniteDistLattice lattice_from_json(const Json& j);

Json lattice_hom_to_json(const LatticeHom& h);
LatticeHom lattice_hom_from_json(const Json& j);

// Normal forms: { "arity": n, "meets": [ [ {"a":[int],"b":int} ] ] }
Json normal_form_to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const Json& j);

Json classification_to_json(const ClassificationReport& r);

/// "p/q" or "p"; exact.
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

std::string interval_to_string(const Interval1D& z);

/// Hasse diagram, covering edges only, nodes in index order.
std::string emit_dot(const Poset& p, const std::vector<std::string>& labels);
std::string emit_dot(const SpecPoset& s);
std::string emit_dot(const FiniteDistLattice& l);

Json read_json_file(const std::string& path);

}  // namespace mvs
