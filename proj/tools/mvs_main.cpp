#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvs/classify.hpp"
#include "mvs/corpus.hpp"
#include "mvs/functors.hpp"
#include "mvs/json_io.hpp"
#include "mvs/mcnaughton.hpp"
#include "mvs/spectra.hpp"
#include "mvs/verify.hpp"

namespace {

using namespace mvs;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << text;
}

Mask parse_ideal_list(const std::string& csv, int size) {
  Mask m = 0;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int v = std::stoi(tok);
    if (v < 0 || v >= size) throw InputError("ideal element out of range");
    m |= Mask{1} << v;
  }
  return m;
}

Json spec_to_json(const SpecPoset& s) {
  Json j;
  j["points"] = Json::array();
  for (size_t k = 0; k < s.labels.size(); ++k) {
    Json p;
    p["label"] = s.labels[k];
    if (k < s.points.size()) p["members"] = mask_to_vec(s.points[k].members);
    j["points"].push_back(p);
  }
  Json order = Json::array();
  for (int i = 0; i < s.order.n; ++i)
    for (int k = 0; k < s.order.n; ++k)
      if (i != k && s.order.leq[i][k]) order.push_back({i, k});
  j["leq"] = order;
  return j;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"finite and symbolic MV-algebra workbench"};
  app.require_subcommand(1);

  std::string algebra_path, hom_path, lattice_path, nf_path;
  std::string dot_path, ideal_csv, group_name, at_csv, out_dir;
  int unit_m = 1, komori_m = 1, classify_m = 0;
  bool json_flag = false, verify_all = false;
  std::vector<std::string> suite_ids;

  auto* validate_cmd = app.add_subcommand("validate", "check the MV axioms");
  validate_cmd->add_option("algebra", algebra_path)->required();

  auto* spec_cmd = app.add_subcommand("spec", "prime spectrum poset");
  spec_cmd->add_option("algebra", algebra_path)->required();
  spec_cmd->add_option("--dot", dot_path);
  spec_cmd->add_flag("--json", json_flag);

  auto* ideals_cmd = app.add_subcommand("ideals", "all ideals");
  ideals_cmd->add_option("algebra", algebra_path)->required();

  auto* classify_cmd = app.add_subcommand("classify", "classification report");
  classify_cmd->add_option("algebra", algebra_path)->required();
  classify_cmd->add_option("--m", classify_m);

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient by an ideal");
  quotient_cmd->add_option("algebra", algebra_path)->required();
  quotient_cmd->add_option("--ideal", ideal_csv)->required();

  auto* hom_cmd = app.add_subcommand("hom", "lattice homomorphism checks");
  auto* check_closed =
      hom_cmd->add_subcommand("check-closed", "closedness predicates");
  check_closed->add_option("hom", hom_path)->required();

  auto* lattice_cmd = app.add_subcommand("lattice", "lattice operations");
  auto* dual_cmd = lattice_cmd->add_subcommand("dual", "Stone dual poset");
  dual_cmd->add_option("lattice", lattice_path)->required();
  dual_cmd->add_option("--dot", dot_path);

  auto* functor_cmd = app.add_subcommand("functor", "interval constructions");
  auto* gamma_cmd = functor_cmd->add_subcommand("gamma");
  gamma_cmd->add_option("--group", group_name)->required();
  gamma_cmd->add_option("--unit", unit_m);
  auto* delta_cmd = functor_cmd->add_subcommand("delta");
  delta_cmd->add_option("--group", group_name)->required();
  auto* belluce_cmd = functor_cmd->add_subcommand("belluce");
  belluce_cmd->add_option("algebra", algebra_path)->required();
  auto* idc_cmd = functor_cmd->add_subcommand("idc");
  idc_cmd->add_option("algebra", algebra_path)->required();
  auto* komori_cmd = functor_cmd->add_subcommand("komori");
  komori_cmd->add_option("--m", komori_m)->required();

  auto* mcn_cmd = app.add_subcommand("mcn", "normal-form geometry");
  auto* eval_cmd = mcn_cmd->add_subcommand("eval");
  eval_cmd->add_option("nf", nf_path)->required();
  eval_cmd->add_option("--at", at_csv)->required();
  auto* homog_cmd = mcn_cmd->add_subcommand("homog");
  homog_cmd->add_option("nf", nf_path)->required();
  auto* zeroset_cmd = mcn_cmd->add_subcommand("zeroset");
  zeroset_cmd->add_option("nf", nf_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run theorem suites");
  verify_cmd->add_option("ids", suite_ids, "suite ids (or 'lspec')");
  verify_cmd->add_flag("--all", verify_all);
  verify_cmd->add_option("--group", group_name);

  auto* corpus_cmd = app.add_subcommand("corpus", "corpus generation");
  auto* emit_cmd = corpus_cmd->add_subcommand("emit");
  emit_cmd->add_option("--out", out_dir)->required();

  CLI11_PARSE(app, argc, argv);

  if (*validate_cmd) {
    auto a = algebra_from_json(read_json_file(algebra_path));
    auto rep = validate_algebra(a);
    Json j;
    j["wellFormed"] = rep.table_well_formed;
    j["violations"] = Json::array();
    for (const auto& v : rep.violations)
      j["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
    std::cout << j.dump(2) << "\n";
    return rep.ok() ? 0 : 1;
  }

  if (*spec_cmd) {
    auto a = algebra_from_json(read_json_file(algebra_path));
    auto s = spec(a);
    if (!dot_path.empty()) write_text(dot_path, emit_dot(s));
    std::cout << spec_to_json(s).dump(2) << "\n";
    return 0;
  }

  if (*ideals_cmd) {
    auto a = algebra_from_json(read_json_file(algebra_path));
    Json j = Json::array();
    for (const auto& i : enumerate_ideals(a)) {
      Json e;
      e["members"] = mask_to_vec(i.members);
      e["prime"] = is_prime(a, i) ? true : false;
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (*classify_cmd) {
    auto a = algebra_from_json(read_json_file(algebra_path));
    std::vector<int> ms;
    if (classify_m > 0) ms.push_back(classify_m);
    std::cout << classification_to_json(classify(a, ms)).dump(2) << "\n";
    return 0;
  }

  if (*quotient_cmd) {
    auto a = algebra_from_json(read_json_file(algebra_path));
    auto q = quotient(a, parse_ideal_list(ideal_csv, a.size));
    Json j;
    j["algebra"] = algebra_to_json(q.algebra);
    j["canonicalMap"] = q.canonical.map;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (*check_closed) {
    auto h = lattice_hom_from_json(read_json_file(hom_path));
    bool defn = is_closed_epi_defn(h);
    bool downsets = is_closed_epi_downsets(h);
    bool ideals = is_closed_epi_ideals(h);
    Json j;
    j["closedDefn"] = defn;
    j["closedDownsets"] = downsets;
    j["closedIdeals"] = ideals;
    j["dualPreservesClosed"] = dual_preserves_closed(h);
    std::cout << j.dump(2) << "\n";
    if (defn != downsets || downsets != ideals) {
      std::cerr << "internal consistency failure: closedness predicates "
                   "disagree\n";
      return 1;
    }
    return 0;
  }

  if (*dual_cmd) {
    auto l = lattice_from_json(read_json_file(lattice_path));
    auto check = validate_lattice(l);
    if (!check.ok) throw InputError("invalid lattice: " + check.reason);
    auto primes = lattice_primes(l);
    SpecPoset s;
    for (Mask p : primes) {
      s.points.push_back({p});
      std::ostringstream os;
      os << "{";
      auto v = mask_to_vec(p);
      for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << "}";
      s.labels.push_back(os.str());
    }
    s.order.n = static_cast<int>(primes.size());
    s.order.leq.assign(s.order.n, std::vector<bool>(s.order.n, false));
    for (int i = 0; i < s.order.n; ++i)
      for (int k = 0; k < s.order.n; ++k)
        s.order.leq[i][k] = (primes[i] & ~primes[k]) == 0;
    if (!dot_path.empty()) write_text(dot_path, emit_dot(s));
    std::cout << spec_to_json(s).dump(2) << "\n";
    return 0;
  }

  if (*gamma_cmd || *delta_cmd) {
    GammaResult r = [&] {
      if (*delta_cmd) return delta(LexGroup::parse(group_name));
      UnitalLGroup gu;
      gu.group = LexGroup::parse(group_name);
      gu.unit = gu.group.zero();
      if (gu.group.rank > 0) gu.unit[0] = Rational(unit_m);
      return gamma(gu);
    }();
    if (std::holds_alternative<FiniteMvAlgebra>(r)) {
      std::cout << algebra_to_json(std::get<FiniteMvAlgebra>(r)).dump(2)
                << "\n";
    } else {
      const auto& s = std::get<SymbolicMvAlgebra>(r);
      Json j;
      j["symbolic"] = true;
      j["group"] = s.gu.group.name;
      Json unit = Json::array();
      for (const auto& c : s.gu.unit) unit.push_back(rational_to_string(c));
      j["unit"] = unit;
      j["one"] = s.show(s.one());
      auto sp = symbolic_spec(s);
      j["spectrum"] = sp.labels;
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  }

  if (*belluce_cmd || *idc_cmd) {
    auto a = algebra_from_json(read_json_file(algebra_path));
    auto l = *belluce_cmd ? belluce(a) : idc(a);
    std::cout << lattice_to_json(l).dump(2) << "\n";
    return 0;
  }

  if (*komori_cmd) {
    auto s = komori(komori_m);
    Json j;
    j["symbolic"] = true;
    j["presentation"] = komori_m == 1 ? "chang" : "komori";
    j["m"] = komori_m;
    j["one"] = s.show(s.one());
    j["spectrum"] = symbolic_spec(s).labels;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (*eval_cmd) {
    auto nf = normal_form_from_json(read_json_file(nf_path));
    RatPoint x;
    std::stringstream ss(at_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) x.push_back(rational_from_string(tok));
    std::cout << rational_to_string(eval_nf(nf, x)) << "\n";
    return 0;
  }

  if (*homog_cmd) {
    auto nf = normal_form_from_json(read_json_file(nf_path));
    std::cout << normal_form_to_json(homogenize(nf)).dump(2) << "\n";
    return 0;
  }

  if (*zeroset_cmd) {
    auto nf = normal_form_from_json(read_json_file(nf_path));
    std::cout << interval_to_string(zeroset_1d(nf)) << "\n";
    return 0;
  }

  if (*verify_cmd) {
    if (!suite_ids.empty() && suite_ids[0] == "lspec") {
      if (group_name.empty())
        throw InputError("verify lspec needs --group");
      bool ok = verify_lspec(LexGroup::parse(group_name));
      Json j;
      j["group"] = group_name;
      j["pass"] = ok;
      std::cout << j.dump(2) << "\n";
      return ok ? 0 : 1;
    }
    std::vector<std::string> selection =
        verify_all ? registry_ids() : suite_ids;
    auto reports = run_verify(CorpusSpec{}, selection);
    Json j = Json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
      Json e;
      e["id"] = r.id;
      e["pass"] = r.pass;
      if (!r.detail.empty()) e["detail"] = r.detail;
      e["runtimeMs"] = r.runtime_ms;
      j.push_back(e);
      all_pass = all_pass && r.pass;
    }
    std::cout << j.dump(2) << "\n";
    return all_pass ? 0 : 1;
  }

  if (*emit_cmd) {
    std::filesystem::create_directories(out_dir);
    CorpusSpec cs;
    Json manifest = Json::object();
    auto emit = [&](const std::string& name, const Json& content) {
      std::string text = content.dump(2) + "\n";
      write_text(out_dir + "/" + name, text);
      manifest[name] = fnv1a_hex(text);
    };
    auto algebras = corpus_algebras(cs);
    for (size_t i = 0; i < algebras.size(); ++i) {
      std::ostringstream os;
      os << "algebra_" << std::setw(3) << std::setfill('0') << i << ".json";
      emit(os.str(), algebra_to_json(algebras[i]));
    }
    auto lattices = all_dist_lattices(cs.max_lattice_size);
    for (size_t i = 0; i < lattices.size(); ++i) {
      std::ostringstream os;
      os << "lattice_" << std::setw(3) << std::setfill('0') << i << ".json";
      emit(os.str(), lattice_to_json(lattices[i]));
    }
    write_text(out_dir + "/manifest.json", manifest.dump(2) + "\n");
    std::cout << "wrote " << manifest.size() << " corpus files to " << out_dir
              << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mvs::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const mvs::InternalConsistencyError& e) {
    nlohmann::json j;
    j["internalConsistencyFailure"] = e.what();
    std::cout << j.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
