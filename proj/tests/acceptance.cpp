// Acceptance gate: ten end-to-end criteria, each backed by one or more
// registered verification suites over the default corpus. One line per
// criterion; nonzero exit if any fails.

#include <cstdio>
#include <string>
#include <vector>

#include "mvs/verify.hpp"

using namespace mvs;

namespace {

struct Criterion {
  std::string name;
  std::vector<std::string> suites;
};

const std::vector<Criterion> criteria = {
    {"ideal and quotient structure over the corpus",
     {"Lemma-lemm", "Lemma-propo"}},
    {"prime spectra are spectral root systems",
     {"Prop-pr", "Thm-thm:kospec"}},
    {"spectrum and reticulation agree",
     {"Sec5.3-Belluce-iso"}},
    {"closed epimorphisms: three routes and closure equalities",
     {"Thm-thm:closed", "Cor-cor:equality", "Cor-cor:ideals",
      "Sec5.2-Theorem"}},
    {"a dual map that does not preserve closed sets, with witness",
     {"Sec5.3-counterexample"}},
    {"perfect, local and primary classifiers cross-checked",
     {"Thm-theor", "Thm-theori", "Lemma-sit", "Sec9-Lemma", "Thm-thm:local"}},
    {"spectra of lexicographic groups match their symbolic images",
     {"Thm-thm:lspec"}},
    {"the rank-one infinitesimal algebra: table and variety membership",
     {"Sec8-Chang"}},
    {"piecewise-linear normal forms: evaluation, zerosets, homogenization",
     {"Sec12-McNaughton", "Sec12.1-local-homogeneity"}},
    {"germ zerosets in sector form",
     {"Sec11-form1"}},
};

}  // namespace

int main() {
  CorpusSpec cs;
  int failures = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    bool pass = true;
    std::string why;
    double ms = 0;
    try {
      for (const auto& r : run_verify(cs, c.suites)) {
        ms += r.runtime_ms;
        if (!r.pass) {
          pass = false;
          why = r.id + ": " + r.detail;
          break;
        }
      }
    } catch (const std::exception& e) {
      pass = false;
      why = e.what();
    }
    std::printf("[%s] criterion %02zu: %s (%.0f ms)\n", pass ? "PASS" : "FAIL",
                k + 1, c.name.c_str(), ms);
    if (!pass) {
      std::printf("       %s\n", why.c_str());
      ++failures;
    }
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures ? 1 : 0;
}
