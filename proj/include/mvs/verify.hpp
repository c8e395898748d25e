#pragma once

#include <string>
#include <vector>

#include "mvs/corpus.hpp"

namespace mvs {

struct VerifyReport {
  std::string id;
  bool pass = false;
  std::string detail;  // counterexample payload on failure
  double runtime_ms = 0;
};

/// All registered suite identifiers, sorted.
const std::vector<std::string>& registry_ids();

/// Runs the selected suites over the corpus. Unknown ids throw InputError;
/// an empty selection yields an empty report.
std::vector<VerifyReport> run_verify(const CorpusSpec& spec,
                                     const std::vector<std::string>& selection);

}  // namespace mvs
