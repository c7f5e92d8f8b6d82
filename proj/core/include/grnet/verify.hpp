#pragma once

#include <string>
#include <vector>

#include "grnet/plabic.hpp"
#include "grnet/seeds.hpp"

namespace grnet {

// "shark", "rect:k,n", or model-file text
PlabicModel builtin_model(const std::string& spec);
bool is_builtin(const std::string& spec);

// face by name (its label) or by its edge-id spec; -1 when absent
int face_by_name(const PlabicModel& m, const std::string& name);
// seed vertex by name, or by label written either way
int vertex_by_name(const Seed& s, const std::string& name);

struct SuiteResult {
  std::string suite;
  std::string instance;
  bool pass = true;
  size_t checks = 0;
  std::string counterexample;  // first failure, empty on pass
  std::string skipped;         // reason the suite does not apply, if any
};

std::vector<std::string> suite_names();

// Suites over a model: plucker, valuation-kappa, xflow, trop-a.
// Suites over (k,n): gt-trop, wformula, weyl-count (levels 0..max_level).
// ParameterError for an unknown suite name.
SuiteResult run_suite(const std::string& suite, const PlabicModel& m, int max_level = 2);

// level-independent pieces reused by tests
SuiteResult check_valuation_kappa(const PlabicModel& m);
SuiteResult check_xflow(const PlabicModel& m);
SuiteResult check_trop_a(const PlabicModel& m, size_t random_vectors = 1000, unsigned seed = 7);
SuiteResult check_exact_sequence(const Seed& s);

}  // namespace grnet
