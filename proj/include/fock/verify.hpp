#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fock/multipartition.hpp"

namespace fock {

struct CheckResult {
  std::string name;
  bool pass = false;
  long long cases = 0;
  std::string detail;  // first counterexample or a short note
};

struct VerifyOptions {
  std::vector<Multicharge> charges;  // pools to sweep
  EModulus e = EModulus::finite(2);
  int max_rank = 4;
  std::size_t vertex_cap = 500000;
};

// Suites: hw-equivalence, period-invariance, word-equality,
// weight-projection, subgraph, counting, crystal-sanity, all.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace fock
