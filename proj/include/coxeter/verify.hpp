#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxeter/parallel.hpp"

namespace coxeter::verify {

/// Outcome of one property suite over the built-in corpus.
struct SuiteResult {
  std::string name;
  std::string title;
  bool passed = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double seconds = 0.0;
  std::string detail;
};

/// Suite names in canonical order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, Execution exec = Execution::Parallel);
std::vector<SuiteResult> run_all(Execution exec = Execution::Parallel);

}  // namespace coxeter::verify
