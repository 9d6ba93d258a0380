#pragma once

#include <string>
#include <vector>

#include "coxeter/coxeter_matrix.hpp"

namespace coxeter {

struct CorpusEntry {
  std::string name;
  CoxeterMatrix matrix;
  std::size_t order;  // 0 for infinite groups
};

/// The built-in test groups: A2, B2, G2, A1xA1, A3, B3, H3, the infinite
/// dihedral group, affine A2 and the (3,3,4) hyperbolic triangle group.
const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace coxeter
