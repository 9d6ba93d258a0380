#include "coxeter/corpus.hpp"

#include "coxeter/error.hpp"

namespace coxeter {

namespace {

constexpr Label inf = kInfinity;

CoxeterMatrix dihedral(Label m) { return CoxeterMatrix({"s", "t"}, {1, m, m, 1}); }

CoxeterMatrix triangle(Label ab, Label bc, Label ac) {
  return CoxeterMatrix({"a", "b", "c"}, {1, ab, ac, ab, 1, bc, ac, bc, 1});
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"A2", dihedral(3), 6},
      {"B2", dihedral(4), 8},
      {"G2", dihedral(6), 12},
      {"A1xA1", dihedral(2), 4},
      {"A3", triangle(3, 3, 2), 24},
      {"B3", triangle(3, 4, 2), 48},
      {"H3", triangle(3, 5, 2), 120},
      {"I2inf", dihedral(inf), 0},
      {"affineA2", triangle(3, 3, 3), 0},
      {"hyperbolic334", triangle(3, 3, 4), 0},
  };
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw Error(ErrorKind::ParseError, "no corpus group named " + name);
}

}  // namespace coxeter
