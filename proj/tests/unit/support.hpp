#pragma once

#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

#include "coxeter/corpus.hpp"
#include "coxeter/error.hpp"
#include "coxeter/system.hpp"

namespace testing {

inline std::shared_ptr<const coxeter::CoxeterSystem> group(const std::string& name) {
  return coxeter::CoxeterSystem::build(coxeter::corpus_entry(name).matrix);
}

inline coxeter::Vector vec(const coxeter::CoxeterSystem& sys, std::vector<coxeter::Rational> coords) {
  coxeter::Vector v;
  for (auto& c : coords) v.push_back(sys.field().from_rational(c));
  return v;
}

}  // namespace testing

// Checks that `expr` throws coxeter::Error of the given kind.
#define CHECK_ERROR_KIND(expr, k)                              \
  do {                                                         \
    bool caught_ = false;                                      \
    try {                                                      \
      (void)(expr);                                            \
    } catch (const coxeter::Error& e) {                        \
      caught_ = true;                                          \
      CHECK(e.kind() == coxeter::ErrorKind::k);                \
    }                                                          \
    CHECK_MESSAGE(caught_, "expected " #k);                    \
  } while (0)
