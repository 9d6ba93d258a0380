#include <set>

#include "coxeter/oracle.hpp"
#include "coxeter/roots.hpp"
#include "support.hpp"

using namespace coxeter;
using testing::group;
using testing::vec;

TEST_CASE("root_of") {
  auto a2 = group("A2");
  CHECK(root_of(a2->identity(), 0).coords == a2->simple_root(0));
  CHECK(root_of(a2->generator(0), 1).coords == vec(*a2, {1, 1}));
  auto neg = root_of(a2->generator(0), 0);
  CHECK(neg.coords == vec(*a2, {-1, 0}));
  CHECK_FALSE(neg.is_positive());
}

TEST_CASE("checked_root rejects mixed signs") {
  auto a2 = group("A2");
  CHECK_ERROR_KIND(checked_root(vec(*a2, {1, -1})), RootSignViolation);
  CHECK_ERROR_KIND(checked_root(vec(*a2, {0, 0})), RootSignViolation);
  CHECK(checked_root(vec(*a2, {0, -2})).sign() == -1);
}

TEST_CASE("reflection_of_root") {
  auto a2 = group("A2");
  CHECK(reflection_of_root(*a2, checked_root(a2->simple_root(0))).element == a2->generator(0));
  auto r = reflection_of_root(*a2, checked_root(vec(*a2, {1, 1})));
  CHECK(a2->format(r.element) == "s t s");

  auto inf = group("I2inf");
  auto r5 = reflection_of_root(*inf, checked_root(vec(*inf, {3, 2})));
  CHECK(inf->format(r5.element) == "s t s t s");

  CHECK_ERROR_KIND(reflection_of_root(*a2, checked_root(vec(*a2, {2, 1}))), NotARoot);
  CHECK_ERROR_KIND(reflection_of_root(*a2, checked_root(vec(*a2, {-1, 0}))), NotARoot);
}

TEST_CASE("enumerate_roots") {
  auto a2 = group("A2");
  CHECK(enumerate_roots(*a2, 0).size() == 2);
  CHECK(enumerate_roots(*a2, 1).size() == 3);
  CHECK(enumerate_roots(*a2, 5).size() == 3);
  CHECK(enumerate_roots(*group("B2"), 2).size() == 4);
  CHECK(enumerate_roots(*group("H3"), 20).size() == 15);
  CHECK(enumerate_roots(*group("B3"), 0).size() == 3);
}

TEST_CASE("positive roots match reflections of the oracle") {
  for (const char* name : {"A3", "B3", "H3"}) {
    auto sys = group(name);
    auto table = oracle::FiniteGroupTable::enumerate(*sys, 1000);
    std::set<std::size_t> reflections;
    for (std::size_t w = 0; w < table.size(); ++w)
      for (Generator s = 0; s < static_cast<Generator>(sys->rank()); ++s)
        reflections.insert(table.conjugate(w, table.left_multiply(s, 0)));

    auto roots = enumerate_roots(*sys, 100);
    CHECK(roots.size() == reflections.size());
    for (const auto& r : roots) {
      auto refl = reflection_of_root(*sys, r);
      CHECK(reflection_of_root(*sys, refl.root).root == r);
      auto idx = table.find(refl.element.matrix());
      REQUIRE(idx.has_value());
      CHECK(reflections.count(*idx) == 1);
    }
  }
}

TEST_CASE("descend_root") {
  auto a2 = group("A2");
  auto both = GeneratorSet::all(2);
  auto d0 = descend_root(*a2, checked_root(a2->simple_root(0)), both);
  CHECK(d0.prefix.empty());
  CHECK(d0.target == 0);

  auto d1 = descend_root(*a2, checked_root(vec(*a2, {1, 1})), both);
  CHECK(d1.prefix == std::vector<Generator>{0});
  CHECK(d1.target == 1);

  CHECK_ERROR_KIND(descend_root(*a2, checked_root(vec(*a2, {1, 1})), GeneratorSet::single(0)),
                   SupportNotContained);
}

TEST_CASE("descend_root reconstructs the root") {
  for (const char* name : {"H3", "affineA2", "hyperbolic334"}) {
    auto sys = group(name);
    for (const auto& r : enumerate_roots(*sys, 4)) {
      auto d = descend_root(*sys, r, r.support());
      auto u = sys->normalize(d.prefix);
      CHECK(sys->act(u, sys->simple_root(d.target)) == r.coords);
      for (Generator g : d.prefix) CHECK(r.support().contains(g));
    }
  }
}
