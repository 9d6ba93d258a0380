#include "coxeter/oracle.hpp"
#include "support.hpp"

using namespace coxeter;
using testing::group;

TEST_CASE("group orders") {
  CHECK(oracle::FiniteGroupTable::enumerate(*group("A2"), 100).size() == 6);
  CHECK(oracle::FiniteGroupTable::enumerate(*group("A3"), 100).size() == 24);
  CHECK(oracle::FiniteGroupTable::enumerate(*group("H3"), 1000).size() == 120);
  CHECK_ERROR_KIND(oracle::FiniteGroupTable::enumerate(*group("I2inf"), 500), GroupNotFinite);
}

TEST_CASE("parabolic counts") {
  auto a1 = CoxeterSystem::build(CoxeterMatrix({"s"}, {1}));
  CHECK(oracle::all_parabolics(oracle::FiniteGroupTable::enumerate(*a1, 10)).size() == 2);
  auto count = [](const char* name) {
    return oracle::all_parabolics(oracle::FiniteGroupTable::enumerate(*group(name), 1000)).size();
  };
  CHECK(count("A1xA1") == 4);
  CHECK(count("A2") == 5);
  CHECK(count("B2") == 6);
  CHECK(count("A3") == 15);
}

TEST_CASE("serial and parallel enumeration agree") {
  auto b3 = group("B3");
  auto table = oracle::FiniteGroupTable::enumerate(*b3, 1000);
  auto serial = oracle::all_parabolics(table, Execution::Serial);
  auto parallel = oracle::all_parabolics(table, Execution::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].elements == parallel[i].elements);
    CHECK(serial[i].ranks == parallel[i].ranks);
  }
}

TEST_CASE("brute force set operations") {
  auto a3 = group("A3");
  auto table = oracle::FiniteGroupTable::enumerate(*a3, 100);
  auto ab = table.special_subgroup(a3->parse_set("a b"));
  auto bc = table.special_subgroup(a3->parse_set("b c"));
  CHECK(ab.size() == 6);
  auto meet = oracle::brute_intersect(ab, bc);
  auto b = *table.find(a3->generator(1).matrix());
  CHECK(meet == oracle::ElementSet{0, b});

  auto a2 = group("A2");
  auto t2 = oracle::FiniteGroupTable::enumerate(*a2, 100);
  auto all = oracle::all_parabolics(t2);
  auto sts = *t2.find(a2->parse_word("s t s").matrix());
  auto r = oracle::brute_pc(all, {sts});
  CHECK(all[r.index].elements == oracle::ElementSet{0, sts});
  CHECK(r.minimal_is_intersection);
  auto id = oracle::brute_pc(all, {0});
  CHECK(all[id.index].elements == oracle::ElementSet{0});
}

TEST_CASE("table multiplication matches group multiplication") {
  auto b3 = group("B3");
  auto table = oracle::FiniteGroupTable::enumerate(*b3, 1000);
  auto mult = table.multiplication_table();
  for (std::size_t i = 0; i < table.size(); i += 5)
    for (std::size_t j = 0; j < table.size(); j += 3) {
      auto product = b3->mult(b3->normalize(table.word(i)), b3->normalize(table.word(j)));
      CHECK(table.word(mult[i][j]) == product.word());
    }
  for (std::size_t i = 0; i < table.size(); ++i) CHECK(mult[i][table.inverse(i)] == 0);
}
