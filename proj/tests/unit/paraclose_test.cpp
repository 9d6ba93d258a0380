#include <random>

#include "coxeter/closure.hpp"
#include "support.hpp"

using namespace coxeter;
using testing::group;

namespace {

std::vector<GroupElement> words(const CoxeterSystem& sys, std::initializer_list<const char*> text) {
  std::vector<GroupElement> out;
  for (const char* w : text) out.push_back(sys.parse_word(w));
  return out;
}

}  // namespace

TEST_CASE("A2 closures") {
  auto a2 = group("A2");
  auto r = pc(*a2, ClosureQuery{words(*a2, {"s t s"}), std::nullopt});
  CHECK(a2->format(r.closure.representative()) == "s");
  CHECK(r.closure.subset() == a2->parse_set("{t}"));
  CHECK(r.closure.rank() == 1);
  CHECK(r.status == ClosureStatus::Exact);

  auto full = pc(*a2, ClosureQuery{words(*a2, {"s", "t"}), std::nullopt});
  CHECK(full.closure.representative().is_identity());
  CHECK(full.closure.subset() == GeneratorSet::all(2));
  CHECK(full.status == ClosureStatus::Exact);

  auto trivial = pc(*a2, ClosureQuery{words(*a2, {"e"}), std::nullopt});
  CHECK(trivial.closure.rank() == 0);
}

TEST_CASE("infinite dihedral closure of a rotation") {
  auto inf = group("I2inf");
  auto r = pc(*inf, ClosureQuery{words(*inf, {"s t"}), 6});
  CHECK(r.closure.subset() == GeneratorSet::all(2));
  CHECK(r.status == ClosureStatus::RadiusLimited);
  auto ball = element_ball(*inf, 6);
  auto rank1 = candidates_of_rank(ball, 1, 6);
  CHECK_FALSE(rank1.empty());
  for (char hit : scan_candidates(rank1, words(*inf, {"s t"}), Execution::Serial)) CHECK(hit == 0);
}

TEST_CASE("exhaustive search requires a finite group") {
  auto inf = group("I2inf");
  CHECK_ERROR_KIND(pc(*inf, ClosureQuery{words(*inf, {"s"}), std::nullopt}), GroupNotFinite);
}

TEST_CASE("oracle closures") {
  auto a3 = group("A3");
  auto table = oracle::FiniteGroupTable::enumerate(*a3, 100);
  auto all = oracle::all_parabolics(table);
  auto e = pc_oracle_finite(table, all, words(*a3, {"e"}));
  CHECK(e.rank() == 0);
  auto b = pc_oracle_finite(table, all, words(*a3, {"b"}));
  CHECK(b.representative().is_identity());
  CHECK(b.subset() == a3->parse_set("b"));
}

TEST_CASE("every B2 element: exhaustive pc matches the oracle") {
  auto b2 = group("B2");
  auto table = oracle::FiniteGroupTable::enumerate(*b2, 100);
  auto all = oracle::all_parabolics(table);
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::vector<GroupElement> a{b2->normalize(table.word(i))};
    auto r = pc(*b2, ClosureQuery{a, std::nullopt});
    CHECK(r.status == ClosureStatus::Exact);
    CHECK(equals(r.closure, pc_oracle_finite(table, all, a)));
  }
}

TEST_CASE("closure is equivariant, monotone and idempotent") {
  auto b3 = group("B3");
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> letter(0, 2);
  auto random_element = [&] {
    std::vector<Generator> letters(rng() % 9);
    for (auto& l : letters) l = letter(rng);
    return b3->normalize(letters);
  };
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<GroupElement> a{random_element(), random_element()};
    auto p = pc(*b3, ClosureQuery{a, std::nullopt}, Execution::Serial).closure;
    for (const auto& g : a) CHECK(contains_element(p, g));

    auto gens = p.generators();
    CHECK(equals(pc(*b3, ClosureQuery{gens, std::nullopt}).closure, p));

    auto bigger = a;
    bigger.push_back(random_element());
    CHECK(contains(pc(*b3, ClosureQuery{bigger, std::nullopt}).closure, p));

    auto w = random_element();
    std::vector<GroupElement> moved;
    for (const auto& g : a) moved.push_back(b3->conjugate(w, g));
    auto q = pc(*b3, ClosureQuery{moved, std::nullopt}).closure;
    CHECK(equals(q, Parabolic::make(b3->mult(w, p.representative()), p.subset())));
  }
}

TEST_CASE("serial and parallel scans agree") {
  auto h3 = group("H3");
  auto ball = element_ball(*h3, 15);
  auto a = words(*h3, {"a b", "c"});
  for (std::size_t rank = 0; rank <= 3; ++rank) {
    auto cands = candidates_of_rank(ball, rank, 15);
    CHECK(scan_candidates(cands, a, Execution::Serial) == scan_candidates(cands, a, Execution::Parallel));
  }
}
