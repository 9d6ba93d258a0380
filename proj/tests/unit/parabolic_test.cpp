#include <algorithm>
#include <random>

#include "coxeter/oracle.hpp"
#include "coxeter/parabolic.hpp"
#include "support.hpp"

using namespace coxeter;
using testing::group;

namespace {

GeneratorSet set_of(const CoxeterSystem& sys, const char* text) { return sys.parse_set(text); }

}  // namespace

TEST_CASE("make picks the coset-minimal representative") {
  auto a2 = group("A2");
  auto s = a2->generator(0);
  CHECK(Parabolic::make(s, set_of(*a2, "{s}")).representative().is_identity());
  CHECK(a2->format(Parabolic::make(a2->parse_word("s t"), set_of(*a2, "{t}")).representative()) == "s");
  CHECK(Parabolic::make(a2->parse_word("s t s"), GeneratorSet::all(2)).representative().is_identity());
}

TEST_CASE("contains_element") {
  auto a2 = group("A2");
  auto st = Parabolic::make(a2->generator(0), set_of(*a2, "{t}"));
  CHECK(contains_element(st, a2->parse_word("s t s")));
  CHECK_FALSE(contains_element(st, a2->parse_word("t")));

  auto trivial = Parabolic::make(a2->identity(), GeneratorSet{});
  CHECK(contains_element(trivial, a2->identity()));
  CHECK_FALSE(contains_element(trivial, a2->generator(1)));

  CHECK_FALSE(contains_element(Parabolic::make(a2->identity(), set_of(*a2, "{s}")), a2->generator(1)));
}

TEST_CASE("contains and equals") {
  auto a2 = group("A2");
  auto s = a2->generator(0);
  CHECK(equals(Parabolic::make(s, set_of(*a2, "s")), Parabolic::make(a2->identity(), set_of(*a2, "s"))));
  CHECK_FALSE(equals(Parabolic::make(s, set_of(*a2, "t")), Parabolic::make(a2->identity(), set_of(*a2, "t"))));

  auto a3 = group("A3");
  auto ab = Parabolic::make(a3->identity(), set_of(*a3, "{a,b}"));
  auto b = Parabolic::make(a3->identity(), set_of(*a3, "{b}"));
  CHECK(contains(ab, b));
  CHECK_FALSE(contains(b, ab));
}

TEST_CASE("intersect examples") {
  auto a3 = group("A3");
  auto ab = Parabolic::make(a3->identity(), set_of(*a3, "a b"));
  auto bc = Parabolic::make(a3->identity(), set_of(*a3, "b c"));
  auto meet = intersect(ab, bc);
  CHECK(meet.representative().is_identity());
  CHECK(meet.subset() == set_of(*a3, "b"));
  CHECK(intersect(ab, ab) == ab);

  auto a2 = group("A2");
  auto both = intersect(Parabolic::make(a2->identity(), set_of(*a2, "s")),
                        Parabolic::make(a2->identity(), set_of(*a2, "t")));
  CHECK(both.representative().is_identity());
  CHECK(both.subset().empty());
}

TEST_CASE("segment parameters") {
  auto t = segment_parameters(6);
  REQUIRE(t.size() == 6);
  CHECK(t[0] == Rational(1, 2));
  CHECK(t[1] == Rational(1, 3));
  CHECK(t[2] == Rational(2, 3));
  CHECK(t[3] == Rational(1, 5));
  CHECK(t[5] == Rational(3, 5));
}

TEST_CASE("intersections agree with the oracle") {
  auto b3 = group("B3");
  auto table = oracle::FiniteGroupTable::enumerate(*b3, 1000);
  auto all = oracle::all_parabolics(table);
  auto to_set = [&](const Parabolic& p) {
    oracle::ElementSet out;
    auto w = *table.find(p.representative().matrix());
    for (auto u : table.special_subgroup(p.subset())) out.push_back(table.conjugate(w, u));
    std::sort(out.begin(), out.end());
    return out;
  };
  auto as_parabolic = [&](const oracle::OracleParabolic& o) {
    return Parabolic::make(b3->normalize(table.word(o.representative)), o.subset);
  };
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto& x = all[rng() % all.size()];
    const auto& y = all[rng() % all.size()];
    auto meet = intersect(as_parabolic(x), as_parabolic(y));
    CHECK(to_set(meet) == oracle::brute_intersect(x.elements, y.elements));
  }
}

TEST_CASE("conjugacy_normalize") {
  auto a2 = group("A2");
  auto s = set_of(*a2, "s"), t = set_of(*a2, "t");
  auto same = conjugacy_normalize(s, s, a2->identity());
  REQUIRE(same.has_value());
  CHECK(same->w0.is_identity());
  CHECK(same->mapping == std::vector<std::pair<Generator, Generator>>{{0, 0}});

  // (t s) s (t s)^-1 = t s t, so the claim fails and no witness exists.
  CHECK_FALSE(equals(Parabolic::make(a2->identity(), t), Parabolic::make(a2->parse_word("t s"), s)));
  CHECK_FALSE(conjugacy_normalize(t, s, a2->parse_word("t s")).has_value());
  // (s t) s (s t)^-1 = t, and s t sends alpha_s to alpha_t.
  CHECK(equals(Parabolic::make(a2->identity(), t), Parabolic::make(a2->parse_word("s t"), s)));
  auto st = conjugacy_normalize(t, s, a2->parse_word("s t"));
  REQUIRE(st.has_value());
  CHECK(a2->format(st->w0) == "s t");
  CHECK(st->mapping == std::vector<std::pair<Generator, Generator>>{{0, 1}});
  // Same coset: s t s lies in (s t) W_s.
  auto sts = conjugacy_normalize(t, s, a2->parse_word("s t s"));
  REQUIRE(sts.has_value());
  CHECK(sts->w0 == st->w0);

  auto a1a1 = group("A1xA1");
  for (const char* w : {"e", "s", "t", "s t"})
    CHECK_FALSE(conjugacy_normalize(set_of(*a1a1, "s"), set_of(*a1a1, "t"), a1a1->parse_word(w)).has_value());
}

TEST_CASE("conjugacy witnesses exist for all conjugate A3 pairs") {
  auto a3 = group("A3");
  auto table = oracle::FiniteGroupTable::enumerate(*a3, 100);
  for (const auto& I : subsets_by_size(3))
    for (const auto& J : subsets_by_size(3)) {
      if (I.size() != J.size()) continue;
      for (std::size_t i = 0; i < table.size(); ++i) {
        auto w = a3->normalize(table.word(i));
        if (!equals(Parabolic::make(a3->identity(), I), Parabolic::make(w, J))) continue;
        auto witness = conjugacy_normalize(I, J, w);
        REQUIRE(witness.has_value());
        for (auto [from, to] : witness->mapping) {
          CHECK(J.contains(from));
          CHECK(I.contains(to));
          CHECK(a3->act(witness->w0, a3->simple_root(from)) == a3->simple_root(to));
        }
      }
    }
}

TEST_CASE("element membership agrees with the word criterion") {
  std::mt19937 rng(9);
  for (const char* name : {"H3", "hyperbolic334"}) {
    auto sys = group(name);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(sys->rank()) - 1);
    auto random_element = [&](std::size_t max_len) {
      std::vector<Generator> letters(rng() % max_len);
      for (auto& l : letters) l = letter(rng);
      return sys->normalize(letters);
    };
    for (int trial = 0; trial < 100; ++trial) {
      GeneratorSet I;
      for (Generator s = 0; s < static_cast<Generator>(sys->rank()); ++s)
        if (rng() % 2) I.insert(s);
      auto p = Parabolic::make(random_element(8), I);
      auto g = random_element(10);
      CHECK(contains_element(p, g) == contains_element_by_word(p, g));
      for (const auto& gen : p.generators()) CHECK(contains_element(p, gen));
    }
  }
}
