#include <random>
#include <sstream>

#include "coxeter/closure.hpp"
#include "coxeter/oracle.hpp"
#include "support.hpp"

using namespace coxeter;
using testing::group;
using testing::vec;

TEST_CASE("gram matrices") {
  auto a2 = group("A2");
  const auto& f = a2->field();
  CHECK(a2->gram()(0, 0) == f.one());
  CHECK(a2->gram()(0, 1) == f.from_rational(Rational(-1, 2)));
  CHECK(a2->gram()(1, 0) == f.from_rational(Rational(-1, 2)));

  auto inf = group("I2inf");
  CHECK(inf->gram()(0, 1) == inf->field().from_rational(-1));
  CHECK(inf->gram()(1, 1) == inf->field().one());
}

TEST_CASE("matrix validation") {
  CHECK_ERROR_KIND(CoxeterMatrix({"s", "t"}, {1, 3, 4, 1}), InvalidMatrix);
  CHECK_ERROR_KIND(CoxeterMatrix({"s", "t"}, {1, 1, 1, 1}), InvalidMatrix);
  CHECK_ERROR_KIND(CoxeterMatrix({"s", "t"}, {2, 3, 3, 1}), InvalidMatrix);
  CHECK_ERROR_KIND(CoxeterMatrix({"s", "s"}, {1, 3, 3, 1}), InvalidMatrix);
  CHECK_ERROR_KIND(CoxeterMatrix({"s", "t"}, {1, 3, 3}), InvalidMatrix);
  CHECK_ERROR_KIND(CoxeterMatrix({}, {}), InvalidMatrix);
}

TEST_CASE("group file round trip") {
  for (const auto& entry : corpus()) {
    auto text = serialize_group_file(entry.matrix);
    std::istringstream in(text);
    auto parsed = parse_group_file(in);
    CHECK(parsed == entry.matrix);
    CHECK(serialize_group_file(parsed) == text);
  }
}

TEST_CASE("group file parse errors") {
  std::istringstream bad("rank 2\nlabels s t\n1 3\n3\n");
  CHECK_ERROR_KIND(parse_group_file(bad), ParseError);
  std::istringstream junk("rank 2\nlabels s t\n1 x\nx 1\n");
  CHECK_ERROR_KIND(parse_group_file(junk), ParseError);
  std::istringstream asym("# comment\n\nrank 2\nlabels s t\n1 3\n4 1\n");
  CHECK_ERROR_KIND(parse_group_file(asym), InvalidMatrix);
  std::istringstream ok("rank 2\nlabels s t\n1 inf\ninf 1\n");
  CHECK(parse_group_file(ok) == corpus_entry("I2inf").matrix);
}

TEST_CASE("simple actions") {
  auto a2 = group("A2");
  auto s = a2->generator(0);
  CHECK(a2->act(s, a2->simple_root(0)) == vec(*a2, {-1, 0}));
  auto v = vec(*a2, {Rational(2, 3), -5});
  CHECK(a2->act(a2->identity(), v) == v);

  auto inf = group("I2inf");
  auto st = inf->parse_word("s t");
  CHECK(inf->act(st, inf->simple_root(0)) == vec(*inf, {3, 2}));
}

TEST_CASE("dual action is contragredient") {
  auto b3 = group("B3");
  auto w = b3->parse_word("a b c b a");
  Vector f = vec(*b3, {1, -2, Rational(1, 3)});
  Vector v = vec(*b3, {Rational(5, 7), 1, -1});
  auto lhs = dot(b3->act_dual(w, f), v);
  auto rhs = dot(f, b3->act(b3->inv(w), v));
  CHECK(lhs == rhs);
}

TEST_CASE("normalize") {
  auto a2 = group("A2");
  CHECK(a2->format(a2->parse_word("s s")) == "e");
  CHECK(a2->parse_word("s s").is_identity());
  CHECK(a2->format(a2->parse_word("t s t")) == "s t s");
  CHECK(a2->format(a2->parse_word("s t s t")) == "t s");
  CHECK_ERROR_KIND(a2->parse_word("s u"), UnknownGenerator);
}

TEST_CASE("mult, inv, length") {
  auto a2 = group("A2");
  auto s = a2->generator(0);
  CHECK(a2->mult(s, s).is_identity());
  CHECK(a2->format(a2->inv(a2->parse_word("s t"))) == "t s");
  CHECK(a2->parse_word("s t s").length() == 3);
  auto b3 = group("B3");
  CHECK_ERROR_KIND(a2->mult(s, b3->generator(0)), MixedSystems);
}

TEST_CASE("order of products") {
  CHECK(group("A2")->order_of_product(0, 1) == 3);
  CHECK(group("B2")->order_of_product(0, 1) == 4);
  CHECK(group("G2")->order_of_product(0, 1) == 6);
  CHECK(group("A1xA1")->order_of_product(0, 1) == 2);
  CHECK(group("I2inf")->order_of_product(0, 1) == kInfinity);
  auto h3 = group("H3");
  CHECK(h3->order_of_product(0, 1) == 3);
  CHECK(h3->order_of_product(1, 2) == 5);
  CHECK(h3->order_of_product(0, 2) == 2);
}

TEST_CASE("normal forms agree with the oracle's ShortLex words") {
  for (const char* name : {"A3", "B3", "H3", "G2"}) {
    auto sys = group(name);
    auto table = oracle::FiniteGroupTable::enumerate(*sys, 1000);
    for (std::size_t i = 0; i < table.size(); ++i) {
      auto w = sys->normalize(table.word(i));
      CHECK(w.word() == table.word(i));
      CHECK(w.matrix() == table.matrix(i));
    }
  }
}

TEST_CASE("random word properties") {
  std::mt19937 rng(11);
  for (const char* name : {"B3", "H3", "affineA2", "hyperbolic334"}) {
    auto sys = group(name);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(sys->rank()) - 1);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Generator> letters(rng() % 14);
      for (auto& l : letters) l = letter(rng);
      auto w = sys->normalize(letters);
      CHECK(sys->normalize(w.word()) == w);
      CHECK(sys->inv(w).length() == w.length());
      CHECK(w.length() <= letters.size());
      CHECK(w.length() % 2 == letters.size() % 2);
      for (Generator s = 0; s < static_cast<Generator>(sys->rank()); ++s) {
        auto ws = sys->mult(w, sys->generator(s));
        const bool down = ws.length() + 1 == w.length();
        const bool up = ws.length() == w.length() + 1;
        CHECK(down != up);
        CHECK(sys->is_right_descent(w, s) == down);
      }
    }
  }
}

TEST_CASE("is_finite") {
  auto a2 = is_finite(*group("A2"), 10000);
  CHECK(a2.finite);
  CHECK(a2.order == 6);
  auto b3 = is_finite(*group("B3"), 10000);
  CHECK(b3.finite);
  CHECK(b3.order == 48);
  CHECK_FALSE(is_finite(*group("I2inf"), 10000).finite);
}

TEST_CASE("definiteness of the form matches finiteness") {
  for (const auto& entry : corpus())
    CHECK(form_is_positive_definite(*CoxeterSystem::build(entry.matrix)) == (entry.order != 0));
}
