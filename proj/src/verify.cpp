#include "coxeter/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "coxeter/closure.hpp"
#include "coxeter/corpus.hpp"
#include "coxeter/error.hpp"
#include "coxeter/roots.hpp"

namespace coxeter::verify {

namespace {

using oracle::ElementSet;
using oracle::FiniteGroupTable;
using oracle::OracleParabolic;
using SystemPtr = std::shared_ptr<const CoxeterSystem>;

// Sample sizes and tolerances of the suites.
constexpr std::size_t kRootDepth = 8;
constexpr int kClosureSamples = 200;
constexpr int kPartitionSamples = 100;
constexpr int kFieldSamples = 1000;
constexpr std::size_t kSmokeRadius = 6;
// Relative agreement of exact results with long double evaluation.
constexpr long double kFloatAgreement = 1e-9L;

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }

  void merge(const Tally& other) {
    checks += other.checks;
    if (other.failures && failures == 0) first_failure = other.first_failure;
    failures += other.failures;
  }
};

SystemPtr system_for(const std::string& name) { return CoxeterSystem::build(corpus_entry(name).matrix); }

const std::vector<std::string> kFinite{"A2", "B2", "G2", "A1xA1", "A3", "B3", "H3"};
const std::vector<std::string> kAll{"A2", "B2", "G2", "A1xA1", "A3", "B3", "H3", "I2inf", "affineA2", "hyperbolic334"};

// Runs body(group) for each group, possibly in parallel, merging tallies in
// list order so the report does not depend on scheduling.
Tally over_groups(const std::vector<std::string>& groups, Execution exec,
                  const std::function<void(const std::string&, Tally&)>& body) {
  std::vector<Tally> parts(groups.size());
  parallel_for(groups.size(), exec, [&](std::size_t i) { body(groups[i], parts[i]); });
  Tally out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

Parabolic to_parabolic(const FiniteGroupTable& table, const OracleParabolic& p) {
  return Parabolic::make(table.system().normalize(table.word(p.representative)), p.subset);
}

ElementSet element_set(const FiniteGroupTable& table, const Parabolic& p) {
  std::size_t w = *table.find(p.representative().matrix());
  ElementSet out;
  for (std::size_t u : table.special_subgroup(p.subset())) out.push_back(table.conjugate(w, u));
  std::sort(out.begin(), out.end());
  return out;
}

GroupElement random_element(const std::vector<std::vector<GroupElement>>& ball, std::mt19937_64& rng) {
  std::size_t total = 0;
  for (const auto& layer : ball) total += layer.size();
  std::size_t k = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
  for (const auto& layer : ball) {
    if (k < layer.size()) return layer[k];
    k -= layer.size();
  }
  return ball.front().front();
}

// Exhaustive positive roots of a finite group (BFS stops on its own).
std::vector<Root> all_positive_roots(const CoxeterSystem& sys, GeneratorSet subset) {
  return enumerate_roots(sys, 1'000'000, subset);
}

void faithfulness(Execution exec, Tally& tally) {
  const std::vector<std::string> groups{"A2", "B2", "G2", "A3", "B3", "H3"};
  tally.merge(over_groups(groups, exec, [](const std::string& g, Tally& t) {
    auto sys = system_for(g);
    auto fin = is_finite(*sys, 10'000);
    t.check(fin.finite && fin.order == corpus_entry(g).order, g + ": normal-form count differs from |W|");
    std::unordered_set<std::string> keys;
    for (const auto& layer : element_ball(*sys, fin.longest))
      for (const auto& w : layer) t.check(keys.insert(w.matrix().key()).second, g + ": two normal forms share a matrix");
    t.check(keys.size() == corpus_entry(g).order, g + ": matrix count differs from |W|");
  }));
}

void product_orders(Execution exec, Tally& tally) {
  std::set<Label> seen_labels;
  tally.merge(over_groups(kAll, exec, [](const std::string& g, Tally& t) {
    auto sys = system_for(g);
    const auto& m = sys->coxeter_matrix();
    for (std::size_t s = 0; s < sys->rank(); ++s)
      for (std::size_t u = 0; u < sys->rank(); ++u) {
        if (s == u) continue;
        Label got = sys->order_of_product(static_cast<Generator>(s), static_cast<Generator>(u));
        t.check(got == m(s, u), g + ": order of st differs from m_st");
        if (m(s, u) != kInfinity) {
          Matrix st = sys->simple_reflection(static_cast<Generator>(s)) * sys->simple_reflection(static_cast<Generator>(u));
          Matrix power = Matrix::identity(sys->field(), sys->rank());
          for (Label k = 0; k < m(s, u); ++k) power = power * st;
          t.check(power.is_identity(), g + ": (st)^m is not the identity");
        }
      }
  }));
  for (const auto& e : corpus())
    for (Label l : e.matrix.entries()) seen_labels.insert(l);
  tally.check(seen_labels.count(4) && seen_labels.count(5) && seen_labels.count(6), "corpus lacks labels 4, 5 or 6");
}

void root_dichotomy(Execution exec, Tally& tally) {
  tally.merge(over_groups(kAll, exec, [](const std::string& g, Tally& t) {
    auto sys = system_for(g);
    auto check_root = [&](const Vector& v) {
      bool pos = false, neg = false;
      for (const auto& c : v) {
        pos = pos || c.sign() > 0;
        neg = neg || c.sign() < 0;
      }
      t.check(pos != neg, g + ": root with mixed or zero coordinates");
      t.check(sys->form(v, v) == sys->field().one(), g + ": root without unit norm");
    };
    for (const auto& r : enumerate_roots(*sys, kRootDepth)) check_root(r.coords);
    for (const auto& layer : element_ball(*sys, 8))
      for (const auto& w : layer)
        for (std::size_t s = 0; s < sys->rank(); ++s) check_root(w.matrix().column(s));
  }));
}

void descent_sign(Execution exec, Tally& tally) {
  tally.merge(over_groups(kFinite, exec, [](const std::string& g, Tally& t) {
    auto sys = system_for(g);
    auto table = FiniteGroupTable::enumerate(*sys, 10'000);
    for (const auto& alpha : all_positive_roots(*sys, sys->all_generators())) {
      auto refl = table.find(reflection_matrix(*sys, alpha.coords));
      t.check(refl.has_value(), g + ": reflection of a root is not in W");
      if (!refl) continue;
      for (std::size_t w = 0; w < table.size(); ++w) {
        bool longer = table.length(table.multiply(w, *refl)) > table.length(w);
        bool positive = CoxeterSystem::root_sign(table.matrix(w) * alpha.coords) > 0;
        t.check(longer == positive, g + ": l(w t) > l(w) disagrees with w(alpha) > 0");
      }
    }
  }));
}

void subsystem_roots(Execution exec, Tally& tally) {
  struct Case {
    std::string group;
    std::size_t depth;
  };
  const std::vector<Case> cases{{"A2", 1'000'000},    {"B2", 1'000'000}, {"A1xA1", 1'000'000}, {"A3", 1'000'000},
                                {"B3", 1'000'000},    {"I2inf", 6},      {"affineA2", 6}};
  std::vector<Tally> parts(cases.size());
  parallel_for(cases.size(), exec, [&](std::size_t i) {
    const auto& c = cases[i];
    Tally& t = parts[i];
    auto sys = system_for(c.group);
    auto everything = enumerate_roots(*sys, c.depth);
    for (auto I : subsets_by_size(sys->rank())) {
      std::unordered_set<Vector, VectorHash> supported, orbit;
      for (const auto& r : everything)
        if (r.support().is_subset_of(I)) supported.insert(r.coords);
      for (const auto& r : enumerate_roots(*sys, c.depth, I)) orbit.insert(r.coords);
      t.check(supported == orbit, c.group + " " + sys->format_set(I) + ": supported roots differ from W_I orbit");
      for (const auto& phi : supported) {
        auto d = descend_root(*sys, Root{phi}, I);
        bool in_subset = I.contains(d.target);
        for (Generator s : d.prefix) in_subset = in_subset && I.contains(s);
        t.check(in_subset, c.group + ": descent left the subset");
        t.check(sys->act(sys->normalize(d.prefix), sys->simple_root(d.target)) == phi,
                c.group + ": descent does not round-trip");
      }
    }
  });
  for (const auto& p : parts) tally.merge(p);
}

struct PairData {
  SystemPtr sys;
  std::shared_ptr<FiniteGroupTable> table;
  std::vector<OracleParabolic> parabolics;
};

PairData pair_data(const std::string& g, Execution exec) {
  PairData d;
  d.sys = system_for(g);
  d.table = std::make_shared<FiniteGroupTable>(FiniteGroupTable::enumerate(*d.sys, 10'000));
  d.parabolics = oracle::all_parabolics(*d.table, exec);
  return d;
}

// Runs body(i, j, tally) over unordered pairs i < j of oracle parabolics.
Tally over_pairs(const PairData& d, Execution exec,
                 const std::function<void(std::size_t, std::size_t, Tally&)>& body) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d.parabolics.size(); ++i)
    for (std::size_t j = i + 1; j < d.parabolics.size(); ++j) pairs.emplace_back(i, j);
  std::vector<Tally> parts(pairs.size());
  parallel_for(pairs.size(), exec, [&](std::size_t k) { body(pairs[k].first, pairs[k].second, parts[k]); });
  Tally out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

void intersection(Execution exec, Tally& tally) {
  for (const std::string g : {"A3", "B3"}) {
    auto d = pair_data(g, exec);
    tally.merge(over_pairs(d, exec, [&](std::size_t i, std::size_t j, Tally& t) {
      auto a = to_parabolic(*d.table, d.parabolics[i]);
      auto b = to_parabolic(*d.table, d.parabolics[j]);
      try {
        auto meet = intersect(a, b);
        auto expected = oracle::brute_intersect(d.parabolics[i].elements, d.parabolics[j].elements);
        t.check(element_set(*d.table, meet) == expected, g + ": intersection differs from the oracle");
        t.check(equals(meet, intersect(b, a)), g + ": intersection is not symmetric");
      } catch (const Error& e) {
        t.check(false, g + ": " + e.what());
      }
    }));
  }
}

void conjugacy(Execution exec, Tally& tally) {
  tally.merge(over_groups({"A2", "A1xA1", "B2", "A3"}, exec, [](const std::string& g, Tally& t) {
    auto sys = system_for(g);
    auto table = FiniteGroupTable::enumerate(*sys, 10'000);
    auto subsets = subsets_by_size(sys->rank());
    for (auto I : subsets) {
      auto special = table.special_subgroup(I);
      for (auto J : subsets) {
        auto source = table.special_subgroup(J);
        for (std::size_t w = 0; w < table.size(); ++w) {
          ElementSet conj;
          for (std::size_t u : source) conj.push_back(table.conjugate(w, u));
          std::sort(conj.begin(), conj.end());
          const bool claim = conj == special;
          auto witness = conjugacy_normalize(I, J, sys->normalize(table.word(w)));
          if (claim) {
            t.check(I.size() == J.size(), g + ": conjugate special subgroups of different rank");
            t.check(witness.has_value(), g + ": true conjugacy refuted");
            if (witness) {
              for (auto [src, dst] : witness->mapping)
                t.check(sys->act(witness->w0, sys->simple_root(src)) == sys->simple_root(dst),
                        g + ": witness does not map Delta_J onto Delta_I");
            }
          } else {
            t.check(!witness.has_value(), g + ": witness produced for a false conjugacy");
          }
        }
      }
    }
  }));
}

void rank_drop(Execution exec, Tally& tally) {
  for (const std::string g : {"A3", "B3"}) {
    auto d = pair_data(g, exec);
    tally.merge(over_pairs(d, exec, [&](std::size_t i, std::size_t j, Tally& t) {
      const auto& pi = d.parabolics[i];
      const auto& pj = d.parabolics[j];
      if (oracle::is_subset(pi.elements, pj.elements) || oracle::is_subset(pj.elements, pi.elements)) return;
      auto a = to_parabolic(*d.table, pi);
      auto b = to_parabolic(*d.table, pj);
      t.check(!contains(a, b) && !contains(b, a), g + ": containment disagrees with the oracle");
      auto meet = intersect(a, b);
      t.check(meet.rank() < std::min(a.rank(), b.rank()), g + ": intersection of incomparable parabolics kept its rank");
    }));
  }
}

void closure(Execution exec, Tally& tally) {
  tally.merge(over_groups(kFinite, exec, [](const std::string& g, Tally& t) {
    auto sys = system_for(g);
    auto table = FiniteGroupTable::enumerate(*sys, 10'000);
    auto parabolics = oracle::all_parabolics(table, Execution::Serial);
    for (const auto& p : parabolics) t.check(p.ranks.size() == 1, g + ": parabolic with two ranks");

    std::mt19937_64 rng(0xC0FFEE ^ std::hash<std::string>{}(g));
    std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1), count(1, 3);
    for (int trial = 0; trial < kClosureSamples; ++trial) {
      std::vector<GroupElement> elements;
      ElementSet indices;
      for (std::size_t k = count(rng); k > 0; --k) {
        std::size_t idx = pick(rng);
        indices.push_back(idx);
        elements.push_back(sys->normalize(table.word(idx)));
      }
      auto result = pc(*sys, ClosureQuery{elements, std::nullopt}, Execution::Serial);
      auto brute = oracle::brute_pc(parabolics, indices);
      t.check(brute.unique_minimal_rank && brute.minimal_is_intersection, g + ": minimal-rank parabolic not unique");
      auto expected = pc_oracle_finite(table, parabolics, elements);
      t.check(result.status == ClosureStatus::Exact, g + ": exhaustive closure not marked Exact");
      t.check(equals(result.closure, expected), g + ": pc differs from the oracle");
      t.check(element_set(table, result.closure) == parabolics[brute.index].elements, g + ": pc element set differs");
      t.check(result.refinements.size() <= sys->rank(), g + ": too many refinements");
    }
  }));
}

void infinite_smoke(Execution exec, Tally& tally) {
  auto start = std::chrono::steady_clock::now();
  auto sys = system_for("I2inf");
  auto st = sys->parse_word("s t");
  auto full = Parabolic::make(sys->identity(), sys->all_generators());

  auto r1 = pc(*sys, ClosureQuery{{st}, kSmokeRadius}, exec);
  tally.check(equals(r1.closure, full), "pc({st}) is not the full group");
  tally.check(r1.refinements.size() <= 2, "pc({st}) refined more than twice");
  tally.check(r1.status == ClosureStatus::RadiusLimited, "infinite group reported Exact");
  tally.check(sys->order_of_product(0, 1) == kInfinity, "st has finite order");
  auto ball = element_ball(*sys, 6);
  for (std::size_t r = 0; r <= 1; ++r) {
    auto cands = candidates_of_rank(ball, r, 6);
    for (char hit : scan_candidates(cands, {st}, exec)) tally.check(!hit, "a rank <= 1 parabolic contains st");
  }

  auto s = sys->generator(0);
  auto r2 = pc(*sys, ClosureQuery{{s}, kSmokeRadius}, exec);
  tally.check(equals(r2.closure, Parabolic::make(sys->identity(), GeneratorSet::single(0))), "pc({s}) is not <s>");
  tally.check(r2.closure.representative().is_identity() && r2.closure.subset() == GeneratorSet::single(0),
              "pc({s}) is not stored as (e, {s})");
  tally.check(r2.status == ClosureStatus::RadiusLimited, "infinite group reported Exact");
  tally.check(contains_element(r2.closure, s), "pc({s}) misses s");

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  tally.check(secs < 5.0, "infinite smoke test exceeded 5 s");
}

void tits_partition(Execution exec, Tally& tally) {
  tally.merge(over_groups(kAll, exec, [](const std::string& g, Tally& t) {
    auto sys = system_for(g);
    auto ball = element_ball(*sys, corpus_entry(g).order ? 64 : 6);
    auto subsets = subsets_by_size(sys->rank());
    std::mt19937_64 rng(0x7175 ^ std::hash<std::string>{}(g));
    std::uniform_int_distribution<std::size_t> pick_subset(0, subsets.size() - 1);
    for (int trial = 0; trial < kPartitionSamples; ++trial) {
      GroupElement w = random_element(ball, rng);
      GeneratorSet I = subsets[pick_subset(rng)];
      DualPoint f0 = fundamental_point(*sys, I);
      DualPoint f = sys->act_dual(w, f0);
      auto cell = locate(*sys, f);
      t.check(cell.dominant == f0, g + ": locate found a different dominant point");
      t.check(cell.subset == I, g + ": locate found a different face");
      t.check(sys->act_dual(cell.w, cell.dominant) == f, g + ": w(dominant) != f");
      auto stab = stabilizer(*sys, f);
      t.check(equals(stab, Parabolic::make(w, I)), g + ": stabilizer differs from w W_I w^-1");
      for (const auto& gen : stab.generators()) t.check(fixes(gen, f), g + ": stabilizer generator moves the point");
    }
  }));
}

// Independent floating check of a decided sign; only used when the value is
// far enough from zero for long double to be trustworthy.
bool float_agrees(const FieldScalar& x, int decided) {
  const long double theta =
      2.0L * std::cos(std::numbers::pi_v<long double> / static_cast<long double>(x.context()->conductor()));
  long double acc = 0, scale = 0;
  for (auto it = x.coeffs().rbegin(); it != x.coeffs().rend(); ++it) {
    acc = acc * theta + static_cast<long double>(it->get_d());
    scale = scale * std::fabs(theta) + std::fabs(static_cast<long double>(it->get_d()));
  }
  if (std::fabs(acc) <= kFloatAgreement * (scale + 1)) return true;
  return (acc > 0 ? 1 : -1) == decided;
}

void field_kernel(Execution exec, Tally& tally) {
  const std::vector<unsigned> conductors{1, 2, 3, 4, 5, 6, 12, 15};
  std::vector<Tally> parts(conductors.size());
  parallel_for(conductors.size(), exec, [&](std::size_t i) {
    Tally& t = parts[i];
    FieldContext k(conductors[i]);
    const std::string tag = "L=" + std::to_string(conductors[i]) + ": ";
    t.check(k.reduce(k.minpoly()).is_zero(), tag + "minpoly(theta) does not reduce to zero");
    for (unsigned m = 3; m <= conductors[i]; ++m) {
      if (conductors[i] % m) continue;
      auto x = cos_pi_over(k, static_cast<Label>(m)).scaled(2);
      auto d = chebyshev_double_cosine(m);
      FieldScalar acc = k.zero();
      for (auto it = d.coeffs().rbegin(); it != d.coeffs().rend(); ++it) acc = acc * x + k.from_rational(*it);
      t.check((acc + k.from_rational(2)).is_zero(), tag + "D_m(2cos(pi/m)) + 2 != 0");
    }
    std::mt19937_64 rng(0x5CA1A2 + conductors[i]);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 10);
    auto random_scalar = [&] {
      std::vector<Rational> c(k.degree());
      for (auto& x : c) x = Rational(num(rng), den(rng));
      for (auto& x : c) x.canonicalize();
      return k.from_coefficients(c);
    };
    for (int trial = 0; trial < kFieldSamples; ++trial) {
      auto a = random_scalar(), b = random_scalar(), c = random_scalar();
      t.check((a + b) + c == a + (b + c), tag + "addition not associative");
      t.check((a * b) * c == a * (b * c), tag + "multiplication not associative");
      t.check(a * (b + c) == a * b + a * c, tag + "not distributive");
      t.check(a * b == b * a, tag + "multiplication not commutative");
      t.check((a - a).is_zero() && (a - a) == k.zero(), tag + "a - a is not canonical zero");
      if (!a.is_zero()) t.check(a * a.inverse() == k.one(), tag + "a * a^-1 != 1");
      t.check((a * b).sign() == a.sign() * b.sign(), tag + "sign not multiplicative");
      auto sum = a + b;
      t.check(float_agrees(sum, sum.sign()), tag + "sign(a + b) contradicts interval evaluation");
      t.check(sum.sign() == -(-sum).sign(), tag + "sign not odd");
    }
  });
  for (const auto& p : parts) tally.merge(p);
}

struct SuiteDef {
  std::string name;
  std::string title;
  double time_limit;  // seconds; 0 = none
  void (*run)(Execution, Tally&);
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs{
      {"faithfulness", "distinct normal forms have distinct matrices", 30, faithfulness},
      {"product-orders", "order of st equals m_st", 0, product_orders},
      {"root-dichotomy", "roots are positive or negative", 0, root_dichotomy},
      {"descent-sign", "l(w t_a) > l(w) iff w(a) > 0", 0, descent_sign},
      {"subsystem-roots", "roots supported in I are the W_I orbit", 0, subsystem_roots},
      {"intersection", "parabolic intersection matches brute force", 120, intersection},
      {"conjugacy", "conjugate special subgroups map simple roots", 0, conjugacy},
      {"rank-drop", "incomparable intersections drop rank", 0, rank_drop},
      {"closure", "parabolic closure matches brute force", 0, closure},
      {"infinite-smoke", "closure in the infinite dihedral group", 5, infinite_smoke},
      {"tits-partition", "point location recovers w W_I w^-1", 0, tits_partition},
      {"field-kernel", "exact field arithmetic and sign", 0, field_kernel},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, Execution exec) {
  for (const auto& def : suites()) {
    if (def.name != name) continue;
    SuiteResult r;
    r.name = def.name;
    r.title = def.title;
    Tally tally;
    auto start = std::chrono::steady_clock::now();
    try {
      def.run(exec, tally);
    } catch (const std::exception& e) {
      tally.check(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (def.time_limit > 0 && r.seconds >= def.time_limit) {
      std::ostringstream os;
      os << "runtime " << r.seconds << " s exceeds " << def.time_limit << " s";
      tally.check(false, os.str());
    }
    r.checks = tally.checks;
    r.failures = tally.failures;
    r.passed = tally.failures == 0 && tally.checks > 0;
    r.detail = tally.first_failure;
    return r;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all(Execution exec) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, exec));
  return out;
}

}  // namespace coxeter::verify
