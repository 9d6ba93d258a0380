// Command-line front end for the Coxeter group library.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxeter/closure.hpp"
#include "coxeter/corpus.hpp"
#include "coxeter/error.hpp"
#include "coxeter/oracle.hpp"
#include "coxeter/roots.hpp"
#include "coxeter/verify.hpp"

using namespace coxeter;
using nlohmann::json;

namespace {

struct Output {
  bool as_json = false;
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<std::string> lines;

  void line(std::string text) { lines.push_back(std::move(text)); }

  void emit(const std::string& status) const {
    if (as_json) {
      std::cout << json{{"command", command}, {"inputs", inputs}, {"result", result}, {"status", status}}.dump(2)
                << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
    }
  }
};

// A path, or the name of a built-in corpus group.
CoxeterMatrix load_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) return load_group_file(spec);
  for (const auto& entry : corpus())
    if (entry.name == spec) return entry.matrix;
  throw Error(ErrorKind::ParseError, "no group file or built-in group named `" + spec + "`");
}

std::vector<std::string> split_tokens(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::string tok;
    for (char c : a + " ") {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        if (!tok.empty()) out.push_back(std::move(tok));
        tok.clear();
      } else if (c != '(' && c != ')') {
        tok.push_back(c);
      }
    }
  }
  return out;
}

Vector parse_coordinates(const CoxeterSystem& sys, const std::vector<std::string>& args) {
  auto tokens = split_tokens(args);
  if (tokens.size() != sys.rank())
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(sys.rank()) + " coordinates, got " + std::to_string(tokens.size()));
  Vector v;
  for (const auto& t : tokens) v.push_back(parse_scalar(sys.field(), t));
  return v;
}

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json parabolic_json(const CoxeterSystem& sys, const Parabolic& p) {
  return {{"representative", sys.format(p.representative())},
          {"generators", sys.format_set(p.subset())},
          {"rank", p.rank()}};
}

void print_parabolic(Output& out, const CoxeterSystem& sys, const Parabolic& p) {
  out.line("representative: " + sys.format(p.representative()));
  out.line("generators: " + sys.format_set(p.subset()));
  out.line("rank: " + std::to_string(p.rank()));
}

int run_verify(Output& out, const std::optional<std::string>& suite, bool serial) {
  const Execution exec = serial ? Execution::Serial : Execution::Parallel;
  std::vector<verify::SuiteResult> results;
  if (suite)
    results.push_back(verify::run_suite(*suite, exec));
  else
    results = verify::run_all(exec);
  bool all = true;
  json list = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    std::ostringstream l;
    l << (r.passed ? "PASS " : "FAIL ") << r.name << " checks=" << r.checks << " failures=" << r.failures;
    out.line(l.str());
    if (!r.passed) out.line("  " + r.detail);
    list.push_back({{"name", r.name},
                    {"title", r.title},
                    {"passed", r.passed},
                    {"checks", r.checks},
                    {"failures", r.failures},
                    {"detail", r.detail}});
  }
  out.result = {{"suites", list}, {"passed", all}};
  return all ? 0 : 1;
}

int run_oracle_compare(Output& out, const CoxeterSystem& sys) {
  auto table = oracle::FiniteGroupTable::enumerate(sys, 100000);
  auto parabolics = oracle::all_parabolics(table);
  auto to_set = [&](const Parabolic& p) {
    oracle::ElementSet set;
    const std::size_t w = *table.find(p.representative().matrix());
    for (std::size_t u : table.special_subgroup(p.subset())) set.push_back(table.conjugate(w, u));
    std::sort(set.begin(), set.end());
    return set;
  };
  std::vector<Parabolic> listed;
  for (const auto& p : parabolics) listed.push_back(Parabolic::make(sys.normalize(table.word(p.representative)), p.subset));

  std::size_t intersections = 0, intersection_mismatches = 0;
  for (std::size_t i = 0; i < listed.size(); ++i)
    for (std::size_t j = i; j < listed.size(); ++j) {
      ++intersections;
      auto meet = intersect(listed[i], listed[j]);
      if (to_set(meet) != oracle::brute_intersect(parabolics[i].elements, parabolics[j].elements))
        ++intersection_mismatches;
    }

  std::size_t closures = 0, closure_mismatches = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::vector<GroupElement> a{sys.normalize(table.word(i))};
    ++closures;
    auto fast = pc(sys, ClosureQuery{a, std::nullopt});
    if (!equals(fast.closure, pc_oracle_finite(table, parabolics, a))) ++closure_mismatches;
  }

  out.line("elements: " + std::to_string(table.size()));
  out.line("parabolic subgroups: " + std::to_string(parabolics.size()));
  out.line("intersections: " + std::to_string(intersections) + " compared, " +
           std::to_string(intersection_mismatches) + " mismatches");
  out.line("closures: " + std::to_string(closures) + " compared, " + std::to_string(closure_mismatches) +
           " mismatches");
  out.result = {{"elements", table.size()},
                {"parabolics", parabolics.size()},
                {"intersections", intersections},
                {"intersection_mismatches", intersection_mismatches},
                {"closures", closures},
                {"closure_mismatches", closure_mismatches}};
  return intersection_mismatches == 0 && closure_mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with parabolic subgroups of Coxeter groups"};
  app.require_subcommand(1);
  Output out;
  std::string group_spec;
  app.add_flag("--json", out.as_json, "Print a JSON object instead of text");
  app.add_option("-g,--group", group_spec, "Group file, or a built-in name such as A2 or H3");

  std::string word_a, word_b, set_a, set_b;
  std::vector<std::string> coords, words;
  std::size_t depth = 2;
  std::optional<std::size_t> radius;
  std::optional<std::string> suite;
  bool serial = false;

  auto* validate = app.add_subcommand("validate", "Check a group file and describe the group");
  auto* normalize = app.add_subcommand("normalize", "ShortLex normal form of a word");
  normalize->add_option("word", word_a)->required();
  auto* mult = app.add_subcommand("mult", "Product of two words");
  mult->add_option("w1", word_a)->required();
  mult->add_option("w2", word_b)->required();
  auto* length = app.add_subcommand("length", "Length of a word");
  length->add_option("word", word_a)->required();
  auto* roots = app.add_subcommand("roots", "Positive roots within a breadth-first depth");
  roots->add_option("--depth", depth, "Number of simple reflections applied");
  auto* reflect = app.add_subcommand("reflect", "Reflection attached to a positive root");
  reflect->add_option("coords", coords, "Root coordinates in the simple-root basis")->required();
  auto* locate_cmd = app.add_subcommand("locate", "Cell of the Tits cone holding a point");
  locate_cmd->add_option("coords", coords, "Pairings of the point with the simple roots")->required();
  auto* intersect_cmd = app.add_subcommand("intersect", "Intersection of w1 W_I1 w1^-1 and w2 W_I2 w2^-1");
  intersect_cmd->add_option("w1", word_a)->required();
  intersect_cmd->add_option("I1", set_a)->required();
  intersect_cmd->add_option("w2", word_b)->required();
  intersect_cmd->add_option("I2", set_b)->required();
  auto* pc_cmd = app.add_subcommand("pc", "Parabolic closure of a set of elements");
  pc_cmd->add_option("words", words)->required();
  pc_cmd->add_option("--radius", radius, "Bound on candidate representatives; omit for exhaustive search");
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites over the built-in groups");
  verify_cmd->add_option("--suite", suite, "Run a single suite");
  verify_cmd->add_flag("--serial", serial, "Use the serial reference kernels");
  auto* compare = app.add_subcommand("oracle-compare", "Cross-check intersections and closures by brute force");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  out.command = sub->get_name();
  int code = 0;
  try {
    if (sub == verify_cmd) {
      if (suite) out.inputs["suite"] = *suite;
      out.inputs["serial"] = serial;
      code = run_verify(out, suite, serial);
      out.emit(code == 0 ? "ok" : "failed");
      return code;
    }

    if (group_spec.empty()) {
      std::cerr << "error: --group is required for `" << out.command << "`\n";
      return 2;
    }
    out.inputs["group"] = group_spec;
    auto sys = CoxeterSystem::build(load_group(group_spec));

    if (sub == validate) {
      const bool finite = form_is_positive_definite(*sys);
      out.result = {{"rank", sys->rank()},
                    {"labels", sys->coxeter_matrix().labels()},
                    {"conductor", sys->field().conductor()},
                    {"field_degree", sys->field().degree()},
                    {"finite", finite}};
      out.line("rank: " + std::to_string(sys->rank()));
      out.line("field: Q(2cos(pi/" + std::to_string(sys->field().conductor()) + ")), degree " +
               std::to_string(sys->field().degree()));
      if (finite) {
        auto fin = is_finite(*sys, 10'000'000);
        out.result["order"] = fin.order;
        out.result["longest_length"] = fin.longest;
        out.line("finite: order " + std::to_string(fin.order) + ", longest element length " +
                 std::to_string(fin.longest));
      } else {
        out.line("infinite");
      }
    } else if (sub == normalize) {
      out.inputs["word"] = word_a;
      auto w = sys->parse_word(word_a);
      out.result = {{"word", sys->format(w)}, {"length", w.length()}};
      out.line(sys->format(w));
    } else if (sub == mult) {
      out.inputs["w1"] = word_a;
      out.inputs["w2"] = word_b;
      auto w = sys->mult(sys->parse_word(word_a), sys->parse_word(word_b));
      out.result = {{"word", sys->format(w)}, {"length", w.length()}};
      out.line(sys->format(w));
    } else if (sub == length) {
      out.inputs["word"] = word_a;
      auto w = sys->parse_word(word_a);
      out.result = {{"length", w.length()}};
      out.line(std::to_string(w.length()));
    } else if (sub == roots) {
      out.inputs["depth"] = depth;
      auto list = enumerate_roots(*sys, depth);
      json arr = json::array();
      for (const auto& r : list) {
        arr.push_back(vector_json(r.coords));
        out.line(format_vector(r.coords));
      }
      out.result = {{"count", list.size()}, {"roots", arr}};
    } else if (sub == reflect) {
      out.inputs["coords"] = coords;
      auto r = reflection_of_root(*sys, checked_root(parse_coordinates(*sys, coords)));
      out.result = {{"reflection", sys->format(r.element)},
                    {"length", r.element.length()},
                    {"root", vector_json(r.root.coords)}};
      out.line(sys->format(r.element));
    } else if (sub == locate_cmd) {
      out.inputs["coords"] = coords;
      auto at = locate(*sys, parse_coordinates(*sys, coords));
      out.result = {{"w", sys->format(at.w)},
                    {"subset", sys->format_set(at.subset)},
                    {"dominant", vector_json(at.dominant)}};
      out.line("w: " + sys->format(at.w));
      out.line("subset: " + sys->format_set(at.subset));
      out.line("dominant: " + format_vector(at.dominant));
    } else if (sub == intersect_cmd) {
      out.inputs = {{"group", group_spec}, {"w1", word_a}, {"I1", set_a}, {"w2", word_b}, {"I2", set_b}};
      auto p = Parabolic::make(sys->parse_word(word_a), sys->parse_set(set_a));
      auto q = Parabolic::make(sys->parse_word(word_b), sys->parse_set(set_b));
      auto meet = intersect(p, q);
      out.result = parabolic_json(*sys, meet);
      print_parabolic(out, *sys, meet);
    } else if (sub == pc_cmd) {
      out.inputs["words"] = words;
      if (radius) out.inputs["radius"] = *radius;
      ClosureQuery query;
      for (const auto& w : words) query.elements.push_back(sys->parse_word(w));
      query.radius = radius;
      auto r = pc(*sys, query);
      out.result = parabolic_json(*sys, r.closure);
      out.result["status"] = std::string(name(r.status));
      print_parabolic(out, *sys, r.closure);
      out.line("status: " + std::string(name(r.status)));
    } else if (sub == compare) {
      code = run_oracle_compare(out, *sys);
      out.emit(code == 0 ? "ok" : "failed");
      return code;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (out.as_json) {
      out.result = {{"error", std::string(coxeter::name(e.kind()))}, {"message", e.what()}};
      out.emit("error");
    }
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  out.emit("ok");
  return code;
}
