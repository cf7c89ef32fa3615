#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "lgs/io.hpp"
#include "lgs/lgs.hpp"
#include "lgs/orbit.hpp"
#include "lgs/sofic.hpp"
#include "lgs/subshift.hpp"
#include "lgs/sync.hpp"

#include "run_tool.h"

using namespace lgs;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/lgs_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string example_file(const std::string& name) {
  return write_temp(name + ".json", example_subshift(name).dump());
}

std::string gm2_file(const std::string& name) {
  return write_temp(name, json{{"kind", "sft"},
                               {"alphabet", {"11", "12", "21"}},
                               {"matrix", {{1, 1, 0}, {0, 0, 1}, {1, 1, 0}}}}
                              .dump());
}

}  // namespace

TEST_CASE("subshift json roundtrips") {
  for (const auto& name : example_names()) {
    auto doc = example_subshift(name);
    auto s = subshift_from_json(doc);
    CHECK(s.alphabet().size() >= 2);
    auto again = subshift_from_json(doc);
    for (int k = 1; k <= 4; ++k) CHECK(admissible_words(s, k) == admissible_words(again, k));
  }
  CHECK_THROWS_AS(subshift_from_json(json{{"kind", "nope"}}), InputError);
  CHECK_THROWS_AS(
      subshift_from_json(json{{"kind", "sft"},
                              {"alphabet", {"a", "b"}},
                              {"matrix", {{0, 0}, {0, 1}}}}),
      InputError);  // stranded symbol
}

TEST_CASE("potential and code json roundtrips") {
  auto s = subshift_from_json(example_subshift("golden"));
  const auto& a = s.alphabet();
  CylinderPotential f{2, {{a.parse("11"), 3}, {a.parse("12"), -1}, {a.parse("21"), 0}}};
  auto f2 = potential_from_json(a, potential_to_json(a, f));
  CHECK(f2.depth == f.depth);
  CHECK(f2.table == f.table);

  SlidingBlockCode h{1, {{a.parse("11"), 0}, {a.parse("12"), 1}, {a.parse("21"), 0}}};
  auto h2 = code_from_json(a, a, code_to_json(a, a, h));
  CHECK(h2.anticipation == h.anticipation);
  CHECK(h2.block_map == h.block_map);
}

TEST_CASE("verdict serialization carries the witness") {
  auto s = subshift_from_json(example_subshift("even"));
  auto v = is_l_synchronizing(s, s.alphabet().parse("1"), 1, 16);
  auto j = sync_verdict_to_json(s.alphabet(), v);
  CHECK(j["status"] == "refuted");
  CHECK(j["witness"] == "0");
}

TEST_CASE("lgs serialization shape") {
  auto s = subshift_from_json(example_subshift("even"));
  auto g = build_minimal_lgs(s, 3, 8);
  auto j = lgs_to_json(g);
  CHECK(j["truncation"] == 3);
  CHECK(j["levels"].size() == 4);
  CHECK(j["levels"][1]["vertices"].size() == 2);
  for (const auto& e : j["edges"]) {
    CHECK(e.contains("src"));
    CHECK(e.contains("label"));
    CHECK(e.contains("dst"));
  }
  auto t = transition_matrices(g);
  auto mj = matrices_to_json(t);
  CHECK(mj["A"].size() == t.A.size());
  CHECK(mj["I"].size() == t.I.size());
}

TEST_CASE("ck relations serialization") {
  auto f = fischer_cover(subshift_from_json(example_subshift("even")));
  auto j = ck_relations_to_json(f);
  CHECK(j["generators"]["S"].size() == 2);  // one isometry per letter
  CHECK(j["generators"]["E"].size() == 2);  // one projection per vertex
  std::set<std::string> kinds;
  for (const auto& r : j["relations"]) kinds.insert(r["kind"].get<std::string>());
  CHECK(kinds == std::set<std::string>{"commute", "hat_dictionary", "hat_expansion",
                                       "sum_to_one", "transition"});
}

TEST_CASE("cli: words and exit codes") {
  auto even = example_file("even");
  auto r = run_tool("words " + even + " --k 3");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output).size() == 7);

  CHECK(run_tool("words /nonexistent.json --k 3").exit_code == 4);
  CHECK(run_tool("words --k 3").exit_code == 3);  // missing file argument
  CHECK(run_tool("definitely-not-a-command").exit_code == 3);
}

TEST_CASE("cli: sync verdicts map to exit codes") {
  auto even = example_file("even");
  CHECK(run_tool("sync " + even + " --word 0 --l 2").exit_code == 0);
  auto r = run_tool("sync " + even + " --word 1 --l 1");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.output)["witness"] == "0");
  auto beta = example_file("beta-golden");
  CHECK(run_tool("sync " + beta + " --word 1 --l 1 --depth 4").exit_code == 2);
  CHECK(run_tool("sync " + even + " --lambda").exit_code == 0);
  r = run_tool("sync " + even + " --l 1 --max-len 2");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["proven"] == json::array({"0", "00", "01", "10"}));
}

TEST_CASE("cli: gamma, classes, lgs") {
  auto even = example_file("even");
  auto r = run_tool("gamma " + even + " --word 10 --l 1 --side pre");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output) == json::array({"1"}));
  r = run_tool("gamma " + even + " --word 01 --l 1 --side post");
  CHECK(json::parse(r.output) == json::array({"1"}));

  r = run_tool("classes " + even + " --l 1 --max-len 0");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output).size() == 2);

  r = run_tool("lgs " + even + " --level 4");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.output);
  CHECK(j["predicates"]["left_resolving"] == true);
  CHECK(j["predicates"]["compatibility"] == true);
  CHECK(j["predicates"]["condition_I"] == "proven");
  CHECK(j["system"]["levels"][2]["vertices"].size() == 2);
}

TEST_CASE("cli: fischer, ahat, relations") {
  auto even = example_file("even");
  auto r = run_tool("fischer " + even);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["vertices"] == json::array({"v0", "v1"}));

  r = run_tool("ahat " + even);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["matrix"] ==
        json::array({{1, 0, 1}, {1, 0, 1}, {0, 1, 0}}));

  r = run_tool("relations " + even);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output).contains("relations"));

  auto dyck = example_file("dyck2");
  CHECK(run_tool("fischer " + dyck).exit_code == 4);
}

TEST_CASE("cli: cocycle sums and groupoid values") {
  auto golden = example_file("golden");
  auto f = write_temp("pot.json",
                      json{{"depth", 1}, {"table", {{"1", 1}, {"2", 1}}}}.dump());
  auto r = run_tool("cocycle " + golden + " --potential " + f + " --point '1(12)*' --n 5");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["value"] == 5);

  r = run_tool("cocycle " + golden + " --potential " + f +
               " --point '11(12)*' --z '(12)*' --p 2 --q 0");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["value"] == 2);

  CHECK(run_tool("cocycle " + golden + " --potential " + f + " --point '(2)*' --n 3")
            .exit_code == 4);  // inadmissible point
}

TEST_CASE("cli: orbit equivalence commands") {
  auto golden = example_file("golden");
  auto gm2 = gm2_file("gm2.json");
  json coe = {
      {"h", {{"anticipation", 1}, {"map", {{"11", "11"}, {"12", "12"}, {"21", "21"}}}}},
      {"h_inv", {{"anticipation", 0}, {"map", {{"11", "1"}, {"12", "1"}, {"21", "2"}}}}},
      {"k1", {{"depth", 1}, {"table", {{"1", 0}, {"2", 0}}}}},
      {"l1", {{"depth", 1}, {"table", {{"1", 1}, {"2", 1}}}}},
      {"k2", {{"depth", 1}, {"table", {{"11", 0}, {"12", 0}, {"21", 0}}}}},
      {"l2", {{"depth", 1}, {"table", {{"11", 1}, {"12", 1}, {"21", 1}}}}}};
  auto coef = write_temp("coe.json", coe.dump());
  auto fpot = write_temp("f2.json",
                         json{{"depth", 1}, {"table", {{"11", 3}, {"12", 1}, {"21", 2}}}}.dump());

  CHECK(run_tool("verify-coe " + golden + " " + gm2 + " --coe " + coef).exit_code == 0);
  auto r = run_tool("psi " + golden + " " + gm2 + " --coe " + coef + " --potential " + fpot);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["depth"] == 4);
  r = run_tool("force " + golden + " " + gm2 + " --coe " + coef);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["verdict"] == "conjugacy-forced");
  CHECK(run_tool("verify-eventual " + golden + " " + gm2 + " --coe " + coef + " --K 0")
            .exit_code == 0);

  r = run_tool("find-conj " + golden + " " + gm2 + " --max-anticipation 2");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["found"] == true);
  auto full = example_file("full2");
  r = run_tool("find-conj " + golden + " " + full + " --max-anticipation 2");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.output).contains("word_counts"));
}

TEST_CASE("cli: examples and stdin") {
  auto r = run_tool("examples --name golden");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["kind"] == "sft");

  r = run_tool("examples --dir /tmp");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output).size() == 5);

  // "-" reads the shift document from stdin
  auto piped = run_tool("examples --name golden | " LGSTOOL_PATH " words - --k 2");
  CHECK(piped.exit_code == 0);
  CHECK(json::parse(piped.output).size() == 3);
}

TEST_CASE("cli: text format renders") {
  auto even = example_file("even");
  auto r = run_tool("--format text words " + even + " --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("00") != std::string::npos);
}

TEST_CASE("cli: output file") {
  auto even = example_file("even");
  std::string out = "/tmp/lgs_test_out.json";
  std::remove(out.c_str());
  auto r = run_tool("-o " + out + " words " + even + " --k 2");
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  json j;
  in >> j;
  CHECK(j.size() == 4);
}
