#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "lgs/io.hpp"
#include "lgs/orbit.hpp"
#include "lgs/sofic.hpp"
#include "lgs/subshift.hpp"
#include "lgs/word.hpp"

using namespace lgs;

namespace {

Subshift example(const std::string& name) { return subshift_from_json(example_subshift(name)); }

bool same_language(const Subshift& a, const Subshift& b, int depth) {
  for (int k = 1; k <= depth; ++k)
    if (admissible_words(a, k) != admissible_words(b, k)) return false;
  return true;
}

bool deterministic(const LabeledGraph& g) {
  std::set<std::pair<int, Symbol>> seen;
  for (const auto& e : g.edges())
    if (!seen.insert({e.src, e.label}).second) return false;
  return true;
}

}  // namespace

TEST_CASE("even shift cover") {
  auto s = example("even");
  auto f = fischer_cover(s);
  CHECK(f.graph.vertex_count() == 2);
  CHECK(deterministic(f.graph));
  CHECK(f.graph.vertex_names() == std::vector<std::string>{"v0", "v1"});
  CHECK(same_language(s, Subshift::from_graph(f.alphabet, f.graph), 8));
}

TEST_CASE("golden mean cover is its own presentation") {
  auto s = example("golden");
  auto f = fischer_cover(s);
  CHECK(f.graph.vertex_count() == 2);
  CHECK(f.graph.edges().size() == 3);
  CHECK(same_language(s, Subshift::from_graph(f.alphabet, f.graph), 8));
}

TEST_CASE("full shift cover has one vertex") {
  auto f = fischer_cover(example("full2"));
  CHECK(f.graph.vertex_count() == 1);
  CHECK(f.graph.edges().size() == 2);
}

TEST_CASE("cover construction is idempotent") {
  for (const auto& name : {std::string("even"), std::string("golden"), std::string("full2")}) {
    auto f = fischer_cover(example(name));
    auto again = fischer_cover(Subshift::from_graph(f.alphabet, f.graph));
    CHECK(fischer_to_json(f) == fischer_to_json(again));
  }
}

TEST_CASE("minimization merges duplicated states") {
  // two interchangeable copies of the even-shift 'zero' state
  Alphabet a({"0", "1"});
  LabeledGraph g({"A", "A2", "B"},
                 {{0, 0, 1}, {0, 1, 2}, {1, 0, 0}, {1, 1, 2}, {2, 1, 0}}, 2);
  auto m = minimize_deterministic(g);
  CHECK(m.vertex_count() == 2);
  CHECK(same_language(Subshift::from_graph(a, g), Subshift::from_graph(a, m), 8));
}

TEST_CASE("hat alphabet and matrix, even shift") {
  auto f = fischer_cover(example("even"));
  auto hats = hat_alphabet(f);
  REQUIRE(hats.size() == 3);
  auto m = hat_matrix(f);
  CHECK(m.symbols == hats);
  CHECK(m.entries == std::vector<std::vector<int>>{{1, 0, 1}, {1, 0, 1}, {0, 1, 0}});
  // collapse: row of (alpha, i) depends only on i
  for (size_t p = 0; p < hats.size(); ++p)
    for (size_t q = 0; q < hats.size(); ++q)
      if (hats[p].second == hats[q].second) CHECK(m.entries[p] == m.entries[q]);
}

TEST_CASE("hat matrix of a 1-step SFT is the matrix itself") {
  auto s = example("golden");
  auto f = fischer_cover(s);
  auto m = hat_matrix(f);
  REQUIRE(m.symbols.size() == 2);
  CHECK(m.entries == std::vector<std::vector<int>>{{1, 1}, {1, 0}});
}

TEST_CASE("hat subshift is an irreducible edge shift") {
  for (const auto& name : {std::string("even"), std::string("golden")}) {
    auto f = fischer_cover(example(name));
    auto hat = hat_subshift(f);
    CHECK(hat.kind() == PresentationKind::Sft);
    CHECK(is_irreducible(hat, 8) == Verdict::Proven);
    CHECK(hat.alphabet().size() == static_cast<int>(hat_alphabet(f).size()));
  }
}

TEST_CASE("factor map drops the vertex coordinate") {
  auto s = example("even");
  auto f = fischer_cover(s);
  auto hat = hat_subshift(f);
  const auto& ha = hat.alphabet();

  // constant 0 cycle downstairs
  auto x0 = factor_map_apply(f, make_point({}, ha.parse("0@v0")));
  CHECK(format_point(s.alphabet(), x0) == "(0)*");

  // alternating hat cycle covering the all-ones point
  Word c = ha.parse("1@v1.1@v0");
  REQUIRE(point_admissible(hat, make_point({}, c)));
  auto x1 = factor_map_apply(f, make_point({}, c));
  CHECK(format_point(s.alphabet(), x1) == "(1)*");

  // inadmissible upstairs input is rejected
  CHECK_THROWS_AS(factor_map_apply(f, make_point({}, ha.parse("1@v0.1@v0"))), Error);
}

TEST_CASE("factor map on the golden mean") {
  auto s = example("golden");
  auto f = fischer_cover(s);
  auto hat = hat_subshift(f);
  for (const auto& xhat : random_points(hat, 25, 7, 4)) {
    auto x = factor_map_apply(f, xhat);
    CHECK(point_admissible(s, x));
    // intertwines the shifts
    CHECK(factor_map_apply(f, shift_point(xhat)) == shift_point(x));
  }
}

TEST_CASE("nondeterministic input is rejected") {
  LabeledGraph g({"A", "B"}, {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 1}, {1, 1, 0}}, 2);
  CHECK_THROWS_AS(minimize_deterministic(g), InputError);
  FischerCover fake{Alphabet({"0", "1"}), g, {}};
  CHECK_THROWS_AS(hat_matrix(fake), EntryOverflow);
}

TEST_CASE("degenerate inputs") {
  SftMatrix perm{{{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(fischer_cover(Subshift::from_sft(Alphabet({"a", "b"}), perm)), TrivialShift);
  SftMatrix diag{{{1, 0}, {0, 1}}};
  CHECK_THROWS_AS(fischer_cover(Subshift::from_sft(Alphabet({"a", "b"}), diag)), NotIrreducible);
  CHECK_THROWS_AS(fischer_cover(example("dyck2")), UnsupportedPresentation);
}
