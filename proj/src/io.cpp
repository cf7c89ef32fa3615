#include "lgs/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <tuple>

#include "lgs/errors.hpp"

namespace lgs {

namespace {

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Subshift subshift_from_json(const json& j) {
  if (!j.is_object()) throw InputError("subshift document must be an object");
  if (!j.contains("kind") || !j.contains("alphabet"))
    throw InputError("subshift document needs 'kind' and 'alphabet'");
  Alphabet alphabet(string_list(j.at("alphabet"), "alphabet"));
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "sft") {
    SftMatrix m;
    for (const auto& row : j.at("matrix"))
      m.entries.push_back(row.get<std::vector<int>>());
    return Subshift::from_sft(std::move(alphabet), std::move(m));
  }
  if (kind == "sofic") {
    const json& gj = j.at("graph");
    auto vertices = string_list(gj.at("vertices"), "vertices");
    std::map<std::string, int> vidx;
    for (size_t i = 0; i < vertices.size(); ++i) vidx[vertices[i]] = static_cast<int>(i);
    std::vector<LabeledEdge> edges;
    for (const auto& ej : gj.at("edges")) {
      auto triple = string_list(ej, "edge");
      if (triple.size() != 3) throw InputError("edges must be [source, label, target]");
      auto s = vidx.find(triple[0]);
      auto t = vidx.find(triple[2]);
      auto a = alphabet.index(triple[1]);
      if (s == vidx.end() || t == vidx.end()) throw InputError("edge names an unknown vertex");
      if (!a) throw InputError("edge label not in alphabet: " + triple[1]);
      edges.push_back({s->second, *a, t->second});
    }
    LabeledGraph graph(std::move(vertices), std::move(edges), alphabet.size());
    return Subshift::from_graph(std::move(alphabet), std::move(graph));
  }
  if (kind == "oracle") {
    const json& oj = j.at("oracle");
    Subshift s = builtin_oracle(oj.at("name").get<std::string>(),
                                oj.at("max_reliable_length").get<int>());
    if (s.alphabet().names() != alphabet.names())
      throw InputError("alphabet does not match the named oracle");
    return s;
  }
  throw InputError("unknown subshift kind: " + kind);
}

Subshift load_subshift(const std::string& path) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw InputError("cannot open file: " + path);
      j = json::parse(in);
    }
  } catch (const json::parse_error& e) {
    throw InputError(std::string("json parse error: ") + e.what());
  }
  return subshift_from_json(j);
}

json words_to_json(const Alphabet& a, const std::vector<Word>& words) {
  json out = json::array();
  for (const Word& w : words) out.push_back(a.format(w));
  return out;
}

json sync_verdict_to_json(const Alphabet& a, const SyncVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["witness"] = v.witness ? json(a.format(*v.witness)) : json(nullptr);
  j["depth_used"] = v.depth_used;
  return j;
}

json past_classes_to_json(const Alphabet& a, const std::vector<PastClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) {
    json jc;
    jc["level"] = c.level;
    jc["representative"] = a.format(c.representative);
    jc["members"] = words_to_json(a, c.members);
    jc["signature"] = words_to_json(a, c.predecessor_signature);
    out.push_back(std::move(jc));
  }
  return out;
}

json lgs_to_json(const LambdaGraphSystem& g) {
  json j;
  j["truncation"] = g.truncation_level;
  j["levels"] = json::array();
  for (int l = 0; l <= g.truncation_level; ++l) {
    json level;
    level["l"] = l;
    level["vertices"] = json::array();
    for (const auto& v : g.levels[static_cast<size_t>(l)]) {
      json vj;
      vj["id"] = v.id;
      vj["representative"] = g.alphabet.format(v.payload.representative);
      vj["signature"] = words_to_json(g.alphabet, v.payload.predecessor_signature);
      level["vertices"].push_back(std::move(vj));
    }
    j["levels"].push_back(std::move(level));
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges) {
    json ej;
    ej["l"] = e.level;
    ej["src"] = g.levels[static_cast<size_t>(e.level)][static_cast<size_t>(e.src)].id;
    ej["label"] = g.alphabet.name(e.label);
    ej["dst"] = g.levels[static_cast<size_t>(e.level + 1)][static_cast<size_t>(e.dst)].id;
    j["edges"].push_back(std::move(ej));
  }
  j["iota"] = json::array();
  for (size_t l = 0; l < g.iota.size(); ++l) {
    for (size_t c = 0; c < g.iota[l].size(); ++c) {
      json ij;
      ij["l"] = static_cast<int>(l);
      ij["child"] = g.levels[l + 1][c].id;
      ij["parent"] = g.levels[l][static_cast<size_t>(g.iota[l][c])].id;
      j["iota"].push_back(std::move(ij));
    }
  }
  return j;
}

json matrices_to_json(const TransitionMatrixSystem& t) {
  json j;
  j["A"] = json::array();
  j["I"] = json::array();
  for (size_t l = 0; l < t.A.size(); ++l) {
    const auto& A = t.A[l];
    json aj;
    aj["l"] = static_cast<int>(l);
    aj["shape"] = {static_cast<int>(A.size()), t.alphabet_size,
                   static_cast<int>(A.empty() ? 0 : A.front().front().size())};
    aj["entries"] = A;
    j["A"].push_back(std::move(aj));
    const auto& I = t.I[l];
    json ij;
    ij["l"] = static_cast<int>(l);
    ij["shape"] = {static_cast<int>(I.size()),
                   static_cast<int>(I.empty() ? 0 : I.front().size())};
    ij["entries"] = I;
    j["I"].push_back(std::move(ij));
  }
  return j;
}

json projection_expansion_to_json(const Alphabet& a, const ProjectionExpansion& e) {
  json j;
  j["level"] = e.level;
  j["vertex"] = e.vertex;
  j["factors"] = json::array();
  for (const auto& [mu, positive] : e.factors) {
    json fj;
    fj["word"] = a.format(mu);
    fj["sign"] = positive ? "positive" : "complement";
    j["factors"].push_back(std::move(fj));
  }
  return j;
}

json fischer_to_json(const FischerCover& f) {
  json j;
  j["vertices"] = f.graph.vertex_names();
  j["edges"] = json::array();
  for (const auto& e : f.graph.edges())
    j["edges"].push_back({f.graph.vertex_name(e.src), f.alphabet.name(e.label),
                          f.graph.vertex_name(e.dst)});
  return j;
}

json hat_matrix_to_json(const FischerCover& f, const HatMatrix& m) {
  json j;
  j["alphabet_hat"] = json::array();
  for (const auto& [a, v] : m.symbols)
    j["alphabet_hat"].push_back({f.alphabet.name(a), f.graph.vertex_name(v)});
  j["matrix"] = m.entries;
  return j;
}

json ck_relations_to_json(const FischerCover& f) {
  const auto& alph = f.alphabet;
  auto sym = [&](Symbol a) { return "S_" + alph.name(a); };
  auto proj = [&](int i) { return "E_" + f.graph.vertex_name(i); };
  std::set<std::tuple<int, Symbol, int>> edges;
  for (const auto& e : f.graph.edges()) edges.insert({e.src, e.label, e.dst});

  json j;
  j["generators"]["S"] = json::array();
  for (Symbol a = 0; a < alph.size(); ++a) j["generators"]["S"].push_back(sym(a));
  j["generators"]["E"] = json::array();
  for (int i = 0; i < f.graph.vertex_count(); ++i) j["generators"]["E"].push_back(proj(i));

  json relations = json::array();
  {
    json r;
    r["kind"] = "sum_to_one";
    r["data"]["projections"] = j["generators"]["E"];
    r["data"]["isometries"] = j["generators"]["S"];
    relations.push_back(std::move(r));
  }
  for (Symbol a = 0; a < alph.size(); ++a) {
    for (int i = 0; i < f.graph.vertex_count(); ++i) {
      json r;
      r["kind"] = "commute";
      r["data"]["isometry"] = sym(a);
      r["data"]["projection"] = proj(i);
      relations.push_back(std::move(r));
    }
  }
  for (Symbol a = 0; a < alph.size(); ++a) {
    for (int i = 0; i < f.graph.vertex_count(); ++i) {
      json r;
      r["kind"] = "transition";
      r["data"]["left"] = sym(a) + "* " + proj(i) + " " + sym(a);
      json terms = json::array();
      for (int k = 0; k < f.graph.vertex_count(); ++k)
        if (edges.count({i, a, k})) terms.push_back(proj(k));
      r["data"]["right_sum"] = std::move(terms);
      relations.push_back(std::move(r));
    }
  }
  auto hat = hat_alphabet(f);
  auto hat_name = [&](const HatSymbol& h) {
    return "S_(" + alph.name(h.first) + "," + f.graph.vertex_name(h.second) + ")";
  };
  for (const auto& h : hat) {
    json r;
    r["kind"] = "hat_dictionary";
    r["data"]["hat"] = hat_name(h);
    r["data"]["product"] = sym(h.first) + " " + proj(h.second);
    relations.push_back(std::move(r));
  }
  for (int i = 0; i < f.graph.vertex_count(); ++i) {
    json r;
    r["kind"] = "hat_expansion";
    r["data"]["projection"] = proj(i);
    json terms = json::array();
    for (const auto& h : hat)
      if (edges.count({i, h.first, h.second}))
        terms.push_back(hat_name(h) + " " + hat_name(h) + "*");
    r["data"]["right_sum"] = std::move(terms);
    relations.push_back(std::move(r));
  }
  j["relations"] = std::move(relations);
  return j;
}

json check_results_to_json(const std::vector<CheckResult>& results) {
  json out = json::array();
  for (const auto& r : results) {
    json j;
    j["sample"] = r.sample;
    j["check"] = r.check;
    j["pass"] = r.pass;
    j["witness"] = r.witness;
    out.push_back(std::move(j));
  }
  return out;
}

namespace {
std::string to_string(ForcingStatus s) {
  switch (s) {
    case ForcingStatus::Forced: return "conjugacy-forced";
    case ForcingStatus::NotForced: return "not-forced";
    default: return "inconclusive";
  }
}
}  // namespace

json forcing_report_to_json(const ForcingReport& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["samples"] = json::array();
  for (const auto& s : r.samples) {
    json sj;
    sj["sample"] = s.sample;
    sj["status"] = to_string(s.status);
    sj["detail"] = s.detail;
    j["samples"].push_back(std::move(sj));
  }
  return j;
}

SlidingBlockCode code_from_json(const Alphabet& a1, const Alphabet& a2, const json& j) {
  SlidingBlockCode h;
  h.anticipation = j.at("anticipation").get<int>();
  if (h.anticipation < 0) throw InputError("anticipation must be nonnegative");
  for (const auto& [key, value] : j.at("map").items()) {
    Word w = a1.parse(key);
    if (static_cast<int>(w.size()) != h.anticipation + 1)
      throw InputError("block map key has wrong length: " + key);
    auto s = a2.index(value.get<std::string>());
    if (!s) throw InputError("block map value not in target alphabet");
    h.block_map[std::move(w)] = *s;
  }
  return h;
}

json code_to_json(const Alphabet& a1, const Alphabet& a2, const SlidingBlockCode& h) {
  json j;
  j["anticipation"] = h.anticipation;
  j["map"] = json::object();
  for (const auto& [w, s] : h.block_map) j["map"][a1.format(w)] = a2.name(s);
  return j;
}

CylinderPotential potential_from_json(const Alphabet& a, const json& j) {
  CylinderPotential f;
  f.depth = j.at("depth").get<int>();
  if (f.depth < 1) throw InputError("potential depth must be positive");
  for (const auto& [key, value] : j.at("table").items()) {
    Word w = a.parse(key);
    if (static_cast<int>(w.size()) != f.depth)
      throw InputError("potential table key has wrong length: " + key);
    f.table[std::move(w)] = value.get<long long>();
  }
  return f;
}

json potential_to_json(const Alphabet& a, const CylinderPotential& f) {
  json j;
  j["depth"] = f.depth;
  j["table"] = json::object();
  for (const auto& [w, v] : f.table) j["table"][a.format(w)] = v;
  return j;
}

CoeData coe_from_json(const Alphabet& a1, const Alphabet& a2, const json& j) {
  CoeData d;
  d.h = PointTransform::from_code(code_from_json(a1, a2, j.at("h")));
  d.k1 = potential_from_json(a1, j.at("k1"));
  d.l1 = potential_from_json(a1, j.at("l1"));
  if (j.contains("h_inv")) {
    d.h_inv = PointTransform::from_code(code_from_json(a2, a1, j.at("h_inv")));
    d.k2 = potential_from_json(a2, j.at("k2"));
    d.l2 = potential_from_json(a2, j.at("l2"));
  }
  return d;
}

std::vector<std::string> example_names() {
  return {"golden", "even", "full2", "dyck2", "beta-golden"};
}

json example_subshift(const std::string& name) {
  json j;
  if (name == "golden") {
    j["kind"] = "sft";
    j["alphabet"] = {"1", "2"};
    j["matrix"] = {{1, 1}, {1, 0}};
  } else if (name == "even") {
    j["kind"] = "sofic";
    j["alphabet"] = {"0", "1"};
    j["graph"]["vertices"] = {"A", "B"};
    j["graph"]["edges"] = {{"A", "0", "A"}, {"A", "1", "B"}, {"B", "1", "A"}};
  } else if (name == "full2") {
    j["kind"] = "sft";
    j["alphabet"] = {"0", "1"};
    j["matrix"] = {{1, 1}, {1, 1}};
  } else if (name == "dyck2") {
    j["kind"] = "oracle";
    j["alphabet"] = {"a1", "a2", "b1", "b2"};
    j["oracle"]["name"] = "dyck2";
    j["oracle"]["max_reliable_length"] = 10;
  } else if (name == "beta-golden") {
    j["kind"] = "oracle";
    j["alphabet"] = {"0", "1"};
    j["oracle"]["name"] = "beta-golden";
    j["oracle"]["max_reliable_length"] = 14;
  } else {
    throw InputError("unknown example: " + name);
  }
  return j;
}

}  // namespace lgs
