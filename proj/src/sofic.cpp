#include "lgs/sofic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lgs/errors.hpp"

namespace lgs {

namespace {

bool is_deterministic(const LabeledGraph& g) {
  std::set<std::pair<int, Symbol>> seen;
  for (const auto& e : g.edges())
    if (!seen.insert({e.src, e.label}).second) return false;
  return true;
}

// Words of length <= depth readable from each vertex; distinguishes the
// states of a follower-separated deterministic graph.
std::vector<std::vector<Word>> follower_signatures(const LabeledGraph& g, int depth) {
  GraphAutomaton aut(g);
  std::vector<std::vector<Word>> sig(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<GraphAutomaton::Mask, Word>> layer{
        {GraphAutomaton::Mask{1} << v, Word{}}};
    for (int t = 1; t <= depth; ++t) {
      std::vector<std::pair<GraphAutomaton::Mask, Word>> next;
      for (const auto& [m, w] : layer) {
        for (Symbol a = 0; a < g.alphabet_size(); ++a) {
          GraphAutomaton::Mask nm = aut.post(m, a);
          if (nm == 0) continue;
          Word nw = w;
          nw.push_back(a);
          sig[static_cast<size_t>(v)].push_back(nw);
          next.push_back({nm, std::move(nw)});
        }
      }
      layer = std::move(next);
    }
    std::sort(sig[static_cast<size_t>(v)].begin(), sig[static_cast<size_t>(v)].end());
  }
  return sig;
}

LabeledGraph rename_vertices(const LabeledGraph& g, const std::vector<int>& order) {
  // order[k] = old index of the vertex that becomes vk.
  std::vector<int> newpos(order.size());
  for (size_t k = 0; k < order.size(); ++k) newpos[static_cast<size_t>(order[k])] = static_cast<int>(k);
  std::vector<std::string> names;
  for (size_t k = 0; k < order.size(); ++k) names.push_back("v" + std::to_string(k));
  std::vector<LabeledEdge> edges;
  for (const auto& e : g.edges())
    edges.push_back({newpos[static_cast<size_t>(e.src)], e.label,
                     newpos[static_cast<size_t>(e.dst)]});
  return LabeledGraph(std::move(names), std::move(edges), g.alphabet_size());
}

bool languages_agree(const Subshift& a, const Subshift& b, int depth) {
  for (int k = 1; k <= depth; ++k)
    if (admissible_words(a, k) != admissible_words(b, k)) return false;
  return true;
}

}  // namespace

LabeledGraph minimize_deterministic(const LabeledGraph& g) {
  if (!is_deterministic(g))
    throw InputError("minimize_deterministic requires a forward-deterministic graph");
  const int n = g.vertex_count();
  std::map<std::pair<int, Symbol>, int> succ;
  for (const auto& e : g.edges()) succ[{e.src, e.label}] = e.dst;
  // Moore refinement on (label -> successor block).
  std::vector<int> block(static_cast<size_t>(n), 0);
  {
    std::map<std::vector<int>, int> init;
    for (int v = 0; v < n; ++v) {
      std::vector<int> key;
      for (Symbol a = 0; a < g.alphabet_size(); ++a)
        key.push_back(succ.count({v, a}) ? 1 : 0);
      auto [it, fresh] = init.emplace(key, static_cast<int>(init.size()));
      block[static_cast<size_t>(v)] = it->second;
      (void)fresh;
    }
  }
  while (true) {
    std::map<std::vector<int>, int> next_ids;
    std::vector<int> next(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{block[static_cast<size_t>(v)]};
      for (Symbol a = 0; a < g.alphabet_size(); ++a) {
        auto it = succ.find({v, a});
        key.push_back(it == succ.end() ? -1 : block[static_cast<size_t>(it->second)]);
      }
      auto [it, fresh] = next_ids.emplace(key, static_cast<int>(next_ids.size()));
      next[static_cast<size_t>(v)] = it->second;
      (void)fresh;
    }
    if (next == block) break;
    block = std::move(next);
  }
  int m = *std::max_element(block.begin(), block.end()) + 1;
  std::vector<std::string> names;
  for (int b = 0; b < m; ++b) names.push_back("m" + std::to_string(b));
  std::vector<LabeledEdge> edges;
  for (const auto& e : g.edges())
    edges.push_back({block[static_cast<size_t>(e.src)], e.label,
                     block[static_cast<size_t>(e.dst)]});
  return LabeledGraph(std::move(names), std::move(edges), g.alphabet_size()).essential();
}

FischerCover fischer_cover(const Subshift& s) {
  if (!s.has_graph())
    throw UnsupportedPresentation("fischer_cover requires an sft or sofic presentation");
  if (is_irreducible(s, 1) == Verdict::Refuted)
    throw NotIrreducible("fischer_cover requires an irreducible subshift");
  if (!is_nontrivial(s))
    throw TrivialShift("fischer_cover requires an infinite subshift");

  LabeledGraph reduced = minimize_deterministic(determinize_forward(s.graph()));

  // Restrict to the strongly connected component that still carries the
  // full language; transient determinization states drop out here.
  std::vector<std::pair<int, int>> arcs;
  for (const auto& e : reduced.edges()) arcs.emplace_back(e.src, e.dst);
  std::map<int, std::vector<int>> comps;
  {
    // Reuse the component structure through a throwaway strongly-connected
    // decomposition: vertices grouped by mutual reachability.
    const int n = reduced.vertex_count();
    std::vector<std::vector<bool>> reach(static_cast<size_t>(n),
                                         std::vector<bool>(static_cast<size_t>(n), false));
    for (int v = 0; v < n; ++v) reach[static_cast<size_t>(v)][static_cast<size_t>(v)] = true;
    for (const auto& [u, v] : arcs) reach[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (reach[static_cast<size_t>(i)][static_cast<size_t>(k)])
          for (int j = 0; j < n; ++j)
            if (reach[static_cast<size_t>(k)][static_cast<size_t>(j)])
              reach[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    std::vector<int> comp_of(static_cast<size_t>(n), -1);
    int next_id = 0;
    for (int v = 0; v < n; ++v) {
      if (comp_of[static_cast<size_t>(v)] != -1) continue;
      comp_of[static_cast<size_t>(v)] = next_id;
      comps[next_id].push_back(v);
      for (int u = v + 1; u < n; ++u)
        if (reach[static_cast<size_t>(v)][static_cast<size_t>(u)] &&
            reach[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
          comp_of[static_cast<size_t>(u)] = next_id;
          comps[next_id].push_back(u);
        }
      ++next_id;
    }
  }

  const int check_depth = 2 * reduced.vertex_count() + 2;
  for (const auto& [id, members] : comps) {
    std::set<int> keep(members.begin(), members.end());
    std::vector<int> remap(static_cast<size_t>(reduced.vertex_count()), -1);
    std::vector<std::string> names;
    for (int v : members) {
      remap[static_cast<size_t>(v)] = static_cast<int>(names.size());
      names.push_back("c" + std::to_string(v));
    }
    std::vector<LabeledEdge> edges;
    for (const auto& e : reduced.edges())
      if (keep.count(e.src) && keep.count(e.dst))
        edges.push_back({remap[static_cast<size_t>(e.src)], e.label,
                         remap[static_cast<size_t>(e.dst)]});
    LabeledGraph candidate =
        LabeledGraph(std::move(names), std::move(edges), reduced.alphabet_size()).essential();
    if (candidate.vertex_count() == 0) continue;
    Subshift cand_shift = Subshift::from_graph(s.alphabet(), candidate);
    if (!languages_agree(s, cand_shift, check_depth)) continue;

    auto sigs = follower_signatures(candidate, candidate.vertex_count());
    std::vector<int> order(static_cast<size_t>(candidate.vertex_count()));
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return sigs[static_cast<size_t>(x)] < sigs[static_cast<size_t>(y)];
    });
    for (size_t i = 0; i + 1 < order.size(); ++i)
      if (sigs[static_cast<size_t>(order[i])] == sigs[static_cast<size_t>(order[i + 1])])
        throw Error("cover canonicalization: two vertices share a follower signature");
    LabeledGraph canonical = rename_vertices(candidate, order);
    std::vector<std::vector<Word>> ordered_sigs;
    for (int idx : order) ordered_sigs.push_back(sigs[static_cast<size_t>(idx)]);
    return {s.alphabet(), std::move(canonical), std::move(ordered_sigs)};
  }
  throw NotIrreducible("no strongly connected component carries the full language");
}

std::vector<HatSymbol> hat_alphabet(const FischerCover& f) {
  std::set<HatSymbol> acc;
  for (const auto& e : f.graph.edges()) acc.insert({e.label, e.dst});
  return {acc.begin(), acc.end()};
}

HatMatrix hat_matrix(const FischerCover& f) {
  if (!is_deterministic(f.graph))
    throw EntryOverflow("hat matrix entries exceed one: cover is not deterministic");
  HatMatrix m;
  m.symbols = hat_alphabet(f);
  std::set<std::pair<int, std::pair<Symbol, int>>> edges;  // (src, (label, dst))
  for (const auto& e : f.graph.edges()) edges.insert({e.src, {e.label, e.dst}});
  const int n = static_cast<int>(m.symbols.size());
  m.entries.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int r = 0; r < n; ++r) {
    int i = m.symbols[static_cast<size_t>(r)].second;
    for (int c = 0; c < n; ++c) {
      auto [beta, j] = m.symbols[static_cast<size_t>(c)];
      if (edges.count({i, {beta, j}}))
        m.entries[static_cast<size_t>(r)][static_cast<size_t>(c)] = 1;
    }
  }
  return m;
}

Subshift hat_subshift(const FischerCover& f) {
  HatMatrix m = hat_matrix(f);
  std::vector<std::string> names;
  for (const auto& [a, v] : m.symbols)
    names.push_back(f.alphabet.name(a) + "@" + f.graph.vertex_name(v));
  SftMatrix mat;
  mat.entries = m.entries;
  return Subshift::from_sft(Alphabet(std::move(names)), std::move(mat));
}

EventuallyPeriodicPoint factor_map_apply(const FischerCover& f,
                                         const EventuallyPeriodicPoint& xhat) {
  Subshift hat = hat_subshift(f);
  if (!point_admissible(hat, xhat))
    throw InadmissibleWord("point is not admissible over the hat alphabet");
  auto symbols = hat_alphabet(f);
  auto project = [&](const EventuallyPeriodicPoint& p) {
    Word prefix, cycle;
    for (Symbol s : p.prefix) prefix.push_back(symbols[static_cast<size_t>(s)].first);
    for (Symbol s : p.cycle) cycle.push_back(symbols[static_cast<size_t>(s)].first);
    return make_point(std::move(prefix), std::move(cycle));
  };
  EventuallyPeriodicPoint out = project(xhat);
  Subshift base = Subshift::from_graph(f.alphabet, f.graph);
  if (!point_admissible(base, out))
    throw Error("factor map produced an inadmissible point");
  if (!(project(shift_point(xhat)) == shift_point(out)))
    throw Error("factor map failed to intertwine the shifts");
  return out;
}

}  // namespace lgs
