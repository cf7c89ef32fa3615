#include "lgs/lgs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lgs/errors.hpp"

namespace lgs {

namespace {

// Signature -> vertex index lookup for one level.
std::map<std::vector<Word>, int> signature_index(const std::vector<LgsVertex>& level) {
  std::map<std::vector<Word>, int> idx;
  for (size_t i = 0; i < level.size(); ++i)
    idx.emplace(level[i].payload.predecessor_signature, static_cast<int>(i));
  return idx;
}

}  // namespace

LambdaGraphSystem build_minimal_lgs(const Subshift& s, int L, int depth) {
  if (L < 1) throw InputError("truncation level must be at least 1");
  if (depth < 1) throw InputError("search depth must be positive");
  if (is_irreducible(s, depth) == Verdict::Refuted)
    throw NotIrreducible("build_minimal_lgs requires an irreducible subshift");
  // Bounded normality pre-check; a refutation would be fatal, unknown is
  // tolerated (oracles cannot certify).
  is_lambda_synchronizing(s, std::min(depth, 4));

  LambdaGraphSystem g{s.alphabet(), {}, {}, {}, L};
  for (int l = 0; l <= L; ++l) {
    int max_len;
    if (s.has_graph()) {
      max_len = subset_automaton_bound(s) + l;
    } else {
      max_len = std::min(depth, s.oracle().max_reliable_length - l);
      if (max_len < 1)
        throw HorizonTooSmall("oracle bound leaves no horizon at level " + std::to_string(l));
    }
    auto classes = past_equivalence_classes(s, l, max_len);
    std::vector<LgsVertex> level;
    for (size_t i = 0; i < classes.size(); ++i)
      level.push_back({"L" + std::to_string(l) + "V" + std::to_string(i), classes[i]});
    g.levels.push_back(std::move(level));
  }

  for (int l = 0; l < L; ++l) {
    const auto& parents = g.levels[static_cast<size_t>(l)];
    const auto& children = g.levels[static_cast<size_t>(l + 1)];
    auto parent_index = signature_index(parents);
    std::vector<int> iota_row;
    for (size_t j = 0; j < children.size(); ++j) {
      const Word& rep = children[j].payload.representative;
      auto it = parent_index.find(predecessor_set(s, rep, l));
      if (it == parent_index.end())
        throw HorizonTooSmall("no level-" + std::to_string(l) +
                              " class matches a level-" + std::to_string(l + 1) + " vertex");
      iota_row.push_back(it->second);
      for (Symbol a = 0; a < s.alphabet().size(); ++a) {
        Word extended = concat({a}, rep);
        if (!is_admissible(s, extended)) continue;
        SyncVerdict v = is_l_synchronizing(s, extended, l, depth);
        if (v.status == Verdict::Refuted) continue;
        auto src = parent_index.find(predecessor_set(s, extended, l));
        if (src == parent_index.end())
          throw HorizonTooSmall("edge source class missing at level " + std::to_string(l));
        g.edges.push_back({l, src->second, a, static_cast<int>(j)});
      }
    }
    g.iota.push_back(std::move(iota_row));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

TransitionMatrixSystem transition_matrices(const LambdaGraphSystem& g) {
  TransitionMatrixSystem t;
  t.alphabet_size = g.alphabet.size();
  const int L = g.truncation_level;
  for (int l = 0; l < L; ++l) {
    int m = g.level_size(l), n = g.level_size(l + 1);
    t.A.emplace_back(static_cast<size_t>(m),
                     std::vector<std::vector<int>>(static_cast<size_t>(t.alphabet_size),
                                                   std::vector<int>(static_cast<size_t>(n), 0)));
    t.I.emplace_back(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(n), 0));
    for (int j = 0; j < n; ++j)
      t.I.back()[static_cast<size_t>(g.iota[static_cast<size_t>(l)][static_cast<size_t>(j)])]
                [static_cast<size_t>(j)] = 1;
  }
  for (const auto& e : g.edges)
    t.A[static_cast<size_t>(e.level)][static_cast<size_t>(e.src)][static_cast<size_t>(e.label)]
       [static_cast<size_t>(e.dst)] = 1;
  return t;
}

bool check_left_resolving(const LambdaGraphSystem& g) {
  std::set<std::tuple<int, Symbol, int>> seen;  // (level, label, dst)
  for (const auto& e : g.edges)
    if (!seen.insert({e.level, e.label, e.dst}).second) return false;
  return true;
}

bool check_predecessor_separated(const LambdaGraphSystem& g) {
  // Backward label words per vertex, built level by level from the diagram.
  std::vector<std::set<Word>> cur(static_cast<size_t>(g.level_size(0)), std::set<Word>{Word{}});
  for (int l = 0; l < g.truncation_level; ++l) {
    std::vector<std::set<Word>> next(static_cast<size_t>(g.level_size(l + 1)));
    for (const auto& e : g.edges) {
      if (e.level != l) continue;
      for (const Word& w : cur[static_cast<size_t>(e.src)]) {
        Word ext = w;
        ext.push_back(e.label);
        next[static_cast<size_t>(e.dst)].insert(std::move(ext));
      }
    }
    std::set<std::set<Word>> distinct(next.begin(), next.end());
    if (distinct.size() != next.size()) return false;
    cur = std::move(next);
  }
  return true;
}

bool check_compatibility(const TransitionMatrixSystem& t) {
  const int L = static_cast<int>(t.A.size());
  for (int l = 0; l + 1 < L; ++l) {
    int m = static_cast<int>(t.I[static_cast<size_t>(l)].size());
    int mid = static_cast<int>(t.I[static_cast<size_t>(l + 1)].size());
    int n = static_cast<int>(t.I[static_cast<size_t>(l + 1)].front().size());
    for (Symbol a = 0; a < t.alphabet_size; ++a) {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
          int lhs = 0, rhs = 0;
          for (int k = 0; k < mid; ++k) {
            lhs += t.I[static_cast<size_t>(l)][static_cast<size_t>(i)][static_cast<size_t>(k)] *
                   t.A[static_cast<size_t>(l + 1)][static_cast<size_t>(k)][static_cast<size_t>(a)]
                      [static_cast<size_t>(j)];
            rhs += t.A[static_cast<size_t>(l)][static_cast<size_t>(i)][static_cast<size_t>(a)]
                      [static_cast<size_t>(k)] *
                   t.I[static_cast<size_t>(l + 1)][static_cast<size_t>(k)][static_cast<size_t>(j)];
          }
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Distinct label words of downward paths from (level, vertex), per depth.
std::set<Word> forward_words(const LambdaGraphSystem& g, int level, int vertex, int t) {
  std::map<int, std::set<Word>> frontier{{vertex, {Word{}}}};
  for (int step = 0; step < t; ++step) {
    std::map<int, std::set<Word>> next;
    for (const auto& e : g.edges) {
      if (e.level != level + step) continue;
      auto it = frontier.find(e.src);
      if (it == frontier.end()) continue;
      for (const Word& w : it->second) {
        Word ext = w;
        ext.push_back(e.label);
        next[e.dst].insert(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  std::set<Word> out;
  for (const auto& [v, ws] : frontier) out.insert(ws.begin(), ws.end());
  return out;
}

}  // namespace

Verdict check_condition_I(const LambdaGraphSystem& g, int horizon) {
  if (horizon < 1) throw InputError("horizon must be positive");
  const int L = g.truncation_level;
  // certified[rep] = largest available depth at which a vertex carrying this
  // representative was certified. Truncation-starved copies of the same
  // class at deeper levels inherit the certificate.
  std::map<Word, int> certified;
  bool all_ok = true;
  for (int l = 0; l <= L; ++l) {
    int hmax = std::min(horizon, L - l);
    for (int i = 0; i < g.level_size(l); ++i) {
      bool ok = false;
      for (int t = 1; t <= hmax && !ok; ++t)
        if (forward_words(g, l, i, t).size() >= 2) ok = true;
      const Word& rep = g.levels[static_cast<size_t>(l)][static_cast<size_t>(i)]
                            .payload.representative;
      if (ok) {
        auto [it, fresh] = certified.emplace(rep, hmax);
        if (!fresh && it->second < hmax) it->second = hmax;
      } else if (hmax < horizon) {
        auto it = certified.find(rep);
        if (it != certified.end() && it->second > hmax) ok = true;
      }
      if (!ok) all_ok = false;
    }
  }
  if (all_ok) return Verdict::Proven;
  // With out-degree at most one everywhere, each vertex's forward language
  // is a single sequence: a definite refutation.
  std::map<std::pair<int, int>, int> outdeg;
  bool any_branch = false;
  for (const auto& e : g.edges)
    if (++outdeg[{e.level, e.src}] > 1) any_branch = true;
  return any_branch ? Verdict::Unknown : Verdict::Refuted;
}

std::vector<Word> presented_words(const LambdaGraphSystem& g, int k) {
  if (k < 0) throw InputError("word length must be nonnegative");
  if (k > g.truncation_level)
    throw TruncationTooShallow("word length " + std::to_string(k) +
                               " exceeds truncation level " +
                               std::to_string(g.truncation_level));
  std::set<Word> acc;
  for (int v = 0; v < g.level_size(0); ++v) {
    auto ws = forward_words(g, 0, v, k);
    acc.insert(ws.begin(), ws.end());
  }
  std::vector<Word> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end());
  return out;
}

ProjectionExpansion projection_expansion(const LambdaGraphSystem& g, int l, int i) {
  if (l < 0 || l > g.truncation_level) throw InputError("level out of range");
  if (i < 0 || i >= g.level_size(l)) throw InputError("vertex index out of range");
  const auto& sig = g.levels[static_cast<size_t>(l)][static_cast<size_t>(i)]
                        .payload.predecessor_signature;
  std::set<Word> sig_set(sig.begin(), sig.end());
  ProjectionExpansion e;
  e.level = l;
  e.vertex = i;
  for (const Word& mu : presented_words(g, l)) e.factors.emplace_back(mu, sig_set.count(mu) > 0);
  return e;
}

}  // namespace lgs
