#include "lgs/subshift.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "lgs/errors.hpp"

namespace lgs {

void SftMatrix::validate() const {
  const int n = size();
  if (n < 1) throw InputError("sft matrix must be nonempty");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n) throw InputError("sft matrix must be square");
  for (int i = 0; i < n; ++i) {
    int row_sum = 0, col_sum = 0;
    for (int j = 0; j < n; ++j) {
      if (at(i, j) != 0 && at(i, j) != 1) throw InputError("sft matrix entries must be 0 or 1");
      row_sum += at(i, j);
      col_sum += at(j, i);
    }
    if (row_sum == 0) throw InputError("sft matrix has a zero row");
    if (col_sum == 0) throw InputError("sft matrix has a zero column");
  }
}

LabeledGraph::LabeledGraph(std::vector<std::string> vertex_names,
                           std::vector<LabeledEdge> edges, int alphabet_size)
    : vertex_names_(std::move(vertex_names)),
      edges_(std::move(edges)),
      alphabet_size_(alphabet_size) {
  const int n = vertex_count();
  std::set<std::string> seen;
  for (const auto& name : vertex_names_)
    if (!seen.insert(name).second) throw InputError("duplicate vertex name: " + name);
  for (const auto& e : edges_) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw InputError("edge endpoint out of range");
    if (e.label < 0 || e.label >= alphabet_size_)
      throw InputError("edge label out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool LabeledGraph::is_essential() const {
  std::vector<int> indeg(static_cast<size_t>(vertex_count()), 0),
      outdeg(static_cast<size_t>(vertex_count()), 0);
  for (const auto& e : edges_) {
    ++outdeg[static_cast<size_t>(e.src)];
    ++indeg[static_cast<size_t>(e.dst)];
  }
  for (int v = 0; v < vertex_count(); ++v)
    if (indeg[static_cast<size_t>(v)] == 0 || outdeg[static_cast<size_t>(v)] == 0) return false;
  return true;
}

LabeledGraph LabeledGraph::essential() const {
  std::vector<bool> alive(static_cast<size_t>(vertex_count()), true);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> indeg(static_cast<size_t>(vertex_count()), 0),
        outdeg(static_cast<size_t>(vertex_count()), 0);
    for (const auto& e : edges_) {
      if (!alive[static_cast<size_t>(e.src)] || !alive[static_cast<size_t>(e.dst)]) continue;
      ++outdeg[static_cast<size_t>(e.src)];
      ++indeg[static_cast<size_t>(e.dst)];
    }
    for (int v = 0; v < vertex_count(); ++v) {
      if (alive[static_cast<size_t>(v)] &&
          (indeg[static_cast<size_t>(v)] == 0 || outdeg[static_cast<size_t>(v)] == 0)) {
        alive[static_cast<size_t>(v)] = false;
        changed = true;
      }
    }
  }
  std::vector<int> remap(static_cast<size_t>(vertex_count()), -1);
  std::vector<std::string> names;
  for (int v = 0; v < vertex_count(); ++v) {
    if (alive[static_cast<size_t>(v)]) {
      remap[static_cast<size_t>(v)] = static_cast<int>(names.size());
      names.push_back(vertex_names_[static_cast<size_t>(v)]);
    }
  }
  std::vector<LabeledEdge> kept;
  for (const auto& e : edges_) {
    int s = remap[static_cast<size_t>(e.src)], d = remap[static_cast<size_t>(e.dst)];
    if (s >= 0 && d >= 0) kept.push_back({s, e.label, d});
  }
  return LabeledGraph(std::move(names), std::move(kept), alphabet_size_);
}

GraphAutomaton::GraphAutomaton(const LabeledGraph& g)
    : n_(g.vertex_count()), nsym_(g.alphabet_size()) {
  if (n_ > 64) throw InputError("graphs are limited to 64 vertices");
  full_ = (n_ == 64) ? ~Mask{0} : ((Mask{1} << n_) - 1);
  post_.assign(static_cast<size_t>(nsym_), std::vector<Mask>(static_cast<size_t>(n_), 0));
  pre_.assign(static_cast<size_t>(nsym_), std::vector<Mask>(static_cast<size_t>(n_), 0));
  for (const auto& e : g.edges()) {
    post_[static_cast<size_t>(e.label)][static_cast<size_t>(e.src)] |= Mask{1} << e.dst;
    pre_[static_cast<size_t>(e.label)][static_cast<size_t>(e.dst)] |= Mask{1} << e.src;
  }
}

GraphAutomaton::Mask GraphAutomaton::post(Mask s, Symbol a) const {
  Mask out = 0;
  const auto& table = post_[static_cast<size_t>(a)];
  for (int v = 0; v < n_; ++v)
    if (s >> v & 1) out |= table[static_cast<size_t>(v)];
  return out;
}

GraphAutomaton::Mask GraphAutomaton::pre(Mask s, Symbol a) const {
  Mask out = 0;
  const auto& table = pre_[static_cast<size_t>(a)];
  for (int v = 0; v < n_; ++v)
    if (s >> v & 1) out |= table[static_cast<size_t>(v)];
  return out;
}

GraphAutomaton::Mask GraphAutomaton::end_set(const Word& w) const {
  Mask cur = full_;
  for (Symbol a : w) cur = post(cur, a);
  return cur;
}

GraphAutomaton::Mask GraphAutomaton::start_set(const Word& w) const {
  Mask cur = full_;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = pre(cur, *it);
  return cur;
}

GraphAutomaton::Rel GraphAutomaton::relation(const Word& w) const {
  Rel rel(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v) rel[static_cast<size_t>(v)] = Mask{1} << v;
  for (Symbol a : w) {
    const auto& table = post_[static_cast<size_t>(a)];
    for (int v = 0; v < n_; ++v) {
      Mask next = 0;
      Mask cur = rel[static_cast<size_t>(v)];
      for (int u = 0; u < n_; ++u)
        if (cur >> u & 1) next |= table[static_cast<size_t>(u)];
      rel[static_cast<size_t>(v)] = next;
    }
  }
  return rel;
}

GraphAutomaton::Mask GraphAutomaton::apply(const Rel& r, Mask s) {
  Mask out = 0;
  for (size_t u = 0; u < r.size(); ++u)
    if (r[u] & s) out |= Mask{1} << u;
  return out;
}

GraphAutomaton::Mask GraphAutomaton::start_of(const Rel& r) const {
  Mask out = 0;
  for (size_t u = 0; u < r.size(); ++u)
    if (r[u]) out |= Mask{1} << u;
  return out;
}

GraphAutomaton::Mask GraphAutomaton::end_of(const Rel& r) const {
  Mask out = 0;
  for (const auto row : r) out |= row;
  return out;
}

std::vector<std::pair<GraphAutomaton::Mask, Word>> GraphAutomaton::reachable_start_sets() const {
  std::map<Mask, Word> seen;
  std::deque<Mask> queue;
  seen.emplace(full_, Word{});
  queue.push_back(full_);
  while (!queue.empty()) {
    Mask cur = queue.front();
    queue.pop_front();
    const Word& rep = seen.at(cur);
    for (Symbol a = 0; a < nsym_; ++a) {
      Mask nxt = pre(cur, a);
      if (nxt == 0 || seen.count(nxt)) continue;
      Word w;
      w.reserve(rep.size() + 1);
      w.push_back(a);
      w.insert(w.end(), rep.begin(), rep.end());
      seen.emplace(nxt, std::move(w));
      queue.push_back(nxt);
    }
  }
  return {seen.begin(), seen.end()};
}

// ---- Subshift ------------------------------------------------------------

Subshift::Subshift(PresentationKind kind, Alphabet alphabet)
    : kind_(kind), alphabet_(std::move(alphabet)) {}

Subshift Subshift::from_sft(Alphabet alphabet, SftMatrix matrix) {
  matrix.validate();
  if (matrix.size() != alphabet.size())
    throw InputError("sft matrix size does not match alphabet size");
  if (alphabet.size() < 2) throw InputError("alphabet must have at least 2 symbols");
  Subshift s(PresentationKind::Sft, std::move(alphabet));
  // Derived presentation: vertex per symbol, edge i -> j labeled j.
  std::vector<LabeledEdge> edges;
  for (int i = 0; i < matrix.size(); ++i)
    for (int j = 0; j < matrix.size(); ++j)
      if (matrix.at(i, j)) edges.push_back({i, j, j});
  LabeledGraph g(s.alphabet_.names(), std::move(edges), s.alphabet_.size());
  s.matrix_ = std::make_shared<const SftMatrix>(std::move(matrix));
  s.graph_ = std::make_shared<const LabeledGraph>(g.essential());
  s.automaton_ = std::make_shared<const GraphAutomaton>(*s.graph_);
  return s;
}

Subshift Subshift::from_graph(Alphabet alphabet, LabeledGraph graph) {
  if (graph.alphabet_size() != alphabet.size())
    throw InputError("graph alphabet size does not match alphabet");
  Subshift s(PresentationKind::Sofic, std::move(alphabet));
  LabeledGraph trimmed = graph.essential();
  if (trimmed.vertex_count() == 0) throw InputError("graph presents the empty shift");
  s.graph_ = std::make_shared<const LabeledGraph>(std::move(trimmed));
  s.automaton_ = std::make_shared<const GraphAutomaton>(*s.graph_);
  return s;
}

Subshift Subshift::from_oracle(Alphabet alphabet, LanguageOracle oracle) {
  if (oracle.max_reliable_length < 1) throw InputError("oracle depth bound must be positive");
  if (!oracle.member) throw InputError("oracle has no membership procedure");
  Subshift s(PresentationKind::Oracle, std::move(alphabet));
  s.oracle_ = std::make_shared<const LanguageOracle>(std::move(oracle));
  return s;
}

const SftMatrix& Subshift::matrix() const {
  if (!matrix_) throw UnsupportedPresentation("subshift has no sft matrix presentation");
  return *matrix_;
}

const LabeledGraph& Subshift::graph() const {
  if (!graph_) throw UnsupportedPresentation("subshift has no graph presentation");
  return *graph_;
}

const GraphAutomaton& Subshift::automaton() const {
  if (!automaton_) throw UnsupportedPresentation("subshift has no graph presentation");
  return *automaton_;
}

const LanguageOracle& Subshift::oracle() const {
  if (!oracle_) throw UnsupportedPresentation("subshift has no oracle presentation");
  return *oracle_;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Proven: return "proven";
    case Verdict::Refuted: return "refuted";
    default: return "unknown";
  }
}

// ---- queries -------------------------------------------------------------

static void check_letters(const Subshift& s, const Word& w) {
  for (Symbol a : w)
    if (a < 0 || a >= s.alphabet().size())
      throw InputError("word contains a symbol outside the alphabet");
}

bool is_admissible(const Subshift& s, const Word& w) {
  check_letters(s, w);
  if (s.kind() == PresentationKind::Oracle) {
    if (static_cast<int>(w.size()) > s.oracle().max_reliable_length)
      throw OracleDepthExceeded("word length exceeds oracle bound");
    if (w.empty()) return true;
    return s.oracle().member(w);
  }
  return s.automaton().end_set(w) != 0;
}

static void enumerate_graph_words(const GraphAutomaton& aut, int nsym, int k, Word& prefix,
                                  GraphAutomaton::Mask ends, std::vector<Word>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(prefix);
    return;
  }
  for (Symbol a = 0; a < nsym; ++a) {
    GraphAutomaton::Mask next = aut.post(ends, a);
    if (next == 0) continue;
    prefix.push_back(a);
    enumerate_graph_words(aut, nsym, k, prefix, next, out);
    prefix.pop_back();
  }
}

static void enumerate_oracle_words(const Subshift& s, int k, Word& prefix,
                                   std::vector<Word>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(prefix);
    return;
  }
  for (Symbol a = 0; a < s.alphabet().size(); ++a) {
    prefix.push_back(a);
    if (s.oracle().member(prefix)) enumerate_oracle_words(s, k, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Word> admissible_words(const Subshift& s, int k) {
  if (k < 0) throw InputError("word length must be nonnegative");
  if (k == 0) return {Word{}};
  std::vector<Word> out;
  Word prefix;
  if (s.kind() == PresentationKind::Oracle) {
    if (k > s.oracle().max_reliable_length)
      throw OracleDepthExceeded("enumeration length exceeds oracle bound");
    enumerate_oracle_words(s, k, prefix, out);
  } else {
    enumerate_graph_words(s.automaton(), s.alphabet().size(), k, prefix,
                          s.automaton().full(), out);
  }
  return out;
}

std::vector<Word> predecessor_set(const Subshift& s, const Word& mu, int l) {
  if (l < 0) throw InputError("predecessor length must be nonnegative");
  if (!is_admissible(s, mu))
    throw InadmissibleWord("predecessor_set: word is not admissible");
  if (l == 0) return {Word{}};
  std::vector<Word> out;
  if (s.kind() == PresentationKind::Oracle) {
    if (l + static_cast<int>(mu.size()) > s.oracle().max_reliable_length)
      throw OracleDepthExceeded("predecessor query exceeds oracle bound");
    for (const Word& nu : admissible_words(s, l))
      if (s.oracle().member(concat(nu, mu))) out.push_back(nu);
    return out;
  }
  const auto& aut = s.automaton();
  GraphAutomaton::Mask starts = aut.start_set(mu);
  for (const Word& nu : admissible_words(s, l))
    if (aut.end_set(nu) & starts) out.push_back(nu);
  return out;
}

std::vector<Word> follower_set(const Subshift& s, const Word& mu, int l) {
  if (l < 0) throw InputError("follower length must be nonnegative");
  if (!is_admissible(s, mu))
    throw InadmissibleWord("follower_set: word is not admissible");
  if (l == 0) return {Word{}};
  std::vector<Word> out;
  if (s.kind() == PresentationKind::Oracle) {
    if (l + static_cast<int>(mu.size()) > s.oracle().max_reliable_length)
      throw OracleDepthExceeded("follower query exceeds oracle bound");
    for (const Word& nu : admissible_words(s, l))
      if (s.oracle().member(concat(mu, nu))) out.push_back(nu);
    return out;
  }
  const auto& aut = s.automaton();
  GraphAutomaton::Mask ends = aut.end_set(mu);
  for (const Word& nu : admissible_words(s, l)) {
    GraphAutomaton::Mask cur = ends;
    for (Symbol a : nu) cur = aut.post(cur, a);
    if (cur) out.push_back(nu);
  }
  return out;
}

// ---- graph structure helpers --------------------------------------------

namespace {

// Kosaraju strongly connected components; returns component id per vertex.
std::vector<int> scc_ids(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> fwd(static_cast<size_t>(n)), rev(static_cast<size_t>(n));
  for (const auto& [u, v] : arcs) {
    fwd[static_cast<size_t>(u)].push_back(v);
    rev[static_cast<size_t>(v)].push_back(u);
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<size_t>(root)]) continue;
    // Iterative postorder.
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    seen[static_cast<size_t>(root)] = true;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < fwd[static_cast<size_t>(v)].size()) {
        int w = fwd[static_cast<size_t>(v)][idx++];
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int next_id = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[static_cast<size_t>(*it)] != -1) continue;
    std::vector<int> stack{*it};
    comp[static_cast<size_t>(*it)] = next_id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : rev[static_cast<size_t>(v)]) {
        if (comp[static_cast<size_t>(w)] == -1) {
          comp[static_cast<size_t>(w)] = next_id;
          stack.push_back(w);
        }
      }
    }
    ++next_id;
  }
  return comp;
}

bool strongly_connected(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return false;
  std::vector<std::pair<int, int>> arcs;
  for (const auto& e : g.edges()) arcs.emplace_back(e.src, e.dst);
  auto comp = scc_ids(g.vertex_count(), arcs);
  for (int id : comp)
    if (id != comp[0]) return false;
  return true;
}

}  // namespace

LabeledGraph determinize_forward(const LabeledGraph& g) {
  GraphAutomaton aut(g);
  const int nsym = g.alphabet_size();
  std::map<GraphAutomaton::Mask, int> index;
  std::vector<GraphAutomaton::Mask> states;
  std::deque<GraphAutomaton::Mask> queue;
  index.emplace(aut.full(), 0);
  states.push_back(aut.full());
  queue.push_back(aut.full());
  std::vector<LabeledEdge> edges;
  while (!queue.empty()) {
    GraphAutomaton::Mask cur = queue.front();
    queue.pop_front();
    int src = index.at(cur);
    for (Symbol a = 0; a < nsym; ++a) {
      GraphAutomaton::Mask nxt = aut.post(cur, a);
      if (nxt == 0) continue;
      auto [it, inserted] = index.emplace(nxt, static_cast<int>(states.size()));
      if (inserted) {
        states.push_back(nxt);
        queue.push_back(nxt);
      }
      edges.push_back({src, a, it->second});
    }
  }
  std::vector<std::string> names;
  names.reserve(states.size());
  for (size_t i = 0; i < states.size(); ++i) names.push_back("q" + std::to_string(i));
  return LabeledGraph(std::move(names), std::move(edges), nsym).essential();
}

Verdict is_irreducible(const Subshift& s, int depth) {
  if (depth < 1) throw InputError("irreducibility depth must be at least 1");
  if (s.has_graph())
    return strongly_connected(s.graph().essential()) ? Verdict::Proven : Verdict::Refuted;
  // Oracle: bounded bridging search over word pairs.
  std::vector<Word> words;
  for (int k = 1; k <= depth; ++k) {
    if (k > s.oracle().max_reliable_length) break;
    for (Word& w : admissible_words(s, k)) words.push_back(std::move(w));
  }
  const int bound = s.oracle().max_reliable_length;
  for (const Word& mu : words) {
    for (const Word& nu : words) {
      bool bridged = false;
      for (int h = 0; h <= depth && !bridged; ++h) {
        if (static_cast<int>(mu.size() + nu.size()) + h > bound) break;
        for (const Word& eta : admissible_words(s, h)) {
          if (s.oracle().member(concat(concat(mu, eta), nu))) {
            bridged = true;
            break;
          }
        }
      }
      if (!bridged) return Verdict::Unknown;
    }
  }
  return Verdict::Proven;
}

bool is_nontrivial(const Subshift& s) {
  if (!s.has_graph())
    throw UnsupportedPresentation("is_nontrivial requires an sft or sofic presentation");
  // In a forward-deterministic essential presentation the shift is infinite
  // exactly when some strongly connected component holds more edges than
  // vertices (a vertex inside the component branches).
  LabeledGraph det = determinize_forward(s.graph());
  std::vector<std::pair<int, int>> arcs;
  for (const auto& e : det.edges()) arcs.emplace_back(e.src, e.dst);
  auto comp = scc_ids(det.vertex_count(), arcs);
  std::map<int, int> comp_vertices, comp_edges;
  for (int v = 0; v < det.vertex_count(); ++v) ++comp_vertices[comp[static_cast<size_t>(v)]];
  for (const auto& e : det.edges())
    if (comp[static_cast<size_t>(e.src)] == comp[static_cast<size_t>(e.dst)])
      ++comp_edges[comp[static_cast<size_t>(e.src)]];
  for (const auto& [id, nv] : comp_vertices) {
    auto it = comp_edges.find(id);
    if (it != comp_edges.end() && it->second > nv) return true;
  }
  return false;
}

Subshift higher_block(const Subshift& s, int n) {
  if (n < 1) throw InputError("block length must be at least 1");
  if (s.kind() != PresentationKind::Sft)
    throw UnsupportedPresentation("higher_block requires an sft presentation");
  if (n == 1) return s;
  std::vector<Word> blocks = admissible_words(s, n);
  std::vector<std::string> names;
  names.reserve(blocks.size());
  for (const Word& b : blocks) names.push_back(s.alphabet().format(b));
  const int m = static_cast<int>(blocks.size());
  SftMatrix mat;
  mat.entries.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      bool overlap = std::equal(blocks[static_cast<size_t>(i)].begin() + 1,
                                blocks[static_cast<size_t>(i)].end(),
                                blocks[static_cast<size_t>(j)].begin());
      if (!overlap) continue;
      Word joined = blocks[static_cast<size_t>(i)];
      joined.push_back(blocks[static_cast<size_t>(j)].back());
      if (is_admissible(s, joined)) mat.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    }
  }
  return Subshift::from_sft(Alphabet(std::move(names)), std::move(mat));
}

Subshift builtin_oracle(const std::string& name, int max_reliable_length) {
  if (name == "dyck2") {
    // Two bracket pairs a1/b1 and a2/b2; a closer with a mismatched opener
    // on top of the stack is forbidden, an unmatched closer is allowed
    // (its opener may sit outside the window).
    Alphabet alphabet({"a1", "a2", "b1", "b2"});
    LanguageOracle oracle;
    oracle.name = name;
    oracle.max_reliable_length = max_reliable_length;
    oracle.member = [](const Word& w) {
      std::vector<Symbol> stack;
      for (Symbol sym : w) {
        if (sym == 0 || sym == 1) {
          stack.push_back(sym);
        } else {
          if (!stack.empty()) {
            if (stack.back() != sym - 2) return false;
            stack.pop_back();
          }
        }
      }
      return true;
    };
    return Subshift::from_oracle(std::move(alphabet), std::move(oracle));
  }
  if (name == "beta-golden") {
    // beta-shift for the golden ratio: binary sequences with no factor 11.
    Alphabet alphabet({"0", "1"});
    LanguageOracle oracle;
    oracle.name = name;
    oracle.max_reliable_length = max_reliable_length;
    oracle.member = [](const Word& w) {
      for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 1 && w[i + 1] == 1) return false;
      return true;
    };
    return Subshift::from_oracle(std::move(alphabet), std::move(oracle));
  }
  throw InputError("unknown oracle: " + name);
}

}  // namespace lgs
