#ifndef LGS_SUBSHIFT_HPP
#define LGS_SUBSHIFT_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lgs/word.hpp"

namespace lgs {

// 0-1 transition matrix of a 1-step shift of finite type. Every row and
// column must contain a 1 (no stranded symbols).
struct SftMatrix {
  std::vector<std::vector<int>> entries;

  int size() const { return static_cast<int>(entries.size()); }
  int at(int i, int j) const { return entries[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  void validate() const;
};

struct LabeledEdge {
  int src;
  Symbol label;
  int dst;

  auto operator<=>(const LabeledEdge&) const = default;
};

// Finite labeled graph, kept essential (every vertex bi-extendable) and
// with parallel (src,label,dst) duplicates collapsed.
class LabeledGraph {
 public:
  LabeledGraph(std::vector<std::string> vertex_names, std::vector<LabeledEdge> edges,
               int alphabet_size);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int alphabet_size() const { return alphabet_size_; }
  const std::string& vertex_name(int v) const { return vertex_names_[static_cast<size_t>(v)]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }

  // Iteratively removes vertices with in-degree or out-degree zero.
  LabeledGraph essential() const;
  bool is_essential() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<LabeledEdge> edges_;
  int alphabet_size_;
};

// Subset/relation arithmetic over a labeled graph with at most 64 vertices.
// Vertex sets are bit masks; Rel[u] is the mask of vertices reachable from u
// by a path carrying a fixed word.
class GraphAutomaton {
 public:
  using Mask = std::uint64_t;
  using Rel = std::vector<Mask>;

  explicit GraphAutomaton(const LabeledGraph& g);

  int vertex_count() const { return n_; }
  Mask full() const { return full_; }

  Mask post(Mask s, Symbol a) const;   // targets of a-edges out of s
  Mask pre(Mask s, Symbol a) const;    // sources of a-edges into s

  Mask end_set(const Word& w) const;   // vertices where some path carrying w ends
  Mask start_set(const Word& w) const; // vertices where some path carrying w starts

  Rel relation(const Word& w) const;
  static Mask apply(const Rel& r, Mask s);  // {u : r[u] & s}
  Mask start_of(const Rel& r) const;
  Mask end_of(const Rel& r) const;

  // All values of start_set over admissible words, with a witness word per
  // value (discovered breadth-first, labels in alphabet order).
  std::vector<std::pair<Mask, Word>> reachable_start_sets() const;

 private:
  int n_;
  int nsym_;
  Mask full_;
  std::vector<std::vector<Mask>> post_;  // [label][vertex]
  std::vector<std::vector<Mask>> pre_;
};

// Bounded-depth membership oracle for shifts without a finite presentation.
struct LanguageOracle {
  std::string name;
  int max_reliable_length = 0;
  std::function<bool(const Word&)> member;
};

enum class PresentationKind { Sft, Sofic, Oracle };

// A presented subshift: SFT matrix, labeled graph, or named language oracle.
// SFT presentations also carry the derived labeled graph (vertices are the
// symbols, an edge i -> j labeled j whenever A(i,j)=1).
class Subshift {
 public:
  static Subshift from_sft(Alphabet alphabet, SftMatrix matrix);
  static Subshift from_graph(Alphabet alphabet, LabeledGraph graph);
  static Subshift from_oracle(Alphabet alphabet, LanguageOracle oracle);

  PresentationKind kind() const { return kind_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const SftMatrix& matrix() const;
  const LabeledGraph& graph() const;
  const GraphAutomaton& automaton() const;
  const LanguageOracle& oracle() const;
  bool has_graph() const { return kind_ != PresentationKind::Oracle; }

 private:
  Subshift(PresentationKind kind, Alphabet alphabet);

  PresentationKind kind_;
  Alphabet alphabet_;
  std::shared_ptr<const SftMatrix> matrix_;
  std::shared_ptr<const LabeledGraph> graph_;
  std::shared_ptr<const GraphAutomaton> automaton_;
  std::shared_ptr<const LanguageOracle> oracle_;
};

enum class Verdict { Proven, Refuted, Unknown };
std::string to_string(Verdict v);

// ---- word-combinatorics queries -----------------------------------------

bool is_admissible(const Subshift& s, const Word& w);
std::vector<Word> admissible_words(const Subshift& s, int k);

// { nu in B_l | nu·mu admissible } and { nu in B_l | mu·nu admissible }.
std::vector<Word> predecessor_set(const Subshift& s, const Word& mu, int l);
std::vector<Word> follower_set(const Subshift& s, const Word& mu, int l);

// Forward subset determinization from the full vertex set; the result
// presents the same language and is right-resolving.
LabeledGraph determinize_forward(const LabeledGraph& g);

Verdict is_irreducible(const Subshift& s, int depth);
bool is_nontrivial(const Subshift& s);

// n-block recoding of an SFT; symbols of the result are the words B_n.
Subshift higher_block(const Subshift& s, int n);

// Built-in oracle shifts ("dyck2", "beta-golden").
Subshift builtin_oracle(const std::string& name, int max_reliable_length);

}  // namespace lgs

#endif
