#ifndef LGS_LGS_HPP
#define LGS_LGS_HPP

#include <string>
#include <vector>

#include "lgs/subshift.hpp"
#include "lgs/sync.hpp"
#include "lgs/word.hpp"

namespace lgs {

struct LgsVertex {
  std::string id;  // "L{level}V{index}"
  PastClass payload;
};

// Edge from level `level` down to level `level + 1`.
struct LgsEdge {
  int level;
  int src;  // index into levels[level]
  Symbol label;
  int dst;  // index into levels[level + 1]

  auto operator<=>(const LgsEdge&) const = default;
};

// Finite truncation of the minimal level-indexed labeled graph: vertices at
// level l are the l-past equivalence classes of l-synchronizing words,
// edges descend one level, iota collapses level l+1 onto level l.
struct LambdaGraphSystem {
  Alphabet alphabet;
  std::vector<std::vector<LgsVertex>> levels;  // 0..truncation_level
  std::vector<LgsEdge> edges;                  // sorted
  // iota[l][j] = index in levels[l] of the parent of levels[l+1][j].
  std::vector<std::vector<int>> iota;
  int truncation_level = 0;

  int level_size(int l) const { return static_cast<int>(levels[static_cast<size_t>(l)].size()); }
};

// A[l][i][alpha][j] = 1 iff an alpha-edge levels[l][i] -> levels[l+1][j];
// I[l][i][j] = 1 iff iota maps levels[l+1][j] to levels[l][i].
struct TransitionMatrixSystem {
  int alphabet_size = 0;
  std::vector<std::vector<std::vector<std::vector<int>>>> A;
  std::vector<std::vector<std::vector<int>>> I;
};

// Symbolic expansion of the vertex projection at (level, vertex): one factor
// per word of B_l, positive exactly on the vertex's predecessor signature.
struct ProjectionExpansion {
  int level = 0;
  int vertex = 0;
  std::vector<std::pair<Word, bool>> factors;  // (mu, positive?)
};

LambdaGraphSystem build_minimal_lgs(const Subshift& s, int L, int depth);

TransitionMatrixSystem transition_matrices(const LambdaGraphSystem& g);

// No two distinct edges share (label, target).
bool check_left_resolving(const LambdaGraphSystem& g);

// At every level, distinct vertices have distinct backward label-path sets
// (recomputed from the diagram, independently of the stored signatures).
bool check_predecessor_separated(const LambdaGraphSystem& g);

// I_{l,l+1} A_{l+1,l+2}(·,α,·) = A_{l,l+1}(·,α,·) I_{l+1,l+2} for all α, l.
bool check_compatibility(const TransitionMatrixSystem& t);

// Every vertex admits two label-distinct equal-length downward paths.
Verdict check_condition_I(const LambdaGraphSystem& g, int horizon);

// Label words of k-step paths starting at level 0.
std::vector<Word> presented_words(const LambdaGraphSystem& g, int k);

ProjectionExpansion projection_expansion(const LambdaGraphSystem& g, int l, int i);

}  // namespace lgs

#endif
