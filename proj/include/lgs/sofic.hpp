#ifndef LGS_SOFIC_HPP
#define LGS_SOFIC_HPP

#include <utility>
#include <vector>

#include "lgs/orbit.hpp"
#include "lgs/subshift.hpp"
#include "lgs/word.hpp"

namespace lgs {

// Canonical deterministic cover of an irreducible sofic shift: deterministic,
// follower-separated, irreducible, minimal among deterministic presentations.
// Vertices are canonically ordered (by follower signature) and renamed
// v0, v1, ...; vertex_signatures[i] lists the short follower words of vi used
// for the canonical order.
struct FischerCover {
  Alphabet alphabet;
  LabeledGraph graph;
  std::vector<std::vector<Word>> vertex_signatures;
};

// Merges vertices with identical follower behavior (partition refinement).
// The input must be forward-deterministic.
LabeledGraph minimize_deterministic(const LabeledGraph& g);

FischerCover fischer_cover(const Subshift& s);

// Pairs (alpha, i) such that some alpha-labeled edge ends at vertex i,
// ordered by (symbol, vertex).
using HatSymbol = std::pair<Symbol, int>;
std::vector<HatSymbol> hat_alphabet(const FischerCover& f);

// 0-1 transition matrix over the hat alphabet:
// entry((alpha,i),(beta,j)) = 1 iff a beta-edge runs from i to j.
struct HatMatrix {
  std::vector<HatSymbol> symbols;
  std::vector<std::vector<int>> entries;
};

HatMatrix hat_matrix(const FischerCover& f);

// The edge shift presented by the hat matrix, with symbol names
// "<label>@<vertex>".
Subshift hat_subshift(const FischerCover& f);

// Drops the vertex coordinate of a point over the hat alphabet; validates
// admissibility on both sides and shift-intertwining on the point.
EventuallyPeriodicPoint factor_map_apply(const FischerCover& f,
                                         const EventuallyPeriodicPoint& xhat);

}  // namespace lgs

#endif
