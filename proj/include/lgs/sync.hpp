#ifndef LGS_SYNC_HPP
#define LGS_SYNC_HPP

#include <optional>
#include <vector>

#include "lgs/subshift.hpp"
#include "lgs/word.hpp"

namespace lgs {

// Verdict for a synchronization query. A refutation always carries a
// replayable witness ξ with Γ_l^-(μξ) ≠ Γ_l^-(μ).
struct SyncVerdict {
  Verdict status = Verdict::Unknown;
  std::optional<Word> witness;
  int depth_used = 0;
};

// An l-past equivalence class: all members share the same predecessor set
// Γ_l^-, stored as the signature. The representative is the shortlex-least
// member found within the enumeration horizon.
struct PastClass {
  int level = 0;
  Word representative;
  std::vector<Word> members;
  std::vector<Word> predecessor_signature;
};

struct SyncWordSets {
  std::vector<Word> proven;
  std::vector<Word> unknown;  // nonempty only for oracle presentations
};

// Number of distinct start-set values reachable in the subset automaton.
// Bounds the ξ-quantifier for exact synchronization checks and, plus l,
// the horizon needed to realize every predecessor signature.
int subset_automaton_bound(const Subshift& s);

// Is Γ_l^-(μξ) = Γ_l^-(μ) for every admissible follower ξ of μ? Exact
// (proven/refuted) for graph presentations; depth-bounded (unknown on a
// passing search) for oracles. l = 0 is always proven.
SyncVerdict is_l_synchronizing(const Subshift& s, const Word& mu, int l, int depth);

// S_l(Λ) restricted to nonempty words of length ≤ max_len.
SyncWordSets synchronizing_words(const Subshift& s, int l, int max_len, int depth);

// λ-synchronization: every ν ∈ B_l can be completed by some μ ∈ S_k to an
// (k-l)-synchronizing word, for all l ≤ k ≤ depth. Requires irreducibility.
SyncVerdict is_lambda_synchronizing(const Subshift& s, int depth);

// Partition of S_l(Λ) ∩ B_{≤max_len} by predecessor signature, sorted by
// shortlex representative.
std::vector<PastClass> past_equivalence_classes(const Subshift& s, int l, int max_len);

}  // namespace lgs

#endif
