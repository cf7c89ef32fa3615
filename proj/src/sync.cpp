#include "lgs/sync.hpp"

#include <algorithm>
#include <map>

#include "lgs/errors.hpp"

namespace lgs {

namespace {

using Mask = GraphAutomaton::Mask;

// start_set(w·suffix) when the start set of the suffix is `suffix_starts`.
Mask pre_word(const GraphAutomaton& aut, const Word& w, Mask suffix_starts) {
  Mask cur = suffix_starts;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = aut.pre(cur, *it);
  return cur;
}

// Γ_l^- induced by a start-set mask, as indicator over B_l (given end masks).
std::vector<char> gamma_of_mask(const std::vector<Mask>& end_masks, Mask starts) {
  std::vector<char> out(end_masks.size());
  for (size_t i = 0; i < end_masks.size(); ++i) out[i] = (end_masks[i] & starts) != 0;
  return out;
}

}  // namespace

int subset_automaton_bound(const Subshift& s) {
  return static_cast<int>(s.automaton().reachable_start_sets().size());
}

SyncVerdict is_l_synchronizing(const Subshift& s, const Word& mu, int l, int depth) {
  if (l < 0) throw InputError("synchronization level must be nonnegative");
  if (depth < 1) throw InputError("search depth must be positive");
  if (!is_admissible(s, mu))
    throw InadmissibleWord("is_l_synchronizing: word is not admissible");
  if (l == 0) return {Verdict::Proven, std::nullopt, 0};

  if (s.has_graph()) {
    const auto& aut = s.automaton();
    auto reach = aut.reachable_start_sets();
    std::vector<Mask> end_masks;
    for (const Word& nu : admissible_words(s, l)) end_masks.push_back(aut.end_set(nu));
    auto base = gamma_of_mask(end_masks, pre_word(aut, mu, aut.full()));
    std::optional<Word> witness;
    for (const auto& [xi_starts, xi] : reach) {
      if (xi.empty()) continue;
      Mask m = pre_word(aut, mu, xi_starts);
      if (m == 0) continue;  // μξ inadmissible
      if (gamma_of_mask(end_masks, m) != base) {
        if (!witness || shortlex_less(xi, *witness)) witness = xi;
      }
    }
    int bound = static_cast<int>(reach.size());
    if (witness) return {Verdict::Refuted, witness, bound};
    return {Verdict::Proven, std::nullopt, bound};
  }

  const int bound = s.oracle().max_reliable_length;
  int depth_eff = std::min(depth, bound - l - static_cast<int>(mu.size()));
  if (depth_eff < 0)
    throw OracleDepthExceeded("synchronization query exceeds oracle bound");
  auto base = predecessor_set(s, mu, l);
  for (int t = 1; t <= depth_eff; ++t) {
    for (const Word& xi : follower_set(s, mu, t)) {
      if (predecessor_set(s, concat(mu, xi), l) != base)
        return {Verdict::Refuted, xi, depth_eff};
    }
  }
  return {Verdict::Unknown, std::nullopt, depth_eff};
}

SyncWordSets synchronizing_words(const Subshift& s, int l, int max_len, int depth) {
  if (max_len < 1) throw InputError("max_len must be at least 1");
  SyncWordSets out;
  for (int k = 1; k <= max_len; ++k) {
    for (const Word& w : admissible_words(s, k)) {
      SyncVerdict v = is_l_synchronizing(s, w, l, depth);
      if (v.status == Verdict::Proven) out.proven.push_back(w);
      else if (v.status == Verdict::Unknown) out.unknown.push_back(w);
    }
  }
  return out;
}

SyncVerdict is_lambda_synchronizing(const Subshift& s, int depth) {
  if (depth < 1) throw InputError("search depth must be positive");
  if (is_irreducible(s, depth) == Verdict::Refuted)
    throw NotIrreducible("is_lambda_synchronizing requires an irreducible subshift");

  // S_k within length depth, per k.
  std::vector<SyncWordSets> sync_by_k(static_cast<size_t>(depth) + 1);
  for (int k = 1; k <= depth; ++k)
    sync_by_k[static_cast<size_t>(k)] = synchronizing_words(s, k, depth, depth);

  bool graph = s.has_graph();
  for (int l = 1; l <= depth; ++l) {
    std::vector<Word> level_words;
    try {
      level_words = admissible_words(s, l);
    } catch (const OracleDepthExceeded&) {
      break;
    }
    for (const Word& nu : level_words) {
      for (int k = l; k <= depth; ++k) {
        bool completed = false;
        for (const Word& mu : sync_by_k[static_cast<size_t>(k)].proven) {
          Word numu = concat(nu, mu);
          try {
            if (!is_admissible(s, numu)) continue;
            if (is_l_synchronizing(s, numu, k - l, depth).status == Verdict::Proven) {
              completed = true;
              break;
            }
          } catch (const OracleDepthExceeded&) {
            continue;
          }
        }
        if (!completed) {
          // The completing word may simply be longer than the search bound;
          // a failed bounded search refutes nothing, even for graphs, since
          // S_k was only enumerated to length `depth`.
          (void)graph;
          return {Verdict::Unknown, nu, depth};
        }
      }
    }
  }
  return {Verdict::Proven, std::nullopt, depth};
}

std::vector<PastClass> past_equivalence_classes(const Subshift& s, int l, int max_len) {
  if (l < 0) throw InputError("level must be nonnegative");
  if (max_len < 1) throw InputError("max_len must be at least 1");
  int depth;
  if (s.has_graph()) {
    int bound = subset_automaton_bound(s) + l;
    if (max_len < bound)
      throw HorizonTooSmall("past_equivalence_classes: max_len " + std::to_string(max_len) +
                            " below required horizon " + std::to_string(bound));
    depth = subset_automaton_bound(s);
  } else {
    if (l + max_len > s.oracle().max_reliable_length)
      throw OracleDepthExceeded("past-class horizon exceeds oracle bound");
    depth = s.oracle().max_reliable_length;
  }
  SyncWordSets sync = synchronizing_words(s, l, max_len, depth);
  std::map<std::vector<Word>, std::vector<Word>> by_signature;
  for (const Word& w : sync.proven) by_signature[predecessor_set(s, w, l)].push_back(w);
  std::vector<PastClass> classes;
  for (auto& [sig, members] : by_signature) {
    PastClass c;
    c.level = l;
    c.members = members;  // enumeration order is shortlex already
    c.representative = members.front();
    c.predecessor_signature = sig;
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const PastClass& a, const PastClass& b) {
    return shortlex_less(a.representative, b.representative);
  });
  return classes;
}

}  // namespace lgs
