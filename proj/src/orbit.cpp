#include "lgs/orbit.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "lgs/errors.hpp"

namespace lgs {

namespace {

Word rotate_right(Word v) {
  if (v.size() > 1) std::rotate(v.begin(), v.end() - 1, v.end());
  return v;
}

Word rotate_left(Word v) {
  if (v.size() > 1) std::rotate(v.begin(), v.begin() + 1, v.end());
  return v;
}

Word primitive_root(const Word& v) {
  const int n = static_cast<int>(v.size());
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool power = true;
    for (int i = d; i < n && power; ++i) power = v[static_cast<size_t>(i)] == v[static_cast<size_t>(i % d)];
    if (power) return Word(v.begin(), v.begin() + d);
  }
  return v;
}

}  // namespace

EventuallyPeriodicPoint make_point(Word prefix, Word cycle) {
  if (cycle.empty()) throw InputError("point cycle must be nonempty");
  cycle = primitive_root(cycle);
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    cycle = rotate_right(std::move(cycle));
  }
  return {std::move(prefix), std::move(cycle)};
}

Symbol point_at(const EventuallyPeriodicPoint& x, long long i) {
  if (i < 0) throw InputError("point position must be nonnegative");
  const long long m = static_cast<long long>(x.prefix.size());
  if (i < m) return x.prefix[static_cast<size_t>(i)];
  return x.cycle[static_cast<size_t>((i - m) % static_cast<long long>(x.cycle.size()))];
}

Word point_window(const EventuallyPeriodicPoint& x, long long from, int len) {
  Word w;
  w.reserve(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) w.push_back(point_at(x, from + i));
  return w;
}

bool point_admissible(const Subshift& s, const EventuallyPeriodicPoint& x) {
  for (Symbol a : x.prefix)
    if (a < 0 || a >= s.alphabet().size()) return false;
  for (Symbol a : x.cycle)
    if (a < 0 || a >= s.alphabet().size()) return false;
  if (s.has_graph()) {
    const auto& aut = s.automaton();
    GraphAutomaton::Mask m = aut.end_set(x.prefix);
    if (m == 0) return false;
    std::set<GraphAutomaton::Mask> seen{m};
    while (true) {
      for (Symbol a : x.cycle) {
        m = aut.post(m, a);
        if (m == 0) return false;
      }
      if (!seen.insert(m).second) return true;
    }
  }
  const int bound = s.oracle().max_reliable_length;
  return is_admissible(s, point_window(x, 0, bound));
}

EventuallyPeriodicPoint shift_point(const EventuallyPeriodicPoint& x) {
  if (!x.prefix.empty())
    return make_point(Word(x.prefix.begin() + 1, x.prefix.end()), x.cycle);
  return make_point({}, rotate_left(x.cycle));
}

EventuallyPeriodicPoint shift_point_n(EventuallyPeriodicPoint x, long long n) {
  if (n < 0) throw InputError("shift count must be nonnegative");
  // Skip the prefix in one step, then shift inside the cycle by rotation.
  long long m = static_cast<long long>(x.prefix.size());
  if (n <= m) {
    for (long long i = 0; i < n; ++i) x = shift_point(x);
    return x;
  }
  Word cycle = x.cycle;
  long long r = (n - m) % static_cast<long long>(cycle.size());
  std::rotate(cycle.begin(), cycle.begin() + r, cycle.end());
  return make_point({}, std::move(cycle));
}

std::string format_point(const Alphabet& a, const EventuallyPeriodicPoint& x) {
  return a.format(x.prefix) + "(" + a.format(x.cycle) + ")*";
}

EventuallyPeriodicPoint parse_point(const Alphabet& a, const std::string& text) {
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw InputError("point syntax is PREFIX(CYCLE)*");
  return make_point(a.parse(text.substr(0, open)),
                    a.parse(text.substr(open + 1, close - open - 1)));
}

Word apply_code_word(const SlidingBlockCode& h, const Word& w) {
  const int n = h.anticipation;
  Word out;
  for (size_t k = 0; k + static_cast<size_t>(n) < w.size(); ++k) {
    Word window(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + n + 1);
    auto it = h.block_map.find(window);
    if (it == h.block_map.end())
      throw InadmissibleWord("block map undefined on a window");
    out.push_back(it->second);
  }
  return out;
}

EventuallyPeriodicPoint apply_code(const SlidingBlockCode& h, const EventuallyPeriodicPoint& x) {
  const int n = h.anticipation;
  const int m = static_cast<int>(x.prefix.size());
  const int c = static_cast<int>(x.cycle.size());
  Word source = point_window(x, 0, m + c + n);
  Word image = apply_code_word(h, source);  // length m + c
  return make_point(Word(image.begin(), image.begin() + m),
                    Word(image.begin() + m, image.end()));
}

long long potential_value(const CylinderPotential& f, const EventuallyPeriodicPoint& x) {
  auto it = f.table.find(point_window(x, 0, f.depth));
  if (it == f.table.end())
    throw InadmissibleWord("potential table undefined on the point's window");
  return it->second;
}

long long ergodic_sum(const CylinderPotential& f, const EventuallyPeriodicPoint& x, long long n) {
  if (n < 0) throw InputError("ergodic sum length must be nonnegative");
  long long acc = 0;
  for (long long i = 0; i < n; ++i) {
    auto it = f.table.find(point_window(x, i, f.depth));
    if (it == f.table.end())
      throw InadmissibleWord("potential table undefined on a shifted window");
    acc += it->second;
  }
  return acc;
}

bool potential_equal(const Subshift& s, const CylinderPotential& f, const CylinderPotential& g) {
  const int d = std::max(f.depth, g.depth);
  for (const Word& w : admissible_words(s, d)) {
    auto fi = f.table.find(Word(w.begin(), w.begin() + f.depth));
    auto gi = g.table.find(Word(w.begin(), w.begin() + g.depth));
    if (fi == f.table.end() || gi == g.table.end()) return false;
    if (fi->second != gi->second) return false;
  }
  return true;
}

long long groupoid_cocycle(const CylinderPotential& f, const GroupoidElement& g) {
  if (!(shift_point_n(g.x, g.p) == shift_point_n(g.z, g.q)))
    throw InputError("not a groupoid element: the points disagree after shifting");
  return ergodic_sum(f, g.x, g.p) - ergodic_sum(f, g.z, g.q);
}

PointTransform PointTransform::from_code(SlidingBlockCode c) {
  PointTransform t;
  t.code = c;
  t.fn = [code = std::move(c)](const EventuallyPeriodicPoint& x) {
    return apply_code(code, x);
  };
  return t;
}

long long psi_value(const CoeData& d, const CylinderPotential& f,
                    const EventuallyPeriodicPoint& a) {
  long long l1v = potential_value(d.l1, a);
  long long k1v = potential_value(d.k1, a);
  EventuallyPeriodicPoint ha = d.h(a);
  EventuallyPeriodicPoint hsa = d.h(shift_point(a));
  return ergodic_sum(f, ha, l1v + 1) - ergodic_sum(f, hsa, k1v + 1);
}

CylinderPotential psi_transform(const CoeData& d, const CylinderPotential& f,
                                const Subshift& s1, const Subshift& s2, int depth_cap) {
  (void)s2;
  if (!d.h.code)
    throw InputError("psi_transform requires a sliding-block-code h");
  const SlidingBlockCode& code = *d.h.code;
  long long maxl1 = 0, maxk1 = 0;
  for (const auto& [w, v] : d.l1.table) maxl1 = std::max(maxl1, v);
  for (const auto& [w, v] : d.k1.table) maxk1 = std::max(maxk1, v);
  int dp = f.depth + code.anticipation + static_cast<int>(maxl1 + maxk1) + 1;
  dp = std::max({dp, d.l1.depth, d.k1.depth + 1});
  if (dp > depth_cap)
    throw DepthOverflow("psi output depth " + std::to_string(dp) + " exceeds cap " +
                        std::to_string(depth_cap));
  CylinderPotential out;
  out.depth = dp;
  for (const Word& w : admissible_words(s1, dp)) {
    long long l1v = d.l1.table.at(Word(w.begin(), w.begin() + d.l1.depth));
    long long k1v = d.k1.table.at(Word(w.begin() + 1, w.begin() + 1 + d.k1.depth));
    Word y = apply_code_word(code, w);
    long long acc = 0;
    for (long long i = 0; i <= l1v; ++i) {
      acc += f.table.at(Word(y.begin() + i, y.begin() + i + f.depth));
    }
    for (long long j = 0; j <= k1v; ++j) {
      acc -= f.table.at(Word(y.begin() + 1 + j, y.begin() + 1 + j + f.depth));
    }
    out.table.emplace(w, acc);
  }
  return out;
}

namespace {

void require_nonnegative(const CylinderPotential& f, const char* name) {
  for (const auto& [w, v] : f.table)
    if (v < 0) throw InputError(std::string("cocycle potential ") + name + " has a negative value");
}

}  // namespace

std::vector<CheckResult> verify_coe_data(const CoeData& d, const Subshift& s1,
                                         const Subshift& s2,
                                         const std::vector<EventuallyPeriodicPoint>& samples) {
  require_nonnegative(d.k1, "k1");
  require_nonnegative(d.l1, "l1");
  if (d.h_inv) {
    require_nonnegative(d.k2, "k2");
    require_nonnegative(d.l2, "l2");
  }
  std::vector<CheckResult> out;
  for (const auto& a : samples) {
    if (!point_admissible(s1, a))
      throw InadmissibleWord("sample point is not admissible");
    std::string name = format_point(s1.alphabet(), a);
    EventuallyPeriodicPoint ha = d.h(a);
    EventuallyPeriodicPoint hsa = d.h(shift_point(a));
    auto lhs = shift_point_n(hsa, potential_value(d.k1, a));
    auto rhs = shift_point_n(ha, potential_value(d.l1, a));
    bool pass = lhs == rhs;
    out.push_back({name, "forward-cocycle", pass,
                   pass ? "" : format_point(s2.alphabet(), lhs) + " != " +
                                   format_point(s2.alphabet(), rhs)});
    if (d.h_inv) {
      const auto& hi = *d.h_inv;
      EventuallyPeriodicPoint b = ha;
      auto lhs2 = shift_point_n(hi(shift_point(b)), potential_value(d.k2, b));
      auto rhs2 = shift_point_n(hi(b), potential_value(d.l2, b));
      bool pass2 = lhs2 == rhs2;
      out.push_back({name, "inverse-cocycle", pass2,
                     pass2 ? "" : format_point(s1.alphabet(), lhs2) + " != " +
                                      format_point(s1.alphabet(), rhs2)});
    }
  }
  return out;
}

ForcingReport forcing_check(const CoeData& d, const Subshift& s1, const Subshift& s2,
                            int f_depth, const std::vector<EventuallyPeriodicPoint>& samples) {
  if (f_depth < 1) throw InputError("indicator depth must be positive");
  ForcingReport report;
  bool any_forced = false, any_not_forced = false, any_open = false;
  std::vector<std::vector<Word>> words_by_depth;
  for (int t = 1; t <= f_depth; ++t) words_by_depth.push_back(admissible_words(s2, t));

  for (const auto& a : samples) {
    ForcingSample entry;
    entry.sample = format_point(s1.alphabet(), a);
    if (shift_point(a) == a) {
      // carries no information either way: skip without blocking a verdict
      entry.status = ForcingStatus::Inconclusive;
      entry.detail = "fixed point: degenerate sample, nothing is forced";
      report.samples.push_back(std::move(entry));
      continue;
    }
    EventuallyPeriodicPoint ha = d.h(a);
    EventuallyPeriodicPoint hsa = d.h(shift_point(a));
    bool violated = false;
    for (int t = 1; t <= f_depth && !violated; ++t) {
      for (const Word& w : words_by_depth[static_cast<size_t>(t - 1)]) {
        CylinderPotential ind;
        ind.depth = t;
        for (const Word& u : words_by_depth[static_cast<size_t>(t - 1)]) ind.table[u] = 0;
        ind.table[w] = 1;
        long long lhs = psi_value(d, ind, a);
        long long rhs = point_window(ha, 0, t) == w ? 1 : 0;
        if (lhs != rhs) {
          entry.status = ForcingStatus::NotForced;
          entry.detail = "indicator [" + s2.alphabet().format(w) + "]: psi gives " +
                         std::to_string(lhs) + ", f(h(a)) gives " + std::to_string(rhs);
          violated = true;
          break;
        }
      }
    }
    if (violated) {
      any_not_forced = true;
      report.samples.push_back(std::move(entry));
      continue;
    }
    long long l1v = potential_value(d.l1, a);
    long long k1v = potential_value(d.k1, a);
    std::set<EventuallyPeriodicPoint> B, D;
    for (long long i = 1; i <= l1v - 1; ++i) B.insert(shift_point_n(ha, i));
    for (long long j = 0; j <= k1v - 1; ++j) D.insert(shift_point_n(hsa, j));
    if (shift_point(ha) == hsa) {
      entry.status = ForcingStatus::Forced;
      entry.detail = "sigma(h(a)) = h(sigma(a)) holds directly";
      any_forced = true;
    } else {
      entry.status = ForcingStatus::Inconclusive;
      std::string pq;
      for (long long p = 0; p <= k1v - 1 && pq.empty(); ++p)
        if (shift_point(ha) == shift_point_n(hsa, p))
          for (long long q = 1; q <= l1v - 1; ++q)
            if (hsa == shift_point_n(ha, q)) {
              pq = " with (p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")";
              break;
            }
      entry.detail = std::string(B == D ? "pass" : "fail") +
                     " on the orbit-set comparison; eventually periodic escape" + pq;
      any_open = true;
    }
    report.samples.push_back(std::move(entry));
  }
  if (any_not_forced) report.verdict = ForcingStatus::NotForced;
  else if (any_forced && !any_open) report.verdict = ForcingStatus::Forced;
  else report.verdict = ForcingStatus::Inconclusive;
  return report;
}

bool verify_conjugacy(const SlidingBlockCode& h, const Subshift& s1, const Subshift& s2,
                      int horizon) {
  const int n = h.anticipation;
  horizon = std::max(horizon, n + 2);
  std::set<Word> images;
  try {
    for (const Word& w : admissible_words(s1, horizon)) {
      Word y = apply_code_word(h, w);
      if (!is_admissible(s2, y)) return false;
      images.insert(std::move(y));
    }
  } catch (const InadmissibleWord&) {
    return false;  // block map not total on the admissible windows
  }
  auto expected = admissible_words(s2, horizon - n);
  if (images != std::set<Word>(expected.begin(), expected.end())) return false;
  // Decodability: some lookahead m lets the image window determine the first
  // source letter; this yields an inverse block code, hence injectivity.
  for (int m = 0; m + n + 1 <= horizon; ++m) {
    std::map<Word, Symbol> decode;
    bool consistent = true;
    for (const Word& u : admissible_words(s1, m + n + 1)) {
      Word y = apply_code_word(h, u);
      auto [it, fresh] = decode.emplace(y, u.front());
      if (!fresh && it->second != u.front()) {
        consistent = false;
        break;
      }
    }
    if (consistent) return true;
  }
  return false;
}

std::optional<SlidingBlockCode> find_conjugacy(const Subshift& s1, const Subshift& s2,
                                               int max_anticipation, long long search_cap) {
  if (max_anticipation < 0) throw InputError("max anticipation must be nonnegative");
  for (int n = 0; n <= max_anticipation; ++n) {
    auto domain = admissible_words(s1, n + 1);
    const int nsym = s2.alphabet().size();
    long long combos = 1;
    for (size_t i = 0; i < domain.size(); ++i) {
      combos *= nsym;
      if (combos > search_cap)
        throw SearchSpaceTooLarge("block-map search space exceeds cap at anticipation " +
                                  std::to_string(n));
    }
    std::vector<int> assign(domain.size(), 0);
    while (true) {
      SlidingBlockCode h;
      h.anticipation = n;
      for (size_t i = 0; i < domain.size(); ++i) h.block_map[domain[i]] = assign[i];
      if (verify_conjugacy(h, s1, s2, 2 * (n + 2))) return h;
      size_t i = 0;
      while (i < assign.size() && ++assign[i] == nsym) assign[i++] = 0;
      if (i == assign.size()) break;
    }
  }
  return std::nullopt;
}

std::vector<CheckResult> verify_eventual_conjugacy(
    const PointTransform& h, const std::optional<PointTransform>& h_inv, int K,
    const Subshift& s1, const Subshift& s2,
    const std::vector<EventuallyPeriodicPoint>& samples) {
  if (K < 0) throw InputError("K must be nonnegative");
  std::vector<CheckResult> out;
  for (const auto& a : samples) {
    if (!point_admissible(s1, a))
      throw InadmissibleWord("sample point is not admissible");
    std::string name = format_point(s1.alphabet(), a);
    EventuallyPeriodicPoint ha = h(a);
    auto lhs = shift_point_n(h(shift_point(a)), K);
    auto rhs = shift_point_n(ha, K + 1);
    bool pass = lhs == rhs;
    out.push_back({name, "forward-eventual", pass,
                   pass ? "" : format_point(s2.alphabet(), lhs) + " != " +
                                   format_point(s2.alphabet(), rhs)});
    if (h_inv) {
      const auto& hi = *h_inv;
      auto lhs2 = shift_point_n(hi(shift_point(ha)), K);
      auto rhs2 = shift_point_n(hi(ha), K + 1);
      bool pass2 = lhs2 == rhs2;
      out.push_back({name, "inverse-eventual", pass2,
                     pass2 ? "" : format_point(s1.alphabet(), lhs2) + " != " +
                                      format_point(s1.alphabet(), rhs2)});
    }
  }
  return out;
}

std::vector<EventuallyPeriodicPoint> random_points(const Subshift& s, int count,
                                                   unsigned seed, int max_len) {
  if (count < 0 || max_len < 1) throw InputError("invalid sampling parameters");
  std::mt19937 gen(seed);
  std::vector<EventuallyPeriodicPoint> out;
  long long attempts = 0;
  const long long attempt_cap = 20000LL * (count + 1);
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > attempt_cap)
      throw InputError("point sampling failed to converge");
    int plen = static_cast<int>(gen() % static_cast<unsigned>(max_len + 1));
    int clen = 1 + static_cast<int>(gen() % static_cast<unsigned>(max_len));
    Word stem;
    bool dead = false;
    for (int i = 0; i < plen + clen && !dead; ++i) {
      std::vector<Symbol> options;
      for (Symbol a = 0; a < s.alphabet().size(); ++a) {
        Word ext = stem;
        ext.push_back(a);
        if (is_admissible(s, ext)) options.push_back(a);
      }
      if (options.empty()) dead = true;
      else stem.push_back(options[gen() % options.size()]);
    }
    if (dead) continue;
    EventuallyPeriodicPoint x = make_point(Word(stem.begin(), stem.begin() + plen),
                                           Word(stem.begin() + plen, stem.end()));
    if (point_admissible(s, x)) out.push_back(std::move(x));
  }
  return out;
}

std::vector<CylinderPotential> random_potentials(const Subshift& s, int count, int depth,
                                                 unsigned seed, int lo, int hi) {
  if (count < 0 || depth < 1 || lo > hi) throw InputError("invalid potential parameters");
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  auto words = admissible_words(s, depth);
  std::vector<CylinderPotential> out;
  for (int c = 0; c < count; ++c) {
    CylinderPotential f;
    f.depth = depth;
    for (const Word& w : words) f.table[w] = dist(gen);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace lgs
