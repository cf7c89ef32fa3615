#ifndef LGS_ORBIT_HPP
#define LGS_ORBIT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgs/subshift.hpp"
#include "lgs/word.hpp"

namespace lgs {

// One-sided eventually periodic point u·v^∞ in normal form: the cycle is
// primitive and the prefix is as short as possible (its last letter differs
// from the aligned cycle letter). Normal forms are unique, so equality of
// points is equality of fields.
struct EventuallyPeriodicPoint {
  Word prefix;
  Word cycle;

  bool operator==(const EventuallyPeriodicPoint&) const = default;
  bool operator<(const EventuallyPeriodicPoint& o) const {
    return prefix != o.prefix ? prefix < o.prefix : cycle < o.cycle;
  }
};

// Normalizes; the cycle must be nonempty.
EventuallyPeriodicPoint make_point(Word prefix, Word cycle);

// Letter at 0-based position i.
Symbol point_at(const EventuallyPeriodicPoint& x, long long i);

// Finite window x_[from, from+len).
Word point_window(const EventuallyPeriodicPoint& x, long long from, int len);

// Admissibility of the whole infinite sequence (tail-cycle analysis for
// graph presentations; truncated check for oracles).
bool point_admissible(const Subshift& s, const EventuallyPeriodicPoint& x);

EventuallyPeriodicPoint shift_point(const EventuallyPeriodicPoint& x);
EventuallyPeriodicPoint shift_point_n(EventuallyPeriodicPoint x, long long n);

std::string format_point(const Alphabet& a, const EventuallyPeriodicPoint& x);
EventuallyPeriodicPoint parse_point(const Alphabet& a, const std::string& text);

// (h x)_k = block_map(x_[k, k+anticipation]): a continuous shift-commuting
// map between one-sided shift spaces.
struct SlidingBlockCode {
  int anticipation = 0;
  std::map<Word, Symbol> block_map;
};

EventuallyPeriodicPoint apply_code(const SlidingBlockCode& h, const EventuallyPeriodicPoint& x);

// Image of a word under h; the output is shorter by the anticipation.
Word apply_code_word(const SlidingBlockCode& h, const Word& w);

// Locally constant integer function f(x) = table(x_[0, depth)).
struct CylinderPotential {
  int depth = 1;
  std::map<Word, long long> table;
};

long long potential_value(const CylinderPotential& f, const EventuallyPeriodicPoint& x);

// f^n(x) = Σ_{i=0}^{n-1} f(σ^i x); f^0 = 0.
long long ergodic_sum(const CylinderPotential& f, const EventuallyPeriodicPoint& x, long long n);

// Potentials compared as functions on the shift space.
bool potential_equal(const Subshift& s, const CylinderPotential& f, const CylinderPotential& g);

// Groupoid element (x, p-q, z) with σ^p(x) = σ^q(z).
struct GroupoidElement {
  EventuallyPeriodicPoint x;
  EventuallyPeriodicPoint z;
  long long p = 0;
  long long q = 0;
};

// f_G(x, p-q, z) = f^p(x) - f^q(z); validates the defining equality.
long long groupoid_cocycle(const CylinderPotential& f, const GroupoidElement& g);

// Homeomorphism-shaped map on points. Sliding block codes are the
// table-representable case; arbitrary point maps cover non-shift-commuting
// homeomorphisms on sampled points only.
struct PointTransform {
  std::optional<SlidingBlockCode> code;
  std::function<EventuallyPeriodicPoint(const EventuallyPeriodicPoint&)> fn;

  static PointTransform from_code(SlidingBlockCode c);
  EventuallyPeriodicPoint operator()(const EventuallyPeriodicPoint& x) const { return fn(x); }
};

// Orbit-equivalence data: h with cocycle exponents k1,l1 (forward) and
// k2,l2 (inverse side, used only when h_inv is present).
struct CoeData {
  PointTransform h;
  std::optional<PointTransform> h_inv;
  CylinderPotential k1, l1;
  CylinderPotential k2, l2;
};

struct CheckResult {
  std::string sample;
  std::string check;
  bool pass = true;
  std::string witness;
};

// Ψ(f)(a) = Σ_{i=0}^{l1(a)} f(σ^i h a) − Σ_{j=0}^{k1(a)} f(σ^j h σ a),
// tabulated exactly (h must be a sliding block code).
CylinderPotential psi_transform(const CoeData& d, const CylinderPotential& f,
                                const Subshift& s1, const Subshift& s2, int depth_cap = 24);

// Pointwise Ψ(f)(a) for arbitrary point transforms.
long long psi_value(const CoeData& d, const CylinderPotential& f,
                    const EventuallyPeriodicPoint& a);

// Checks σ2^{k1(a)}(h(σ1 a)) = σ2^{l1(a)}(h(a)) on each sample, plus the
// inverse-side equality at b = h(a) when h_inv is present.
std::vector<CheckResult> verify_coe_data(const CoeData& d, const Subshift& s1,
                                         const Subshift& s2,
                                         const std::vector<EventuallyPeriodicPoint>& samples);

enum class ForcingStatus { Forced, NotForced, Inconclusive };

struct ForcingSample {
  std::string sample;
  ForcingStatus status = ForcingStatus::Inconclusive;
  std::string detail;
};

struct ForcingReport {
  ForcingStatus verdict = ForcingStatus::Inconclusive;
  std::vector<ForcingSample> samples;
};

// Indicator-family check that the cocycle data forces σ2∘h = h∘σ1.
ForcingReport forcing_check(const CoeData& d, const Subshift& s1, const Subshift& s2,
                            int f_depth, const std::vector<EventuallyPeriodicPoint>& samples);

std::optional<SlidingBlockCode> find_conjugacy(const Subshift& s1, const Subshift& s2,
                                               int max_anticipation,
                                               long long search_cap = 2'000'000);

bool verify_conjugacy(const SlidingBlockCode& h, const Subshift& s1, const Subshift& s2,
                      int horizon);

// Checks σ2^K(h(σ1 a)) = σ2^{K+1}(h(a)) on samples, and the symmetric
// equality through h_inv when present.
std::vector<CheckResult> verify_eventual_conjugacy(
    const PointTransform& h, const std::optional<PointTransform>& h_inv, int K,
    const Subshift& s1, const Subshift& s2,
    const std::vector<EventuallyPeriodicPoint>& samples);

// Deterministic seeded sample of admissible eventually periodic points.
std::vector<EventuallyPeriodicPoint> random_points(const Subshift& s, int count,
                                                   unsigned seed, int max_len);

// Deterministic seeded cylinder potentials with values in [lo, hi].
std::vector<CylinderPotential> random_potentials(const Subshift& s, int count, int depth,
                                                 unsigned seed, int lo, int hi);

}  // namespace lgs

#endif
