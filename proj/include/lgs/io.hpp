#ifndef LGS_IO_HPP
#define LGS_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "lgs/lgs.hpp"
#include "lgs/orbit.hpp"
#include "lgs/sofic.hpp"
#include "lgs/subshift.hpp"
#include "lgs/sync.hpp"

namespace lgs {

using nlohmann::json;

// { "kind": "sft"|"sofic"|"oracle", "alphabet": [...], and one of
//   "matrix": [[0,1],...],
//   "graph": {"vertices": [...], "edges": [["v","a","w"], ...]},
//   "oracle": {"name": ..., "max_reliable_length": d} }
Subshift subshift_from_json(const json& j);
Subshift load_subshift(const std::string& path);  // "-" reads stdin

json words_to_json(const Alphabet& a, const std::vector<Word>& words);
json sync_verdict_to_json(const Alphabet& a, const SyncVerdict& v);
json past_classes_to_json(const Alphabet& a, const std::vector<PastClass>& classes);

json lgs_to_json(const LambdaGraphSystem& g);
json matrices_to_json(const TransitionMatrixSystem& t);
json projection_expansion_to_json(const Alphabet& a, const ProjectionExpansion& e);

json fischer_to_json(const FischerCover& f);
json hat_matrix_to_json(const FischerCover& f, const HatMatrix& m);

// Generators and relations of the Cuntz-Krieger presentation attached to a
// deterministic cover, as symbolic data.
json ck_relations_to_json(const FischerCover& f);

json check_results_to_json(const std::vector<CheckResult>& results);
json forcing_report_to_json(const ForcingReport& r);

SlidingBlockCode code_from_json(const Alphabet& a1, const Alphabet& a2, const json& j);
json code_to_json(const Alphabet& a1, const Alphabet& a2, const SlidingBlockCode& h);
CylinderPotential potential_from_json(const Alphabet& a, const json& j);
json potential_to_json(const Alphabet& a, const CylinderPotential& f);

// {"h": {...}, "h_inv": {...}?, "k1": {...}, "l1": {...}, "k2": {...}?, "l2": {...}?}
CoeData coe_from_json(const Alphabet& a1, const Alphabet& a2, const json& j);

// Built-in example subshift documents, keyed by name:
// golden, even, full2, dyck2, beta-golden.
std::vector<std::string> example_names();
json example_subshift(const std::string& name);

}  // namespace lgs

#endif
