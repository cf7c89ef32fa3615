#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgs/errors.hpp"
#include "lgs/io.hpp"
#include "lgs/lgs.hpp"
#include "lgs/orbit.hpp"
#include "lgs/sofic.hpp"
#include "lgs/subshift.hpp"
#include "lgs/sync.hpp"

namespace {

using lgs::json;

// Exit codes: 0 success/proven, 1 refuted/false, 2 unknown, 3 usage, 4 input.
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 3;
constexpr int kInput = 4;

struct Output {
  std::string format = "json";
  std::string color = "auto";  // accepted for interface stability; no effect
  std::string path;            // empty = stdout
};

void render_text(const json& j, std::ostream& os, int indent) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << pad << k << ":\n";
        render_text(v, os, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << pad << "-\n";
        render_text(v, os, indent + 1);
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Output& out, const json& j) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.path.empty() && out.path != "-") {
    file.open(out.path);
    if (!file) throw lgs::InputError("cannot open output file: " + out.path);
    os = &file;
  }
  if (out.format == "text") render_text(j, *os, 0);
  else *os << j.dump(2) << "\n";
}

int verdict_code(lgs::Verdict v) {
  switch (v) {
    case lgs::Verdict::Proven: return kPass;
    case lgs::Verdict::Refuted: return kFail;
    default: return kUnknown;
  }
}

json load_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw lgs::InputError("cannot open file: " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw lgs::InputError(std::string("json parse error: ") + e.what());
  }
}

struct SampleOptions {
  std::vector<std::string> points;
  unsigned seed = 1;
  int count = 20;
  int max_len = 4;
};

void add_sample_options(CLI::App* cmd, SampleOptions& s) {
  cmd->add_option("--point", s.points, "explicit sample point, PREFIX(CYCLE)*");
  cmd->add_option("--seed", s.seed, "seed for random samples");
  cmd->add_option("--count", s.count, "number of random samples");
  cmd->add_option("--sample-len", s.max_len, "length bound for random samples");
}

std::vector<lgs::EventuallyPeriodicPoint> resolve_samples(const lgs::Subshift& s,
                                                         const SampleOptions& opt) {
  std::vector<lgs::EventuallyPeriodicPoint> out;
  for (const auto& p : opt.points) {
    auto x = lgs::parse_point(s.alphabet(), p);
    if (!lgs::point_admissible(s, x))
      throw lgs::InadmissibleWord("sample point is not admissible: " + p);
    out.push_back(std::move(x));
  }
  if (out.empty()) out = lgs::random_points(s, opt.count, opt.seed, opt.max_len);
  return out;
}

bool all_pass(const std::vector<lgs::CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subshift synchronization, lambda-graph-system, and orbit calculus tool"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--color", out.color, "color mode")
      ->check(CLI::IsMember({"never", "auto"}));
  app.add_option("-o,--output", out.path, "output path (default stdout)");

  std::string file, file2, word, side = "pre", coe_path, pot_path, point_str, z_str, name,
              dir = ".";
  int k = 0, l = 0, depth = 8, max_len = 0, level = 0, horizon = 6, anticipation = 2,
      K = 0, f_depth = 2, cap = 24;
  long long n = 0, p = 0, q = -1;
  bool lambda_flag = false;
  SampleOptions samples;

  auto* words_cmd = app.add_subcommand("words", "admissible words of a given length");
  words_cmd->add_option("file", file)->required();
  words_cmd->add_option("--k", k, "word length")->required();

  auto* gamma_cmd = app.add_subcommand("gamma", "predecessor or follower set of a word");
  gamma_cmd->add_option("file", file)->required();
  gamma_cmd->add_option("--word", word)->required();
  gamma_cmd->add_option("--l", l, "window length")->required();
  gamma_cmd->add_option("--side", side)->check(CLI::IsMember({"pre", "post"}));

  auto* sync_cmd = app.add_subcommand("sync", "synchronizing-word verdicts");
  sync_cmd->add_option("file", file)->required();
  sync_cmd->add_option("--word", word, "check one word");
  sync_cmd->add_option("--l", l, "synchronization level");
  sync_cmd->add_option("--max-len", max_len, "enumerate words up to this length");
  sync_cmd->add_option("--depth", depth);
  sync_cmd->add_flag("--lambda", lambda_flag, "check lambda-synchronization");

  auto* classes_cmd = app.add_subcommand("classes", "past equivalence classes");
  classes_cmd->add_option("file", file)->required();
  classes_cmd->add_option("--l", l)->required();
  classes_cmd->add_option("--max-len", max_len, "enumeration horizon (0 = automatic)");

  auto* lgs_cmd = app.add_subcommand("lgs", "build the minimal lambda-graph system");
  lgs_cmd->add_option("file", file)->required();
  lgs_cmd->add_option("--level", level, "truncation level")->required();
  lgs_cmd->add_option("--depth", depth);
  lgs_cmd->add_option("--horizon", horizon, "condition (I) search horizon");

  auto* fischer_cmd = app.add_subcommand("fischer", "canonical deterministic cover");
  fischer_cmd->add_option("file", file)->required();

  auto* ahat_cmd = app.add_subcommand("ahat", "transition matrix over the hat alphabet");
  ahat_cmd->add_option("file", file)->required();

  auto* rel_cmd = app.add_subcommand("relations", "Cuntz-Krieger generator relations");
  rel_cmd->add_option("file", file)->required();

  auto* cocycle_cmd = app.add_subcommand("cocycle", "ergodic sums and groupoid cocycles");
  cocycle_cmd->add_option("file", file)->required();
  cocycle_cmd->add_option("--potential", pot_path)->required();
  cocycle_cmd->add_option("--point", point_str, "point x, PREFIX(CYCLE)*")->required();
  cocycle_cmd->add_option("--n", n, "ergodic sum length");
  cocycle_cmd->add_option("--z", z_str, "second point for a groupoid element");
  cocycle_cmd->add_option("--p", p);
  cocycle_cmd->add_option("--q", q);

  auto* psi_cmd = app.add_subcommand("psi", "transform a potential through cocycle data");
  psi_cmd->add_option("file", file, "domain subshift")->required();
  psi_cmd->add_option("file2", file2, "codomain subshift")->required();
  psi_cmd->add_option("--coe", coe_path)->required();
  psi_cmd->add_option("--potential", pot_path)->required();
  psi_cmd->add_option("--cap", cap, "output depth cap");

  auto* vcoe_cmd = app.add_subcommand("verify-coe", "check orbit-equivalence cocycle data");
  vcoe_cmd->add_option("file", file)->required();
  vcoe_cmd->add_option("file2", file2)->required();
  vcoe_cmd->add_option("--coe", coe_path)->required();
  add_sample_options(vcoe_cmd, samples);

  auto* vev_cmd = app.add_subcommand("verify-eventual", "check eventual-conjugacy data");
  vev_cmd->add_option("file", file)->required();
  vev_cmd->add_option("file2", file2)->required();
  vev_cmd->add_option("--coe", coe_path)->required();
  vev_cmd->add_option("--K", K)->required();
  add_sample_options(vev_cmd, samples);

  auto* force_cmd = app.add_subcommand("force", "does the data force a conjugacy?");
  force_cmd->add_option("file", file)->required();
  force_cmd->add_option("file2", file2)->required();
  force_cmd->add_option("--coe", coe_path)->required();
  force_cmd->add_option("--f-depth", f_depth, "indicator family depth");
  add_sample_options(force_cmd, samples);

  auto* fc_cmd = app.add_subcommand("find-conj", "search for a sliding-block conjugacy");
  fc_cmd->add_option("file", file)->required();
  fc_cmd->add_option("file2", file2)->required();
  fc_cmd->add_option("--max-anticipation", anticipation);

  auto* ex_cmd = app.add_subcommand("examples", "emit built-in subshift files");
  ex_cmd->add_option("--dir", dir, "directory to write into");
  ex_cmd->add_option("--name", name, "print one example to stdout instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (words_cmd->parsed()) {
      auto s = lgs::load_subshift(file);
      emit(out, lgs::words_to_json(s.alphabet(), lgs::admissible_words(s, k)));
      return kPass;
    }
    if (gamma_cmd->parsed()) {
      auto s = lgs::load_subshift(file);
      lgs::Word mu = s.alphabet().parse(word);
      auto set = side == "pre" ? lgs::predecessor_set(s, mu, l) : lgs::follower_set(s, mu, l);
      emit(out, lgs::words_to_json(s.alphabet(), set));
      return kPass;
    }
    if (sync_cmd->parsed()) {
      auto s = lgs::load_subshift(file);
      if (!word.empty()) {
        auto v = lgs::is_l_synchronizing(s, s.alphabet().parse(word), l, depth);
        emit(out, lgs::sync_verdict_to_json(s.alphabet(), v));
        return verdict_code(v.status);
      }
      if (lambda_flag) {
        auto v = lgs::is_lambda_synchronizing(s, depth);
        emit(out, lgs::sync_verdict_to_json(s.alphabet(), v));
        return verdict_code(v.status);
      }
      if (max_len < 1) throw lgs::InputError("sync enumeration needs --max-len");
      auto sets = lgs::synchronizing_words(s, l, max_len, depth);
      json j;
      j["proven"] = lgs::words_to_json(s.alphabet(), sets.proven);
      j["unknown"] = lgs::words_to_json(s.alphabet(), sets.unknown);
      emit(out, j);
      return kPass;
    }
    if (classes_cmd->parsed()) {
      auto s = lgs::load_subshift(file);
      int horizon_eff = max_len;
      if (horizon_eff == 0 && s.has_graph())
        horizon_eff = lgs::subset_automaton_bound(s) + l;
      emit(out, lgs::past_classes_to_json(
                    s.alphabet(), lgs::past_equivalence_classes(s, l, horizon_eff)));
      return kPass;
    }
    if (lgs_cmd->parsed()) {
      auto s = lgs::load_subshift(file);
      auto g = lgs::build_minimal_lgs(s, level, depth);
      auto t = lgs::transition_matrices(g);
      bool lr = lgs::check_left_resolving(g);
      bool ps = lgs::check_predecessor_separated(g);
      bool comp = lgs::check_compatibility(t);
      auto cond = lgs::check_condition_I(g, horizon);
      json j;
      j["system"] = lgs::lgs_to_json(g);
      j["matrices"] = lgs::matrices_to_json(t);
      j["predicates"]["left_resolving"] = lr;
      j["predicates"]["predecessor_separated"] = ps;
      j["predicates"]["compatibility"] = comp;
      j["predicates"]["condition_I"] = lgs::to_string(cond);
      emit(out, j);
      if (!lr || !ps || !comp || cond == lgs::Verdict::Refuted) return kFail;
      return cond == lgs::Verdict::Proven ? kPass : kUnknown;
    }
    if (fischer_cmd->parsed()) {
      auto s = lgs::load_subshift(file);
      emit(out, lgs::fischer_to_json(lgs::fischer_cover(s)));
      return kPass;
    }
    if (ahat_cmd->parsed()) {
      auto s = lgs::load_subshift(file);
      auto f = lgs::fischer_cover(s);
      emit(out, lgs::hat_matrix_to_json(f, lgs::hat_matrix(f)));
      return kPass;
    }
    if (rel_cmd->parsed()) {
      auto s = lgs::load_subshift(file);
      emit(out, lgs::ck_relations_to_json(lgs::fischer_cover(s)));
      return kPass;
    }
    if (cocycle_cmd->parsed()) {
      auto s = lgs::load_subshift(file);
      auto f = lgs::potential_from_json(s.alphabet(), load_json(pot_path));
      auto x = lgs::parse_point(s.alphabet(), point_str);
      if (!lgs::point_admissible(s, x))
        throw lgs::InadmissibleWord("point is not admissible: " + point_str);
      json j;
      if (z_str.empty()) {
        j["value"] = lgs::ergodic_sum(f, x, n);
      } else {
        auto z = lgs::parse_point(s.alphabet(), z_str);
        if (!lgs::point_admissible(s, z))
          throw lgs::InadmissibleWord("point is not admissible: " + z_str);
        if (q < 0) throw lgs::InputError("groupoid evaluation needs --p and --q");
        j["value"] = lgs::groupoid_cocycle(f, {x, z, p, q});
      }
      emit(out, j);
      return kPass;
    }
    if (psi_cmd->parsed()) {
      auto s1 = lgs::load_subshift(file);
      auto s2 = lgs::load_subshift(file2);
      auto d = lgs::coe_from_json(s1.alphabet(), s2.alphabet(), load_json(coe_path));
      auto f = lgs::potential_from_json(s2.alphabet(), load_json(pot_path));
      emit(out, lgs::potential_to_json(s1.alphabet(),
                                       lgs::psi_transform(d, f, s1, s2, cap)));
      return kPass;
    }
    if (vcoe_cmd->parsed()) {
      auto s1 = lgs::load_subshift(file);
      auto s2 = lgs::load_subshift(file2);
      auto d = lgs::coe_from_json(s1.alphabet(), s2.alphabet(), load_json(coe_path));
      auto results = lgs::verify_coe_data(d, s1, s2, resolve_samples(s1, samples));
      emit(out, lgs::check_results_to_json(results));
      return all_pass(results) ? kPass : kFail;
    }
    if (vev_cmd->parsed()) {
      auto s1 = lgs::load_subshift(file);
      auto s2 = lgs::load_subshift(file2);
      auto j = load_json(coe_path);
      auto h = lgs::PointTransform::from_code(
          lgs::code_from_json(s1.alphabet(), s2.alphabet(), j.at("h")));
      std::optional<lgs::PointTransform> hi;
      if (j.contains("h_inv"))
        hi = lgs::PointTransform::from_code(
            lgs::code_from_json(s2.alphabet(), s1.alphabet(), j.at("h_inv")));
      auto results =
          lgs::verify_eventual_conjugacy(h, hi, K, s1, s2, resolve_samples(s1, samples));
      emit(out, lgs::check_results_to_json(results));
      return all_pass(results) ? kPass : kFail;
    }
    if (force_cmd->parsed()) {
      auto s1 = lgs::load_subshift(file);
      auto s2 = lgs::load_subshift(file2);
      auto d = lgs::coe_from_json(s1.alphabet(), s2.alphabet(), load_json(coe_path));
      auto report = lgs::forcing_check(d, s1, s2, f_depth, resolve_samples(s1, samples));
      emit(out, lgs::forcing_report_to_json(report));
      if (report.verdict == lgs::ForcingStatus::Forced) return kPass;
      if (report.verdict == lgs::ForcingStatus::NotForced) return kFail;
      return kUnknown;
    }
    if (fc_cmd->parsed()) {
      auto s1 = lgs::load_subshift(file);
      auto s2 = lgs::load_subshift(file2);
      auto h = lgs::find_conjugacy(s1, s2, anticipation);
      json j;
      j["found"] = h.has_value();
      if (h) {
        j["code"] = lgs::code_to_json(s1.alphabet(), s2.alphabet(), *h);
      } else {
        json counts = json::array();
        for (int kk = 1; kk <= 3; ++kk)
          counts.push_back({{"k", kk},
                            {"left", static_cast<int>(lgs::admissible_words(s1, kk).size())},
                            {"right", static_cast<int>(lgs::admissible_words(s2, kk).size())}});
        j["word_counts"] = std::move(counts);
      }
      emit(out, j);
      return h ? kPass : kFail;
    }
    if (ex_cmd->parsed()) {
      if (!name.empty()) {
        emit(out, lgs::example_subshift(name));
        return kPass;
      }
      json written = json::array();
      for (const auto& ex : lgs::example_names()) {
        std::string path = dir + "/" + ex + ".json";
        std::ofstream os(path);
        if (!os) throw lgs::InputError("cannot write " + path);
        os << lgs::example_subshift(ex).dump(2) << "\n";
        written.push_back(path);
      }
      emit(out, written);
      return kPass;
    }
  } catch (const lgs::Error& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return kInput;
  } catch (const json::exception& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return kInput;
  }
  return kUsage;
}
