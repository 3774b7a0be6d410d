// Command-line front end: distance-bound calculators, code constructions,
// exact code audits, locality-profile optimization, and seeded erasure
// simulation over a shared JSON code format.
//
// Exit codes: 0 success, 2 precondition/validation failure, 3 oracle
// budget exceeded. Budgets can be overridden with the environment
// variables ULRC_RANK_BUDGET, ULRC_DUAL_BUDGET, and ULRC_ENUM_BUDGET.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ulrc/bounds.hpp"
#include "ulrc/constructions.hpp"
#include "ulrc/profile_opt.hpp"
#include "ulrc/serialization.hpp"
#include "ulrc/simulation.hpp"

namespace {

using nlohmann::json;
using namespace ulrc;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;

std::vector<int> parse_counts(const std::string& text, const char* what) {
  std::vector<int> counts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      counts.push_back(v);
    } catch (const std::exception&) {
      throw PreconditionError(std::string(what) + ": cannot parse '" + item + "' in '" + text +
                              "'");
    }
  }
  if (counts.empty()) throw PreconditionError(std::string(what) + ": empty list");
  return counts;
}

std::vector<int> trim_trailing_zeros(std::vector<int> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

Budget budget_from_env() {
  Budget budget;
  if (const char* v = std::getenv("ULRC_RANK_BUDGET")) budget.max_rank_ops = std::strtoull(v, nullptr, 10);
  if (const char* v = std::getenv("ULRC_DUAL_BUDGET")) budget.max_dual_words = std::strtoull(v, nullptr, 10);
  if (const char* v = std::getenv("ULRC_ENUM_BUDGET")) budget.max_messages = std::strtoull(v, nullptr, 10);
  return budget;
}

std::string counts_text(const std::vector<int>& counts) {
  std::string out = "{";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(counts[i]);
  }
  return out + "}";
}

std::string terms_text(const std::vector<long long>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += std::to_string(terms[i]);
  }
  return out;
}

void print_bound_report(const BoundReport& report) {
  long long term_sum = 0;
  for (long long t : report.terms) term_sum += t;
  switch (report.kind) {
    case BoundReport::Kind::Gopalan:
      std::cout << "single-locality information bound\n"
                << "  n = " << report.n << ", k = " << report.k << ", r = " << report.profile[0]
                << "\n"
                << "  d <= n - k - ceil(k/r) + 2 = " << report.n << " - " << report.k << " - "
                << report.terms[0] << " + 2\n";
      break;
    case BoundReport::Kind::Info:
      std::cout << "information-locality distance bound\n"
                << "  n = " << report.n << ", k = " << report.k << ", profile k_j = "
                << counts_text(report.profile) << "\n"
                << "  ceil(k_j/j) terms: " << terms_text(report.terms) << " = " << term_sum
                << "\n"
                << "  d <= n - k + 2 - " << term_sum << "\n";
      break;
    case BoundReport::Kind::AllSymbol: {
      std::vector<long long> prefix(report.terms.begin(), report.terms.end() - 1);
      std::cout << "all-symbol-locality distance bound\n"
                << "  n = " << report.n << ", k = " << report.k << ", profile n_j = "
                << counts_text(report.profile) << "\n"
                << "  k'_j = n_j - ceil(n_j/(j+1)): ";
      for (std::size_t i = 0; i < report.k_prime.size(); ++i)
        std::cout << (i ? ", " : "") << report.k_prime[i];
      std::cout << "\n  r' = " << report.r_prime
                << " (last locality with cumulative k' below k)\n"
                << "  r  = " << report.r << " (first locality past r' with n_j >= 2)\n"
                << "  terms: ceil(n_j/(j+1)) for j < r: " << terms_text(prefix)
                << "; final ceil term: " << report.terms.back() << "\n"
                << "  d <= n - k + 2 - " << term_sum << "\n";
      break;
    }
  }
  std::cout << "bound: " << report.bound << "\n";
}

// --- bound ---------------------------------------------------------------

struct BoundArgs {
  long long n = 0, k = 0, r = 0;
  std::string profile;
  bool as_json = false;
};

int run_bound_gopalan(const BoundArgs& args) {
  const auto report = gopalan_bound_report(args.n, args.k, args.r);
  if (args.as_json)
    std::cout << bound_report_to_json(report).dump(2) << "\n";
  else
    print_bound_report(report);
  return kExitOk;
}

int run_bound_info(const BoundArgs& args) {
  const InfoLocalityProfile profile{trim_trailing_zeros(parse_counts(args.profile, "--profile"))};
  const auto report = unequal_info_bound(args.n, args.k, profile);
  if (args.as_json)
    std::cout << bound_report_to_json(report).dump(2) << "\n";
  else
    print_bound_report(report);
  return kExitOk;
}

int run_bound_all_symbol(const BoundArgs& args) {
  const AllSymbolLocalityProfile profile{
      trim_trailing_zeros(parse_counts(args.profile, "--profile"))};
  try {
    const auto report = unequal_all_symbol_bound(args.n, args.k, profile);
    if (args.as_json)
      std::cout << bound_report_to_json(report).dump(2) << "\n";
    else
      print_bound_report(report);
    return kExitOk;
  } catch (const PreconditionError& e) {
    // Surface the undefined case, with the single-locality information
    // bound for r = ra alongside when it is computable.
    std::cerr << "error: " << e.what() << "\n";
    const long long ra = profile.max_locality();
    if (ra >= 1 && ra <= args.k && args.k <= args.n) {
      std::cerr << "single-locality information bound for r = " << ra << ": "
                << gopalan_bound(args.n, args.k, ra) << "\n";
    }
    return kExitPrecondition;
  }
}

// --- construct -----------------------------------------------------------

int run_construct_pyramid(const std::string& profile_text, int d, std::uint64_t q,
                          const std::string& output, bool as_json) {
  const InfoLocalityProfile profile{trim_trailing_zeros(parse_counts(profile_text, "--profile"))};
  const auto pc = pyramid_unequal(profile, d, q);
  save_code_file(output, pc);
  if (as_json) {
    std::cout << json{{"kind", "pyramid"},
                      {"n", pc.code.length()},
                      {"k", pc.code.dimension()},
                      {"design_distance", pc.d_design},
                      {"requested_profile", pc.requested_profile.counts},
                      {"designed_profile", pc.designed_profile.counts},
                      {"output", output}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "pyramid code: (" << pc.code.length() << ", " << pc.code.dimension()
              << ") over GF(" << pc.code.field()->order() << ")\n"
              << "  design distance: " << pc.d_design << "\n"
              << "  requested profile: " << counts_text(pc.requested_profile.counts) << "\n";
    if (!(pc.designed_profile == pc.requested_profile))
      std::cout << "  designed profile:  " << counts_text(pc.designed_profile.counts)
                << " (indivisible classes leave a smaller final group)\n";
    std::cout << "  written to " << output << "\n";
  }
  return kExitOk;
}

int run_construct_gabidulin(const std::string& profile_text, int k, std::uint64_t q, unsigned m,
                            const std::string& output, bool as_json) {
  const AllSymbolLocalityProfile profile{
      trim_trailing_zeros(parse_counts(profile_text, "--nprofile"))};
  const auto lrc = gabidulin_lrc(k, profile, q, m);
  save_code_file(output, lrc);
  if (as_json) {
    std::cout << json{{"kind", "gabidulin"},
                      {"n", lrc.code.length()},
                      {"k", lrc.code.dimension()},
                      {"N", lrc.precode_length},
                      {"design_distance", lrc.design_distance},
                      {"profile", lrc.intended_profile.counts},
                      {"output", output}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "rank-metric precoded code: (" << lrc.code.length() << ", "
              << lrc.code.dimension() << ") over GF(" << lrc.code.field()->order() << ")\n"
              << "  precode length N: " << lrc.precode_length << "\n"
              << "  design distance: " << lrc.design_distance << "\n"
              << "  profile: " << counts_text(lrc.intended_profile.counts) << "\n"
              << "  written to " << output << "\n";
  }
  return kExitOk;
}

// --- analyze ---------------------------------------------------------------

int run_analyze(const std::string& path, bool as_json) {
  const Budget budget = budget_from_env();
  const auto file = load_code_file(path);
  const auto& code = code_of(file);
  const long long n = static_cast<long long>(code.length());
  const long long k = static_cast<long long>(code.dimension());

  json out{{"n", n}, {"k", k}, {"field_order", code.field()->order()}};
  std::vector<std::string> omissions;

  std::optional<int> distance;
  try {
    distance = min_distance(code, budget);
    out["min_distance"] = *distance;
  } catch (const BudgetExceeded& e) {
    omissions.push_back(std::string("min_distance: ") + e.what());
  }

  std::optional<InfoLocalityProfile> info;
  std::optional<AllSymbolLocalityProfile> all;
  try {
    info = info_profile(code, LocalityMethod::Auto, budget);
    out["info_profile"] = info->counts;
  } catch (const BudgetExceeded& e) {
    omissions.push_back(std::string("info_profile: ") + e.what());
  } catch (const PreconditionError& e) {
    out["info_profile_error"] = e.what();
  }
  try {
    all = all_symbol_profile(code, LocalityMethod::Auto, budget);
    out["all_symbol_profile"] = all->counts;
  } catch (const BudgetExceeded& e) {
    omissions.push_back(std::string("all_symbol_profile: ") + e.what());
  } catch (const PreconditionError& e) {
    out["all_symbol_profile_error"] = e.what();
  }

  if (info) {
    const auto report = unequal_info_bound(n, k, *info);
    out["info_bound"] = bound_report_to_json(report);
    if (distance) out["info_bound_gap"] = report.bound - *distance;
  }
  if (all) {
    try {
      const auto report = unequal_all_symbol_bound(n, k, *all);
      out["all_symbol_bound"] = bound_report_to_json(report);
      if (distance) out["all_symbol_bound_gap"] = report.bound - *distance;
    } catch (const PreconditionError& e) {
      out["all_symbol_bound_error"] = e.what();
    }
  }

  std::optional<WitnessSet> witness;
  try {
    witness = witness_set(code, LocalityMethod::Auto, budget);
    out["witness"] = witness_to_json(*witness);
    if (distance)
      out["witness_size_at_most_n_minus_d"] =
          static_cast<long long>(witness->coordinates.size()) <= n - *distance;
  } catch (const BudgetExceeded& e) {
    omissions.push_back(std::string("witness_set: ") + e.what());
  } catch (const PreconditionError& e) {
    out["witness_error"] = e.what();
  }

  if (const auto* pc = std::get_if<PyramidCode>(&file)) {
    json check{{"kind", "pyramid"},
               {"requested_profile", pc->requested_profile.counts},
               {"designed_profile", pc->designed_profile.counts},
               {"design_distance", pc->d_design}};
    if (info) check["info_profile_matches_design"] = (*info == pc->designed_profile);
    if (distance) check["distance_matches_design"] = (*distance == pc->d_design);
    out["construction_check"] = std::move(check);
  } else if (const auto* lrc = std::get_if<GabidulinLRC>(&file)) {
    json check{{"kind", "gabidulin"},
               {"intended_profile", lrc->intended_profile.counts},
               {"design_distance", lrc->design_distance}};
    if (all) check["all_symbol_profile_matches_design"] = (*all == lrc->intended_profile);
    if (distance) check["distance_matches_design"] = (*distance == lrc->design_distance);
    out["construction_check"] = std::move(check);
  }

  if (!omissions.empty()) out["omissions"] = omissions;

  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "code: n = " << n << ", k = " << k << " over GF(" << code.field()->order()
              << ")\n";
    if (distance)
      std::cout << "minimum distance: " << *distance << "\n";
    if (info) std::cout << "information profile (measured): " << counts_text(info->counts) << "\n";
    if (all) std::cout << "all-symbol profile (measured): " << counts_text(all->counts) << "\n";
    if (out.contains("info_bound"))
      std::cout << "information bound: " << out["info_bound"]["bound"].get<long long>()
                << (distance ? " (gap " + std::to_string(out["info_bound_gap"].get<long long>()) +
                                   ")"
                             : "")
                << "\n";
    if (out.contains("all_symbol_bound"))
      std::cout << "all-symbol bound: " << out["all_symbol_bound"]["bound"].get<long long>()
                << (distance
                        ? " (gap " + std::to_string(out["all_symbol_bound_gap"].get<long long>()) +
                              ")"
                        : "")
                << "\n";
    if (out.contains("all_symbol_bound_error"))
      std::cout << "all-symbol bound: undefined (" << out["all_symbol_bound_error"].get<std::string>()
                << ")\n";
    if (witness) {
      std::cout << "witness set: size " << witness->coordinates.size() << ", rank "
                << witness->rank;
      if (distance)
        std::cout << "; |S| <= n - d "
                  << (out["witness_size_at_most_n_minus_d"].get<bool>() ? "holds" : "VIOLATED")
                  << " (" << witness->coordinates.size() << " vs " << (n - *distance) << ")";
      std::cout << "\n";
    }
    if (out.contains("construction_check")) {
      const auto& check = out["construction_check"];
      std::cout << "construction: " << check["kind"].get<std::string>() << "\n";
      if (check.contains("info_profile_matches_design"))
        std::cout << "  measured information profile matches design: "
                  << (check["info_profile_matches_design"].get<bool>() ? "yes" : "NO") << "\n";
      if (check.contains("all_symbol_profile_matches_design"))
        std::cout << "  measured all-symbol profile matches design: "
                  << (check["all_symbol_profile_matches_design"].get<bool>() ? "yes" : "NO")
                  << "\n";
      if (check.contains("distance_matches_design"))
        std::cout << "  distance matches design: "
                  << (check["distance_matches_design"].get<bool>() ? "yes" : "NO") << "\n";
    }
    for (const auto& o : omissions) std::cout << "omitted (budget): " << o << "\n";
  }
  return omissions.empty() ? kExitOk : kExitBudget;
}

// --- optimize-profile ------------------------------------------------------

int run_optimize(const std::string& requirement_text, bool certify, bool as_json) {
  const LocalityRequirement req{parse_counts(requirement_text, "--requirement")};
  const auto [profile, trace] = greedy_optimal_profile(req);
  const long long obj = objective(profile);

  json out{{"requirement", req.counts},
           {"optimal_profile", profile.counts},
           {"objective", obj}};
  json steps = json::array();
  for (const auto& step : trace.steps)
    steps.push_back(json{{"locality", step.locality},
                         {"carry_in", step.carry_in},
                         {"total", step.total},
                         {"quotient", step.quotient},
                         {"carry_out", step.carry_out},
                         {"assigned", step.assigned}});
  out["trace"] = std::move(steps);

  if (certify) {
    const long long exhaustive = exhaustive_optimal_objective(req);
    out["exhaustive_objective"] = exhaustive;
    out["certified"] = (exhaustive == obj);
  }

  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "requirement: " << counts_text(req.counts) << "\n"
              << "optimal profile: " << counts_text(profile.counts) << "\n"
              << "objective sum ceil(k_j/j): " << obj << "\n"
              << "greedy trace (locality: requested + carry = locality*quotient + carry_out):\n";
    for (const auto& step : trace.steps)
      std::cout << "  j = " << step.locality << ": " << (step.total - step.carry_in) << " + "
                << step.carry_in << " = " << step.locality << "*" << step.quotient << " + "
                << step.carry_out << "  ->  assigned " << step.assigned << "\n";
    if (certify)
      std::cout << "exhaustive check: minimum objective " << out["exhaustive_objective"]
                << (out["certified"].get<bool>() ? " (matches)" : " (MISMATCH)") << "\n";
  }
  if (certify && !out["certified"].get<bool>()) return kExitPrecondition;
  return kExitOk;
}

// --- simulate ----------------------------------------------------------------

int run_simulate(const std::string& path, std::uint64_t trials, std::size_t erasures,
                 std::uint64_t seed, bool as_json) {
  const auto file = load_code_file(path);
  const auto& code = code_of(file);
  const auto report = run_erasure_simulation(code, trials, erasures, seed, LocalityMethod::Auto,
                                             budget_from_env());
  if (as_json) {
    std::cout << sim_report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << "trials: " << report.trials << ", erasures per trial: " << report.erasures
              << ", seed: " << report.seed << "\n"
              << "decode successes: " << report.decode_successes << " ("
              << (report.trials ? 100.0 * report.decode_successes / report.trials : 0.0)
              << "%)\n"
              << "local repairs by locality:";
    if (report.local_repair_histogram.empty()) std::cout << " none";
    for (const auto& [loc, count] : report.local_repair_histogram)
      std::cout << "  r=" << loc << ": " << count;
    std::cout << "\nerased symbols with a damaged repair group: " << report.locally_unrepairable
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unequal-locality erasure codes: bounds, constructions, audits, and simulation"};
  app.require_subcommand(1);

  // bound
  auto* bound = app.add_subcommand("bound", "evaluate a distance bound");
  bound->require_subcommand(1);
  BoundArgs bound_args;

  auto* info = bound->add_subcommand("info", "information-locality profile bound");
  info->add_option("-n,--length", bound_args.n, "code length")->required();
  info->add_option("-k,--dimension", bound_args.k, "code dimension")->required();
  info->add_option("--profile", bound_args.profile, "counts k_1,k_2,... per locality")->required();
  info->add_flag("--json", bound_args.as_json, "machine-readable output");

  auto* all_symbol = bound->add_subcommand("all-symbol", "all-symbol locality profile bound");
  all_symbol->add_option("-n,--length", bound_args.n, "code length")->required();
  all_symbol->add_option("-k,--dimension", bound_args.k, "code dimension")->required();
  all_symbol->add_option("--profile", bound_args.profile, "counts n_1,n_2,... per locality")
      ->required();
  all_symbol->add_flag("--json", bound_args.as_json, "machine-readable output");

  auto* gopalan = bound->add_subcommand("gopalan", "single-locality information bound");
  gopalan->add_option("-n,--length", bound_args.n, "code length")->required();
  gopalan->add_option("-k,--dimension", bound_args.k, "code dimension")->required();
  gopalan->add_option("-r,--locality", bound_args.r, "information locality")->required();
  gopalan->add_flag("--json", bound_args.as_json, "machine-readable output");

  // construct
  auto* construct = app.add_subcommand("construct", "build a code and write it to JSON");
  construct->require_subcommand(1);

  std::string c_profile, c_output = "code.json";
  int c_d = 2, c_k = 1;
  std::uint64_t c_q = 16;
  unsigned c_m = 1;
  bool c_json = false;

  auto* pyramid = construct->add_subcommand("pyramid", "parity-splitting construction");
  pyramid->add_option("--profile", c_profile, "information locality profile k_1,k_2,...")
      ->required();
  pyramid->add_option("-d,--distance", c_d, "design distance (>= 2)")->required();
  pyramid->add_option("-q,--field-order", c_q, "field order (>= k + d - 1)")->required();
  pyramid->add_option("-o,--output", c_output, "output path")->capture_default_str();
  pyramid->add_flag("--json", c_json, "machine-readable output");

  auto* gabidulin = construct->add_subcommand("gabidulin", "rank-metric precoded construction");
  gabidulin->add_option("--nprofile", c_profile, "all-symbol locality profile n_1,n_2,...")
      ->required();
  gabidulin->add_option("-k,--dimension", c_k, "code dimension")->required();
  gabidulin->add_option("-q,--field-order", c_q, "base field order (>= ra + 1)")->required();
  gabidulin->add_option("-m,--ext-degree", c_m, "extension degree (>= N)")->required();
  gabidulin->add_option("-o,--output", c_output, "output path")->capture_default_str();
  gabidulin->add_flag("--json", c_json, "machine-readable output");

  // analyze
  std::string a_path;
  bool a_json = false;
  auto* analyze = app.add_subcommand("analyze", "audit a stored code with the exact oracles");
  analyze->add_option("file", a_path, "code JSON file")->required();
  analyze->add_flag("--json", a_json, "machine-readable output");

  // optimize-profile
  std::string o_requirement;
  bool o_certify = false, o_json = false;
  auto* optimize = app.add_subcommand("optimize-profile",
                                      "distance-optimal locality profile for a requirement");
  optimize->add_option("--requirement", o_requirement, "counts k~_1,k~_2,... per locality")
      ->required();
  optimize->add_flag("--certify", o_certify, "cross-check against exhaustive enumeration");
  optimize->add_flag("--json", o_json, "machine-readable output");

  // simulate
  std::string s_path;
  std::uint64_t s_trials = 1000, s_seed = 1;
  std::size_t s_erasures = 1;
  bool s_json = false;
  auto* simulate = app.add_subcommand("simulate", "seeded random-erasure simulation");
  simulate->add_option("file", s_path, "code JSON file")->required();
  simulate->add_option("--trials", s_trials, "number of trials")->capture_default_str();
  simulate->add_option("--erasures", s_erasures, "erasures per trial")->capture_default_str();
  simulate->add_option("--seed", s_seed, "PRNG seed")->capture_default_str();
  simulate->add_flag("--json", s_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (info->parsed()) return run_bound_info(bound_args);
    if (all_symbol->parsed()) return run_bound_all_symbol(bound_args);
    if (gopalan->parsed()) return run_bound_gopalan(bound_args);
    if (pyramid->parsed()) return run_construct_pyramid(c_profile, c_d, c_q, c_output, c_json);
    if (gabidulin->parsed())
      return run_construct_gabidulin(c_profile, c_k, c_q, c_m, c_output, c_json);
    if (analyze->parsed()) return run_analyze(a_path, a_json);
    if (optimize->parsed()) return run_optimize(o_requirement, o_certify, o_json);
    if (simulate->parsed()) return run_simulate(s_path, s_trials, s_erasures, s_seed, s_json);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error (budget): " << e.what() << "\n";
    return kExitBudget;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
