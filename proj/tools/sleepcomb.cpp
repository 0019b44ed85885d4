// sleepcomb: batch experiment runner, verifier front-end and report emitter
// for online sleeping combinatorial optimization.
//
// Exit codes: 0 on success or PASS, 1 on verification FAIL, 2 on usage
// errors. Runs emit a per-round CSV, a single-line key=value summary on
// stdout and a JSON sidecar next to the CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "sleepcomb/disjunctions.hpp"
#include "sleepcomb/errors.hpp"
#include "sleepcomb/extensible.hpp"
#include "sleepcomb/game.hpp"
#include "sleepcomb/hard_instances.hpp"
#include "sleepcomb/learners.hpp"
#include "sleepcomb/problems.hpp"
#include "sleepcomb/reductions.hpp"
#include "sleepcomb/regret.hpp"

using json = nlohmann::json;
using namespace sleepcomb;

namespace {

std::size_t default_cap() {
  if (const char* env = std::getenv("SLEEPCOMB_ENUM_CAP")) {
    const long long parsed = std::atoll(env);
    if (parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return kDefaultEnumCap;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Family parse_family(const std::string& name) {
  if (auto f = family_from_name(name)) return *f;
  throw CLI::ValidationError("--family", "unknown family: " + name);
}

std::string summary_line(const json& record) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : record.items()) {
    if (!first) os << ' ';
    first = false;
    os << key << '=';
    if (value.is_string())
      os << value.get<std::string>();
    else
      os << value.dump();
  }
  return os.str();
}

void write_outputs(const std::string& out_path, const std::string& csv, const json& record) {
  if (out_path.empty()) return;
  std::ofstream csv_file(out_path, std::ios::binary);
  if (!csv_file) throw FormatError("cannot open output file: " + out_path);
  csv_file << csv;
  std::ofstream json_file(out_path + ".json", std::ios::binary);
  json_file << record.dump(2) << '\n';
}

std::string seed_suffixed(const std::string& path, std::uint64_t seed) {
  const auto dot = path.rfind('.');
  const std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  return stem + "_seed" + std::to_string(seed) + ext;
}

void print_verify(const std::string& property, const VerifyReport& report) {
  std::cout << property << ": " << (report.ok ? "PASS" : "FAIL")
            << (report.exhaustive ? "" : " (sampled)") << " checked=" << report.checked;
  if (!report.ok) {
    std::cout << " detail=\"" << report.detail << '"';
    if (report.counterexample) std::cout << " counterexample=" << report.counterexample->str();
  }
  std::cout << '\n';
}

// Random target disjunction: each index independently absent, positive or
// negative.
Disjunction random_disjunction(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xD15EA5E5ULL);
  Disjunction phi;
  for (int i = 1; i <= n; ++i) {
    switch (rng() % 3) {
      case 1: phi.positive.push_back(i); break;
      case 2: phi.negative.push_back(i); break;
      default: break;
    }
  }
  return phi;
}

struct DisjArgs {
  int n = 3;
  std::string family = "k-subsets";
  std::string learner = "hedge";
  std::string adversary = "iid-realizable";
  int horizon = 0;
  std::uint64_t seed = 0;
  std::string out;
  double eta = 0.0;
  int trials = 1;
};

int run_reduce_disjunction_once(const DisjArgs& args, std::uint64_t seed, std::string out_path) {
  const std::size_t cap = default_cap();
  const Family family = parse_family(args.family);
  HardInstance hard = build_hard(family, args.n);

  // Stream selection.
  Disjunction target;
  double flip_prob = 0.0;
  LabeledStream stream;
  int horizon = args.horizon;
  if (args.adversary.rfind("file:", 0) == 0) {
    const std::string path = args.adversary.substr(5);
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open stream file: " + path);
    stream = parse_stream(in, args.n);
    if (horizon == 0) horizon = static_cast<int>(stream.size());
    if (horizon > static_cast<int>(stream.size()))
      throw FormatError("stream file has fewer rounds than --T");
    stream.resize(horizon);
  } else {
    if (args.adversary == "iid-realizable") {
      flip_prob = 0.0;
    } else if (args.adversary.rfind("iid-noisy:", 0) == 0) {
      flip_prob = std::stod(args.adversary.substr(10));
      if (flip_prob < 0.0 || flip_prob >= 0.5)
        throw FormatError("noise rate must be in [0, 0.5)");
    } else {
      throw FormatError("unknown adversary: " + args.adversary);
    }
    target = random_disjunction(args.n, seed);
    stream = make_iid_stream(target, args.n, horizon, flip_prob, seed);
  }

  LearnerSpec spec;
  spec.kind = args.learner;
  spec.seed = seed + 1;
  spec.cap = cap;
  spec.hedge = {.loss_lo = 0.0, .loss_hi = 1.0, .horizon = horizon,
                .eta = args.eta > 0.0 ? std::optional<double>(args.eta) : std::nullopt,
                .seed = 0};
  DisjunctionLearner learner(hard, make_learner(spec, *hard.instance));

  long long mistakes = 0;
  std::ostringstream csv;
  csv << "round,x,y,yhat,mistake,algo_loss,chosen_action,sleeping\n";
  for (std::size_t t = 0; t < stream.size(); ++t) {
    const StreamRound& r = stream[t];
    const int yhat = learner.predict(r.x);
    learner.update(r.y);
    const bool mistake = yhat != r.y;
    mistakes += mistake ? 1 : 0;
    const RoundRecord& record = learner.inner_history().rounds[t];
    std::string xs;
    for (int b : r.x) xs += static_cast<char>('0' + b);
    csv << (t + 1) << ',' << xs << ',' << r.y << ',' << yhat << ',' << (mistake ? 1 : 0) << ','
        << fmt_double(action_loss(*record.played, record.losses)) << ','
        << record.played->str() << ',' << record.sleeping.str() << '\n';
  }

  auto [best_phi, best_errors] = best_disjunction(stream, args.n);

  json record{{"schema", 1},
              {"subcommand", "reduce-disjunction"},
              {"family", family_name(family)},
              {"n", args.n},
              {"T", horizon},
              {"seed", seed},
              {"learner", args.learner},
              {"adversary", args.adversary},
              {"phi_target", target.str()},
              {"flip_prob", flip_prob},
              {"mistakes_alg", mistakes},
              {"best_phi", best_phi.str()},
              {"best_phi_errors", best_errors},
              {"regret_vs_best", mistakes - best_errors},
              {"out", out_path}};
  write_outputs(out_path, csv.str(), record);
  std::cout << summary_line(record) << '\n';
  return 0;
}

struct PerActionArgs {
  std::string family = "k-subsets";
  int n = 2;
  int horizon = 16;
  std::string inner = "random";
  std::string mode = "det";
  std::uint64_t seed = 0;
  std::string out;
  int p_multiplier = 2;
  double sleep_prob = 0.25;
  int trials = 1;
};

int run_reduce_per_action_once(const PerActionArgs& args, std::uint64_t seed,
                               std::string out_path) {
  const std::size_t cap = default_cap();
  const Family family = parse_family(args.family);
  HardInstance hard = build_hard(family, args.n);

  PerActionWrapper::Config config;
  config.horizon = args.horizon;
  config.mode = args.mode == "iid" ? BitPatternSource::Mode::StochasticIid
                                   : BitPatternSource::Mode::Deterministic;
  config.p_multiplier = args.p_multiplier;
  config.seed = seed + 2;
  config.cap = cap;

  const int n = args.n;
  const int horizon = args.horizon;
  auto inner_factory = [&](const Instance& derived) {
    LearnerSpec spec;
    spec.kind = args.inner;
    spec.seed = seed + 3;
    spec.cap = cap;
    const int p = config.mode == BitPatternSource::Mode::Deterministic
                      ? bits_for_horizon(horizon)
                      : config.p_multiplier * bits_for_horizon(horizon);
    spec.hedge = {.loss_lo = 0.0, .loss_hi = static_cast<double>(n + 1 + p),
                  .horizon = horizon, .eta = std::nullopt, .seed = 0};
    return make_learner(spec, derived);
  };
  PerActionWrapper wrapper(hard.instance, config, inner_factory);

  IidAdversary adversary(*hard.instance,
                         {.sleep_prob = args.sleep_prob, .loss_lo = 0.0, .loss_hi = 1.0,
                          .denominator = 16, .seed = seed});
  GameHistory history = run_game(*hard.instance, adversary, wrapper, args.horizon);

  double max_regret = 0.0;
  std::string argmax;
  for (const Action& v : hard.instance->enumerate(cap)) {
    const double r = per_action_regret(history, v);
    if (r > max_regret) {
      max_regret = r;
      argmax = v.str();
    }
  }

  json record{{"schema", 1},
              {"subcommand", "reduce-per-action"},
              {"family", family_name(family)},
              {"n", args.n},
              {"T", args.horizon},
              {"p", wrapper.extended().p},
              {"mode", args.mode},
              {"inner", args.inner},
              {"seed", seed},
              {"sleep_prob", args.sleep_prob},
              {"algo_loss", history.total_algo_loss()},
              {"max_per_action_regret", max_regret},
              {"argmax_action", argmax},
              {"out", out_path}};
  write_outputs(out_path, history.to_csv_string(), record);
  std::cout << summary_line(record) << '\n';
  return 0;
}

struct RunGameArgs {
  std::string family = "k-subsets";
  int n = 2;
  int horizon = 32;
  std::string learner = "hedge";
  std::uint64_t seed = 0;
  std::string out;
  double eta = 0.0;
  double sleep_prob = 0.25;
  int trials = 1;
};

int run_game_once(const RunGameArgs& args, std::uint64_t seed, std::string out_path) {
  const std::size_t cap = default_cap();
  const Family family = parse_family(args.family);
  HardInstance hard = build_hard(family, args.n);

  LearnerSpec spec;
  spec.kind = args.learner;
  spec.seed = seed + 1;
  spec.cap = cap;
  spec.hedge = {.loss_lo = -(args.n + 1.0), .loss_hi = args.n + 1.0, .horizon = args.horizon,
                .eta = args.eta > 0.0 ? std::optional<double>(args.eta) : std::nullopt,
                .seed = 0};
  auto learner = make_learner(spec, *hard.instance);

  IidAdversary adversary(*hard.instance,
                         {.sleep_prob = args.sleep_prob, .loss_lo = 0.0, .loss_hi = 1.0,
                          .denominator = 16, .seed = seed});
  GameHistory history = run_game(*hard.instance, adversary, *learner, args.horizon);

  json record{{"schema", 1},
              {"subcommand", "run-game"},
              {"family", family_name(family)},
              {"n", args.n},
              {"T", args.horizon},
              {"seed", seed},
              {"learner", args.learner},
              {"sleep_prob", args.sleep_prob},
              {"algo_loss", history.total_algo_loss()},
              {"out", out_path}};

  double max_regret = 0.0;
  for (const Action& v : hard.instance->enumerate(cap))
    max_regret = std::max(max_regret, per_action_regret(history, v));
  record["max_per_action_regret"] = max_regret;
  if (hard.instance->enumerate(cap).size() <= 8) {
    auto [ranking, value] = best_ranking_bruteforce(*hard.instance, history, 8, cap);
    record["best_ranking_loss"] = value;
    record["best_ranking_regret"] = history.total_algo_loss() - value;
  }
  write_outputs(out_path, history.to_csv_string(), record);
  std::cout << summary_line(record) << '\n';
  return 0;
}

/// Runs `once(seed, path)` for each trial seed, in parallel when asked.
template <typename Fn>
int run_trials(int trials, std::uint64_t seed, const std::string& out, Fn&& once) {
  if (trials <= 1) return once(seed, out);
  std::vector<std::future<int>> futures;
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(i);
    const std::string path = out.empty() ? out : seed_suffixed(out, trial_seed);
    futures.push_back(std::async(std::launch::async,
                                 [&once, trial_seed, path]() { return once(trial_seed, path); }));
  }
  int rc = 0;
  for (auto& f : futures) rc = std::max(rc, f.get());
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online sleeping combinatorial optimization workbench"};
  app.require_subcommand(1);

  // verify-hard
  auto* verify_hard_cmd = app.add_subcommand("verify-hard", "check heaviness and richness");
  std::string vh_family = "shortest-path";
  int vh_n = 1;
  std::size_t vh_cap = 0;
  verify_hard_cmd->add_option("--family", vh_family, "problem family")->required();
  verify_hard_cmd->add_option("--n", vh_n, "hard-instance parameter")->check(CLI::PositiveNumber);
  verify_hard_cmd->add_option("--cap", vh_cap, "enumeration cap override");

  // verify-extensible
  auto* verify_ext_cmd = app.add_subcommand("verify-extensible", "check extension properties");
  std::string ve_family = "shortest-path";
  int ve_n = 1;
  int ve_p = 1;
  bool ve_paper_gadget = false;
  std::size_t ve_cap = 0;
  verify_ext_cmd->add_option("--family", ve_family, "problem family")->required();
  verify_ext_cmd->add_option("--n", ve_n, "base hard-instance parameter")
      ->check(CLI::PositiveNumber);
  verify_ext_cmd->add_option("--p", ve_p, "number of bit positions")->check(CLI::PositiveNumber);
  verify_ext_cmd->add_flag("--paper-mincut-gadget", ve_paper_gadget,
                           "use the parallel-edge min-cut gadget (fails property 2)");
  verify_ext_cmd->add_option("--cap", ve_cap, "enumeration cap override");

  // reduce-disjunction
  auto* disj_cmd = app.add_subcommand("reduce-disjunction",
                                      "learn disjunctions through a sleeping optimizer");
  DisjArgs disj;
  disj_cmd->add_option("--n", disj.n, "number of boolean variables")->required()
      ->check(CLI::PositiveNumber);
  disj_cmd->add_option("--family", disj.family, "hard-instance family (default k-subsets)");
  disj_cmd->add_option("--learner", disj.learner, "inner learner: random|ftl|hedge");
  disj_cmd->add_option("--adversary", disj.adversary,
                       "iid-realizable | iid-noisy:q | file:PATH");
  disj_cmd->add_option("--T", disj.horizon, "rounds (defaults to file length)")
      ->check(CLI::PositiveNumber);
  disj_cmd->add_option("--seed", disj.seed, "random seed")->required();
  disj_cmd->add_option("--out", disj.out, "per-round CSV path");
  disj_cmd->add_option("--eta", disj.eta, "hedge learning rate override");
  disj_cmd->add_option("--trials", disj.trials, "independent seeded trials")
      ->check(CLI::PositiveNumber);

  // reduce-per-action
  auto* pa_cmd = app.add_subcommand("reduce-per-action",
                                    "per-action regret via a ranking-regret learner");
  PerActionArgs pa;
  pa_cmd->add_option("--family", pa.family, "base hard-instance family")->required();
  pa_cmd->add_option("--n", pa.n, "hard-instance parameter")->check(CLI::PositiveNumber);
  pa_cmd->add_option("--T", pa.horizon, "rounds")->check(CLI::PositiveNumber);
  pa_cmd->add_option("--inner", pa.inner, "inner learner: random|ftl|hedge");
  pa_cmd->add_option("--mode", pa.mode, "bit pattern mode: det|iid")
      ->check(CLI::IsMember({"det", "iid"}));
  pa_cmd->add_option("--seed", pa.seed, "random seed")->required();
  pa_cmd->add_option("--out", pa.out, "per-round CSV path");
  pa_cmd->add_option("--p-multiplier", pa.p_multiplier, "bits per log2(T) in iid mode")
      ->check(CLI::PositiveNumber);
  pa_cmd->add_option("--sleep-prob", pa.sleep_prob, "per-element sleeping probability");
  pa_cmd->add_option("--trials", pa.trials, "independent seeded trials")
      ->check(CLI::PositiveNumber);

  // run-game
  auto* game_cmd = app.add_subcommand("run-game", "plain sleeping game on a hard instance");
  RunGameArgs game;
  game_cmd->add_option("--family", game.family, "problem family")->required();
  game_cmd->add_option("--n", game.n, "hard-instance parameter")->check(CLI::PositiveNumber);
  game_cmd->add_option("--T", game.horizon, "rounds")->check(CLI::PositiveNumber);
  game_cmd->add_option("--learner", game.learner, "learner: random|ftl|hedge");
  game_cmd->add_option("--seed", game.seed, "random seed")->required();
  game_cmd->add_option("--out", game.out, "per-round CSV path");
  game_cmd->add_option("--eta", game.eta, "hedge learning rate override");
  game_cmd->add_option("--sleep-prob", game.sleep_prob, "per-element sleeping probability");
  game_cmd->add_option("--trials", game.trials, "independent seeded trials")
      ->check(CLI::PositiveNumber);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force oracles and instance stats");
  std::string or_family;
  int or_n = 1;
  std::string or_stream;
  int or_stream_n = 0;
  std::size_t or_cap = 0;
  oracle_cmd->add_option("--family", or_family, "print hard-instance statistics");
  oracle_cmd->add_option("--n", or_n, "hard-instance parameter")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--stream", or_stream, "labeled stream file for the hindsight oracle");
  oracle_cmd->add_option("--stream-n", or_stream_n, "variable count of the stream");
  oracle_cmd->add_option("--cap", or_cap, "enumeration cap override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify_hard_cmd) {
      const std::size_t cap = vh_cap > 0 ? vh_cap : default_cap();
      HardInstance hi = build_hard(parse_family(vh_family), vh_n);
      const VerifyReport heavy = verify_heaviness(hi, cap);
      const VerifyReport rich = verify_richness(hi);
      print_verify("heaviness", heavy);
      print_verify("richness", rich);
      return heavy.ok && rich.ok ? 0 : 1;
    }
    if (*verify_ext_cmd) {
      const std::size_t cap = ve_cap > 0 ? ve_cap : default_cap();
      HardInstance hi = build_hard(parse_family(ve_family), ve_n);
      const MinCutGadget gadget =
          ve_paper_gadget ? MinCutGadget::PaperParallel : MinCutGadget::SeriesPair;
      ExtendedInstance ext = extend(hi.instance, ve_p, gadget);
      const VerifyReport p1 = verify_property1(ext, cap);
      const VerifyReport p2 = verify_property2(ext, cap);
      print_verify("property1", p1);
      print_verify("property2", p2);
      return p1.ok && p2.ok ? 0 : 1;
    }
    if (*disj_cmd) {
      if (disj.horizon == 0 && disj.adversary.rfind("file:", 0) != 0)
        throw CLI::ValidationError("--T", "a positive --T is required for iid adversaries");
      return run_trials(disj.trials, disj.seed, disj.out,
                        [&](std::uint64_t seed, const std::string& path) {
                          return run_reduce_disjunction_once(disj, seed, path);
                        });
    }
    if (*pa_cmd) {
      return run_trials(pa.trials, pa.seed, pa.out,
                        [&](std::uint64_t seed, const std::string& path) {
                          return run_reduce_per_action_once(pa, seed, path);
                        });
    }
    if (*game_cmd) {
      return run_trials(game.trials, game.seed, game.out,
                        [&](std::uint64_t seed, const std::string& path) {
                          return run_game_once(game, seed, path);
                        });
    }
    if (*oracle_cmd) {
      const std::size_t cap = or_cap > 0 ? or_cap : default_cap();
      json record{{"schema", 1}, {"subcommand", "oracle"}};
      if (!or_stream.empty()) {
        if (or_stream_n <= 0)
          throw CLI::ValidationError("--stream-n", "a positive --stream-n is required");
        std::ifstream in(or_stream);
        if (!in) throw FormatError("cannot open stream file: " + or_stream);
        const LabeledStream stream = parse_stream(in, or_stream_n);
        auto [phi, errors] = best_disjunction(stream, or_stream_n);
        record["stream"] = or_stream;
        record["rounds"] = stream.size();
        record["best_phi"] = phi.str();
        record["best_phi_errors"] = errors;
      } else if (!or_family.empty()) {
        HardInstance hi = build_hard(parse_family(or_family), or_n);
        record["family"] = family_name(hi.instance->family());
        record["n"] = or_n;
        record["d"] = hi.instance->ground_size();
        try {
          const auto actions = hi.instance->enumerate(cap);
          record["decision_set_size"] = actions.size();
          std::size_t lo = actions.front().size(), hi_size = lo;
          for (const Action& a : actions) {
            lo = std::min(lo, a.size());
            hi_size = std::max(hi_size, a.size());
          }
          record["min_action_size"] = lo;
          record["max_action_size"] = hi_size;
        } catch (const TooLarge&) {
          record["decision_set_size"] = "over-cap";
        }
      } else {
        throw CLI::ValidationError("oracle", "need --family or --stream");
      }
      std::cout << summary_line(record) << '\n';
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
