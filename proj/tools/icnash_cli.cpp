#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "icnash/cs_game.hpp"
#include "icnash/experiments.hpp"
#include "icnash/json_io.hpp"
#include "icnash/oracle.hpp"
#include "icnash/pa_game.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitIo = 4;
constexpr int kExitOracleMismatch = 5;

// START:STEP:STOP, inclusive of STOP when it lands on the grid.
std::vector<double> parse_snr_range(const std::string& text) {
  std::istringstream in(text);
  double start = 0.0, step = 0.0, stop = 0.0;
  char sep1 = 0, sep2 = 0;
  if (!(in >> start >> sep1 >> step >> sep2 >> stop) || sep1 != ':' ||
      sep2 != ':' || !in.eof()) {
    throw std::invalid_argument("expected START:STEP:STOP, e.g. -10:5:30");
  }
  if (!(step > 0.0) || stop < start) {
    throw std::invalid_argument("need STEP > 0 and STOP >= START");
  }
  std::vector<double> values;
  for (int i = 0;; ++i) {
    const double v = start + i * step;
    if (v > stop + 1e-9 * step) break;
    values.push_back(v);
  }
  return values;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ICNASH_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 1;
}

icnash::ChannelRealization load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open input file: " + path);
  }
  return icnash::channel_from_json(nlohmann::json::parse(in));
}

int run_solve(const std::string& input, const std::string& game) {
  const auto ch = load_instance(input);
  nlohmann::json out;
  if (game == "pa" || game == "both") {
    out["pa"] = icnash::pa_nash_set_to_json(icnash::enumerate_pa_nash(ch));
  }
  if (game == "cs" || game == "both") {
    out["cs"] = icnash::cs_outcome_to_json(icnash::enumerate_cs_nash(ch));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_sweep(bool ne_count, const icnash::SweepConfig& cfg,
              const std::string& out_path) {
  std::string csv;
  if (ne_count) {
    csv = icnash::ne_count_csv(icnash::run_ne_count_sweep(cfg));
  } else {
    csv = icnash::sum_utility_csv(icnash::run_sum_utility_sweep(cfg));
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  out << csv;
  out.flush();
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitIo;
  }
  std::cout << out_path << "\n";
  return 0;
}

int run_oracle_check(const std::vector<double>& snr_db, long trials,
                     std::uint64_t seed, double grid_step) {
  icnash::OracleConfig coarse;
  coarse.grid_step = grid_step;
  const icnash::OracleConfig fine;
  long checked = 0;
  for (std::size_t i = 0; i < snr_db.size(); ++i) {
    const double snr = std::pow(10.0, snr_db[i] / 10.0);
    for (long t = 0; t < trials; ++t) {
      icnash::Rng rng(icnash::derive_seed(seed, i, static_cast<std::uint64_t>(t)));
      const auto ch = icnash::sample_channel(rng, snr);
      const auto pa = icnash::enumerate_pa_nash(ch);
      for (const auto& ne : pa.equilibria) {
        if (!icnash::is_pa_ne_by_deviation(ch, ne, fine)) {
          std::cerr << "mismatch: PA NE fails deviation test (snr_db="
                    << snr_db[i] << " trial=" << t << ")\n";
          return kExitOracleMismatch;
        }
      }
      if (pa.kind == icnash::PaNashSet::Kind::Finite) {
        for (const auto& c : icnash::brute_force_pa_nash(ch, coarse)) {
          bool matched = false;
          for (const auto& ne : pa.equilibria) {
            if (std::max(std::abs(c.alpha1 - ne.alpha1),
                         std::abs(c.alpha2 - ne.alpha2)) <= 2.0 * grid_step) {
              matched = true;
            }
          }
          if (!matched) {
            std::cerr << "mismatch: unmatched oracle PA cluster (snr_db="
                      << snr_db[i] << " trial=" << t << ")\n";
            return kExitOracleMismatch;
          }
        }
      }
      const auto cs = icnash::enumerate_cs_nash(ch);
      for (const auto& ne : cs.equilibria) {
        if (!icnash::is_cs_ne_by_deviation(ch, ne, fine)) {
          std::cerr << "mismatch: CS NE fails deviation test (snr_db="
                    << snr_db[i] << " trial=" << t << ")\n";
          return kExitOracleMismatch;
        }
      }
      ++checked;
    }
  }
  std::cout << "checked " << checked << " instances: OK\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash equilibria of the 2x2 decentralized parallel interference channel"};
  app.require_subcommand(1);

  std::string input;
  std::string game = "both";
  auto* solve = app.add_subcommand(
      "solve", "Enumerate the equilibria of one instance, JSON to stdout");
  solve->add_option("--input", input, "Instance JSON file")->required();
  solve->add_option("--game", game, "pa|cs|both")
      ->check(CLI::IsMember({"pa", "cs", "both"}));

  std::string snr_spec = "-10:5:30";
  long trials = 100000;
  std::uint64_t seed = default_seed();
  std::string out_path;
  int threads = 0;
  bool full = false;
  double oracle_fraction = 0.001;
  auto add_sweep_flags = [&](CLI::App* cmd) {
    cmd->add_option("--snr-db", snr_spec, "SNR axis as START:STEP:STOP in dB");
    cmd->add_option("--trials", trials, "Monte-Carlo trials per SNR point");
    cmd->add_option("--seed", seed, "Master seed (default: ICNASH_SEED or 1)");
    cmd->add_option("--out", out_path, "Output CSV path")->required();
    cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");
    cmd->add_flag("--full", full, "Run 10^6 trials per SNR point");
    cmd->add_option("--oracle-fraction", oracle_fraction,
                    "Fraction of trials cross-checked against the oracle");
  };
  auto* sweep_ne = app.add_subcommand(
      "sweep-ne-count", "Equilibrium-count probabilities vs SNR, CSV output");
  add_sweep_flags(sweep_ne);
  auto* sweep_su = app.add_subcommand(
      "sweep-sum-utility", "Best/worst equilibrium sum utility vs SNR, CSV output");
  add_sweep_flags(sweep_su);

  std::string check_snr_spec = "-10:10:30";
  long check_trials = 100;
  std::uint64_t check_seed = default_seed();
  double check_step = 0.01;
  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "Cross-validate the solvers against the grid oracle");
  oracle_cmd->add_option("--snr-db", check_snr_spec, "SNR axis as START:STEP:STOP in dB");
  oracle_cmd->add_option("--trials", check_trials, "Instances per SNR point");
  oracle_cmd->add_option("--seed", check_seed, "Master seed");
  oracle_cmd->add_option("--grid-step", check_step, "Oracle grid step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      return run_solve(input, game);
    }
    if (sweep_ne->parsed() || sweep_su->parsed()) {
      icnash::SweepConfig cfg;
      cfg.snr_db = parse_snr_range(snr_spec);
      cfg.trials = full ? 1000000 : trials;
      cfg.seed = seed;
      cfg.threads = threads;
      cfg.oracle_check_fraction = oracle_fraction;
      return run_sweep(sweep_ne->parsed(), cfg, out_path);
    }
    return run_oracle_check(parse_snr_range(check_snr_spec), check_trials,
                            check_seed, check_step);
  } catch (const icnash::OracleMismatchError& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return kExitOracleMismatch;
  } catch (const icnash::DegenerateChannelError& e) {
    std::cerr << "degenerate instance: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  }
}
