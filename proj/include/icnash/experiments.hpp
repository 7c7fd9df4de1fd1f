#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "icnash/channel_model.hpp"

namespace icnash {

struct SweepConfig {
  std::vector<double> snr_db;  // nonempty, strictly increasing
  long trials = 100000;
  std::uint64_t seed = 1;
  // Fraction of trials cross-validated against the brute-force oracle.
  double oracle_check_fraction = 0.001;
  int threads = 0;  // 0 = hardware concurrency
};

struct NeCountRow {
  double snr_db{};
  double pa_type_a_prob{};
  double pa_type_b_prob{};
  double pa_type_d_prob{};
  long pa_other_count{};  // zero-probability types C/E, raw count
  double cs_one_prob{};
  double cs_two_prob{};
  long trials{};
};

struct SumUtilityRow {
  double snr_db{};
  double pa_best_avg{};
  double pa_worst_avg{};
  double cs_best_avg{};
  double cs_worst_avg{};
  long trials{};
};

// An oracle/solver disagreement indicates an implementation bug, not a
// data condition.
class OracleMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-instance best and worst equilibrium sum utilities of both games.
struct EquilibriumSumUtilities {
  double pa_best{};
  double pa_worst{};
  double cs_best{};
  double cs_worst{};
};

EquilibriumSumUtilities equilibrium_sum_utilities(const ChannelRealization& ch);

// NE-count probabilities per SNR point. Deterministic given the seed,
// independent of the thread count.
std::vector<NeCountRow> run_ne_count_sweep(const SweepConfig& cfg);

// Average best/worst equilibrium sum utility per SNR point.
std::vector<SumUtilityRow> run_sum_utility_sweep(const SweepConfig& cfg);

// CSV renderings, floating point at 9 significant digits.
std::string ne_count_csv(const std::vector<NeCountRow>& rows);
std::string sum_utility_csv(const std::vector<SumUtilityRow>& rows);

}  // namespace icnash
