#pragma once

#include <array>
#include <stdexcept>

#include "icnash/rng.hpp"

namespace icnash {

// One game instance: the 8 normalized channel gains g[rx][tx][ch].
// Indices are 0-based. Gains are dimensionless (max transmit power and
// noise power are folded in at sampling time).
struct ChannelRealization {
  std::array<std::array<std::array<double, 2>, 2>, 2> g{};

  double gain(int rx, int tx, int ch) const { return g[rx][tx][ch]; }
};

// Fractions of max power each player puts on channel 1 (channel 2 gets
// the remainder).
struct ActionProfile {
  double alpha1{};
  double alpha2{};

  double alpha(int k) const { return k == 0 ? alpha1 : alpha2; }
};

// rho[k][s]: interfering-to-direct gain ratio for player k on channel s.
struct InterferenceRatios {
  std::array<std::array<double, 2>, 2> rho{};
};

// Thrown when a direct gain is zero or a gain is negative/non-finite.
class DegenerateChannelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws DegenerateChannelError unless all gains are finite and
// nonnegative with strictly positive direct gains.
void validate(const ChannelRealization& ch);

// Draws the 8 gains as independent snr * Exp(1) variates (|h|^2 of a
// unit-variance circularly symmetric complex Gaussian is Exp(1)).
// Direct gains are rejection-resampled away from exact zero.
ChannelRealization sample_channel(Rng& rng, double snr);

// Spectral efficiency of player k at the given profile, in bits/s/Hz.
double utility(const ChannelRealization& ch, int k, ActionProfile profile);

double sum_utility(const ChannelRealization& ch, ActionProfile profile);

InterferenceRatios interference_ratios(const ChannelRealization& ch);

// Relabeling helpers (used by the symmetry tests and the CS search).
ChannelRealization swap_channels(const ChannelRealization& ch);
ChannelRealization swap_players(const ChannelRealization& ch);

}  // namespace icnash
