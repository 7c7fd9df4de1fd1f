#pragma once

#include <vector>

#include "icnash/channel_model.hpp"
#include "icnash/cs_game.hpp"

namespace icnash {

// Brute-force verification layer: grid search plus unilateral-deviation
// testing, independent of the closed-form solvers. O(step^-2) per
// instance; used in tests and spot checks only.
struct OracleConfig {
  double grid_step = 1e-3;
  // Absolute tolerance in utility units (bits/s/Hz). Utilities near zero
  // occur, so a relative tolerance would degenerate.
  double deviation_tol = 1e-9;
};

// Grid argmax of player k's utility over {0, step, ..., 1}; ties break
// toward smaller alpha.
double grid_best_response(const ChannelRealization& ch, int k,
                          double alpha_other, const OracleConfig& cfg);

// True iff neither player can improve its utility by more than
// deviation_tol at any grid point.
bool is_pa_ne_by_deviation(const ChannelRealization& ch, ActionProfile profile,
                           const OracleConfig& cfg);

// True iff neither player improves by more than deviation_tol by
// flipping its bit.
bool is_cs_ne_by_deviation(const ChannelRealization& ch, CsProfile profile,
                           const OracleConfig& cfg);

// All grid profiles passing the deviation test, merged into clusters of
// radius 2 * grid_step (infinity norm); returns cluster centroids.
//
// Caveat: the discretized game can have equilibria far from every
// equilibrium of the continuous game. When the composed best response
// f(a1) = BR1(BR2(a1)) runs nearly tangent to the identity, profiles
// where each action is the exact grid argmax against the other can sit
// many grid steps away from the true fixed point (the displacement
// scales like step * |slope| / |1 - slope|). Such clusters are
// artifacts of the grid, not missed equilibria; use
// numeric_fixed_points_covered to tell the two apart.
std::vector<ActionProfile> brute_force_pa_nash(const ChannelRealization& ch,
                                               const OracleConfig& cfg);

// Fixed points of the composed best-response map a1 -> BR1(BR2(a1)),
// located purely numerically: golden-section maximization of each
// utility plus bisection on the residual. Shares no algebra with the
// closed-form solver, so it serves as a second, sharper oracle when a
// brute-force cluster fails the distance match.
std::vector<ActionProfile> numeric_pa_fixed_points(const ChannelRealization& ch);

// True iff every numerically located fixed point lies within tol
// (infinity norm) of some profile in `enumerated`. A brute-force
// cluster with no enumerated match within 2 * grid_step is a grid
// artifact exactly when this still holds.
bool numeric_fixed_points_covered(const ChannelRealization& ch,
                                  const std::vector<ActionProfile>& enumerated,
                                  double tol);

}  // namespace icnash
