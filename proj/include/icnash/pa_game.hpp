#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "icnash/channel_model.hpp"

namespace icnash {

// Player k's unclamped best response alpha_k = slope * alpha_other +
// intercept. The slope is always <= 0.
struct BestResponseLine {
  double slope{};
  double intercept{};
};

// The two best-response lines expressed in the (alpha_2, alpha_1) plane,
// alpha_1 = m_k * alpha_2 + q_k. Line 2 is undefined when player 2 sees
// no interference (slope 0 in its own coordinates).
struct GammaLines {
  double m1{};
  double q1{};
  double m2{};
  double q2{};
  bool line2_defined = true;
};

// Geometric cases for the equilibrium set:
//   A: unique NE with some player at a boundary action
//   B: unique interior NE
//   C: exactly two NE (zero probability under continuous fading)
//   D: exactly three NE
//   E: continuum of NE (zero probability)
enum class Fig1Type { A, B, C, D, E };

struct PaNashSet {
  enum class Kind { Finite, Continuum };

  Kind kind = Kind::Finite;
  // Finite: the complete equilibrium list (1..3 profiles).
  // Continuum: the two segment endpoints.
  std::vector<ActionProfile> equilibria;
  std::optional<std::pair<ActionProfile, ActionProfile>> segment;
  Fig1Type type = Fig1Type::B;
  // Intersection of the unclamped best-response lines, absent when they
  // are parallel (c1*c2 == 1).
  std::optional<ActionProfile> alpha_dagger;
  // Set for types C and E, which occur with probability zero under
  // continuous channel draws.
  bool zero_probability_flag = false;
};

struct UniquenessConditions {
  bool cond_a = false;  // (rho1 sum)(rho2 sum) < 4
  bool cond_b = false;  // line intersection absent or outside [0,1]^2
};

BestResponseLine br_line(const ChannelRealization& ch, int k);

// clamp_[0,1](slope * alpha_other + intercept); the unique maximizer of
// player k's utility for the given opponent action.
double best_response(const ChannelRealization& ch, int k, double alpha_other);

GammaLines gamma_lines(const BestResponseLine& br1, const BestResponseLine& br2);

// Intersection of the two unclamped lines; absent when c1*c2 == 1 within
// relative tolerance. Components are not range-restricted.
std::optional<ActionProfile> intersect_br_lines(const BestResponseLine& br1,
                                                const BestResponseLine& br2);

// Exact enumeration of all fixed points of the clamped affine system via
// the composed one-dimensional map f = BR_1 o BR_2 (piecewise affine,
// nondecreasing, at most one non-flat piece), solved piece by piece.
PaNashSet enumerate_pa_nash(const ChannelRealization& ch);

UniquenessConditions uniqueness_conditions(const ChannelRealization& ch);

}  // namespace icnash
