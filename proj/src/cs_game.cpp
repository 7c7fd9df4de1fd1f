#include "icnash/cs_game.hpp"

namespace icnash {

CsPayoffTable payoff_table(const ChannelRealization& ch) {
  CsPayoffTable table{};
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int a2 = 0; a2 < 2; ++a2) {
      const ActionProfile profile{static_cast<double>(a1), static_cast<double>(a2)};
      table[a1][a2][0] = utility(ch, 0, profile);
      table[a1][a2][1] = utility(ch, 1, profile);
    }
  }
  return table;
}

CsOutcome enumerate_cs_nash(const ChannelRealization& ch) {
  CsOutcome out;
  out.payoff = payoff_table(ch);
  for (int a2 = 0; a2 < 2; ++a2) {
    if (out.payoff[0][a2][0] == out.payoff[1][a2][0]) out.tie = true;
  }
  for (int a1 = 0; a1 < 2; ++a1) {
    if (out.payoff[a1][0][1] == out.payoff[a1][1][1]) out.tie = true;
  }
  // Channel-1-first listing order: (1,1), (1,0), (0,1), (0,0).
  for (int a1 = 1; a1 >= 0; --a1) {
    for (int a2 = 1; a2 >= 0; --a2) {
      const bool p1_ok = out.payoff[a1][a2][0] >= out.payoff[1 - a1][a2][0];
      const bool p2_ok = out.payoff[a1][a2][1] >= out.payoff[a1][1 - a2][1];
      if (p1_ok && p2_ok) {
        out.equilibria.push_back({a1, a2});
      }
    }
  }
  return out;
}

bool cs_ne_conditions(const ChannelRealization& ch, CsProfile profile) {
  const auto& g = ch.g;
  if (profile.alpha1 == 1 && profile.alpha2 == 1) {
    return g[0][0][0] > g[0][0][1] * (1.0 + g[0][1][0]) &&
           g[1][1][0] > g[1][1][1] * (1.0 + g[1][0][0]);
  }
  if (profile.alpha1 == 0 && profile.alpha2 == 0) {
    return g[0][0][1] > g[0][0][0] * (1.0 + g[0][1][1]) &&
           g[1][1][1] > g[1][1][0] * (1.0 + g[1][0][1]);
  }
  if (profile.alpha1 == 0 && profile.alpha2 == 1) {
    return g[0][0][1] * (1.0 + g[0][1][0]) > g[0][0][0] &&
           g[1][1][0] * (1.0 + g[1][0][1]) > g[1][1][1];
  }
  return g[0][0][0] * (1.0 + g[0][1][1]) > g[0][0][1] &&
         g[1][1][1] * (1.0 + g[1][0][0]) > g[1][1][0];
}

namespace {

// Exhaustive decision tree under the assumption g[0][0][0] >= g[0][0][1].
// Tie directions are chosen so the returned profile is always a weak NE.
CsProfile search_tree(const ChannelRealization& ch) {
  const auto& g = ch.g;
  if (g[1][1][1] >= g[1][1][0]) return {1, 0};
  if (g[1][1][0] <= g[1][1][1] * (1.0 + g[1][0][0])) return {1, 0};
  if (g[0][0][0] >= g[0][0][1] * (1.0 + g[0][1][0])) return {1, 1};
  // Player 2 insists on channel 1 even shared and player 1 yields; player
  // 2's stay condition follows from the failed branch above.
  return {0, 1};
}

}  // namespace

CsProfile find_one_cs_nash(const ChannelRealization& ch) {
  if (ch.g[0][0][0] >= ch.g[0][0][1]) {
    return search_tree(ch);
  }
  const CsProfile mirrored = search_tree(swap_channels(ch));
  return {1 - mirrored.alpha1, 1 - mirrored.alpha2};
}

}  // namespace icnash
