#pragma once

#include <array>
#include <vector>

#include "icnash/channel_model.hpp"

namespace icnash {

// Binary action profile of the channel-selection game: alpha_k in {0,1}.
struct CsProfile {
  int alpha1{};
  int alpha2{};

  ActionProfile as_action_profile() const {
    return {static_cast<double>(alpha1), static_cast<double>(alpha2)};
  }
  bool operator==(const CsProfile&) const = default;
};

// payoff[a1][a2][k]: utility of player k at (alpha_1, alpha_2) = (a1, a2).
using CsPayoffTable = std::array<std::array<std::array<double, 2>, 2>, 2>;

struct CsOutcome {
  CsPayoffTable payoff{};
  std::vector<CsProfile> equilibria;
  // True when some deviation comparison is an exact tie; the weak
  // (enumeration) and strict (closed-form) NE notions can then disagree.
  bool tie = false;
};

CsPayoffTable payoff_table(const ChannelRealization& ch);

// All profiles in {0,1}^2 where neither player strictly gains by
// flipping its bit (weak-inequality deviation test).
CsOutcome enumerate_cs_nash(const ChannelRealization& ch);

// Closed-form strict-inequality NE test for the given binary profile.
bool cs_ne_conditions(const ChannelRealization& ch, CsProfile profile);

// Finds one NE via the exhaustive decision tree (symmetrized by channel
// relabeling when g[0][0][0] < g[0][0][1]). Ties break toward channel 1,
// then toward profile (1,0).
CsProfile find_one_cs_nash(const ChannelRealization& ch);

}  // namespace icnash
