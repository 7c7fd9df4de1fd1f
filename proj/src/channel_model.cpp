#include "icnash/channel_model.hpp"

#include <cmath>

namespace icnash {

void validate(const ChannelRealization& ch) {
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      for (int s = 0; s < 2; ++s) {
        const double v = ch.g[j][k][s];
        if (!std::isfinite(v) || v < 0.0) {
          throw DegenerateChannelError("channel gain must be finite and nonnegative");
        }
      }
    }
  }
  for (int k = 0; k < 2; ++k) {
    for (int s = 0; s < 2; ++s) {
      if (ch.g[k][k][s] <= 0.0) {
        throw DegenerateChannelError("direct gain must be strictly positive");
      }
    }
  }
}

ChannelRealization sample_channel(Rng& rng, double snr) {
  if (!(snr > 0.0) || !std::isfinite(snr)) {
    throw std::invalid_argument("snr must be positive and finite");
  }
  ChannelRealization ch;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      for (int s = 0; s < 2; ++s) {
        double e = rng.next_exp();
        while (j == k && e <= 0.0) {  // zero-probability degenerate draw
          e = rng.next_exp();
        }
        ch.g[j][k][s] = snr * e;
      }
    }
  }
  return ch;
}

double utility(const ChannelRealization& ch, int k, ActionProfile profile) {
  const int o = 1 - k;
  const double ak = profile.alpha(k);
  const double ao = profile.alpha(o);
  const double sinr1 = ak * ch.g[k][k][0] / (1.0 + ao * ch.g[k][o][0]);
  const double sinr2 = (1.0 - ak) * ch.g[k][k][1] / (1.0 + (1.0 - ao) * ch.g[k][o][1]);
  return std::log2(1.0 + sinr1) + std::log2(1.0 + sinr2);
}

double sum_utility(const ChannelRealization& ch, ActionProfile profile) {
  return utility(ch, 0, profile) + utility(ch, 1, profile);
}

InterferenceRatios interference_ratios(const ChannelRealization& ch) {
  InterferenceRatios r;
  for (int k = 0; k < 2; ++k) {
    for (int s = 0; s < 2; ++s) {
      if (ch.g[k][k][s] <= 0.0) {
        throw DegenerateChannelError("direct gain must be strictly positive");
      }
      r.rho[k][s] = ch.g[k][1 - k][s] / ch.g[k][k][s];
    }
  }
  return r;
}

ChannelRealization swap_channels(const ChannelRealization& ch) {
  ChannelRealization out;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      out.g[j][k][0] = ch.g[j][k][1];
      out.g[j][k][1] = ch.g[j][k][0];
    }
  }
  return out;
}

ChannelRealization swap_players(const ChannelRealization& ch) {
  ChannelRealization out;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      for (int s = 0; s < 2; ++s) {
        out.g[j][k][s] = ch.g[1 - j][1 - k][s];
      }
    }
  }
  return out;
}

}  // namespace icnash
