#include "icnash/json_io.hpp"

namespace icnash {

ChannelRealization channel_from_json(const nlohmann::json& j) {
  const auto& gains = j.at("g");
  if (!gains.is_array() || gains.size() != 2) {
    throw std::invalid_argument("\"g\" must be a 2x2x2 array");
  }
  ChannelRealization ch;
  for (int rx = 0; rx < 2; ++rx) {
    const auto& per_tx = gains.at(rx);
    if (!per_tx.is_array() || per_tx.size() != 2) {
      throw std::invalid_argument("\"g\" must be a 2x2x2 array");
    }
    for (int tx = 0; tx < 2; ++tx) {
      const auto& per_ch = per_tx.at(tx);
      if (!per_ch.is_array() || per_ch.size() != 2) {
        throw std::invalid_argument("\"g\" must be a 2x2x2 array");
      }
      for (int s = 0; s < 2; ++s) {
        ch.g[rx][tx][s] = per_ch.at(s).get<double>();
      }
    }
  }
  validate(ch);
  return ch;
}

nlohmann::json channel_to_json(const ChannelRealization& ch) {
  nlohmann::json gains = nlohmann::json::array();
  for (int rx = 0; rx < 2; ++rx) {
    nlohmann::json per_tx = nlohmann::json::array();
    for (int tx = 0; tx < 2; ++tx) {
      per_tx.push_back({ch.g[rx][tx][0], ch.g[rx][tx][1]});
    }
    gains.push_back(per_tx);
  }
  return {{"g", gains}};
}

nlohmann::json pa_nash_set_to_json(const PaNashSet& set) {
  nlohmann::json j;
  j["kind"] = set.kind == PaNashSet::Kind::Finite ? "finite" : "continuum";
  switch (set.type) {
    case Fig1Type::A: j["type"] = "A"; break;
    case Fig1Type::B: j["type"] = "B"; break;
    case Fig1Type::C: j["type"] = "C"; break;
    case Fig1Type::D: j["type"] = "D"; break;
    case Fig1Type::E: j["type"] = "E"; break;
  }
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& ne : set.equilibria) {
    eqs.push_back({ne.alpha1, ne.alpha2});
  }
  j["equilibria"] = eqs;
  if (set.alpha_dagger) {
    j["alpha_dagger"] = {set.alpha_dagger->alpha1, set.alpha_dagger->alpha2};
  } else {
    j["alpha_dagger"] = nullptr;
  }
  return j;
}

nlohmann::json cs_outcome_to_json(const CsOutcome& outcome) {
  nlohmann::json j;
  nlohmann::json payoff = nlohmann::json::array();
  for (int a1 = 0; a1 < 2; ++a1) {
    nlohmann::json per_a2 = nlohmann::json::array();
    for (int a2 = 0; a2 < 2; ++a2) {
      per_a2.push_back({outcome.payoff[a1][a2][0], outcome.payoff[a1][a2][1]});
    }
    payoff.push_back(per_a2);
  }
  j["payoff"] = payoff;
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& ne : outcome.equilibria) {
    eqs.push_back({ne.alpha1, ne.alpha2});
  }
  j["equilibria"] = eqs;
  j["tie"] = outcome.tie;
  return j;
}

}  // namespace icnash
