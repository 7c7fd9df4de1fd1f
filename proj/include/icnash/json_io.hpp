#pragma once

#include <string>

#include <json.hpp>

#include "icnash/channel_model.hpp"
#include "icnash/cs_game.hpp"
#include "icnash/pa_game.hpp"

namespace icnash {

// Instance file format: {"g": [[[..],[..]],[[..],[..]]], "label": optional},
// indexed [receiver][transmitter][channel].
ChannelRealization channel_from_json(const nlohmann::json& j);
nlohmann::json channel_to_json(const ChannelRealization& ch);

nlohmann::json pa_nash_set_to_json(const PaNashSet& set);
nlohmann::json cs_outcome_to_json(const CsOutcome& outcome);

}  // namespace icnash
