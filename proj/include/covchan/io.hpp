#pragma once

#include <string>

#include "covchan/channel.hpp"
#include "json.hpp"

namespace covchan {

using Json = nlohmann::json;

// 12 significant digits, shortest form ("%.12g").
std::string format_sig(double x);

// Channel file layout: {"dim": int, "label": string, "kraus": [matrix],
// "meta": object} with each complex entry a finite [re, im] pair.  Signed
// Kraus weights, when present, live under meta.weights.
Json channel_to_json(const Channel& ch, const Json& meta = Json::object());
Channel channel_from_json(const Json& j, Json* meta_out = nullptr);

void write_channel_file(const std::string& path, const Channel& ch,
                        const Json& meta = Json::object());
Channel read_channel_file(const std::string& path, Json* meta_out = nullptr);

// Choi file layout: {"dim": int, "choi": matrix of size dim^2 x dim^2}.
Matrix read_choi_file(const std::string& path, int* dim_out = nullptr);

}  // namespace covchan
