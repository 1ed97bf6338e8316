#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "renyi/codes.hpp"
#include "renyi/prob.hpp"
#include "renyi/region.hpp"
#include "renyi/wiretap.hpp"

namespace renyi {

using json = nlohmann::json;

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Pmf pmf_from_json(const json& j);
json to_json(const Pmf& p);
Channel channel_from_json(const json& j);
json to_json(const Channel& w);
WiretapChannel wiretap_from_json(const json& j);

json to_json(const RateRegion& r, RegionForm form);
RateRegion region_from_json(const json& j, RegionForm* form = nullptr);

json to_json(const EnsembleEstimate& e, int n, long m, double s, std::uint64_t seed);

// shortest text that parses back to the same double
std::string format_double(double v);

}  // namespace renyi
