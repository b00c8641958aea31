#pragma once

#include "curvess/spectral.hpp"

#include <json.hpp>

namespace curvess::detail {

nlohmann::ordered_json page_to_json(const SSPage& page);
std::string_view provenance_of(const Entry& e);

} // namespace curvess::detail
