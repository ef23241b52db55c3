#pragma once

// JSON conversion shared by certificate and report serialisation. Not installed.

#include <nlohmann/json.hpp>

#include "mf/certificate.hpp"

namespace mf::detail {

using Json = nlohmann::ordered_json;

Json certificate_to_json(const Certificate& c);
/// Schema check only; the caller decides whether to revalidate.
Certificate certificate_from_json(const Json& j);

}  // namespace mf::detail
