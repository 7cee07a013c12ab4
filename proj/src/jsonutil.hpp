#pragma once

// Internal JSON emission helpers shared by the report builders.

#include "cobordkit/bigint.hpp"
#include "cobordkit/partition.hpp"

#include "json.hpp"

namespace cobordkit {

using njson = nlohmann::ordered_json;

// Emits an Int as a JSON integer when it fits, as a decimal string otherwise.
inline njson json_int(const Int& v) {
    if (v.fits_slong_p()) return njson(static_cast<std::int64_t>(v.get_si()));
    return njson(to_decimal(v));
}

inline njson partition_json(const Partition& I) {
    njson arr = njson::array();
    for (const Int& p : I.parts()) arr.push_back(json_int(p));
    return arr;
}

} // namespace cobordkit
