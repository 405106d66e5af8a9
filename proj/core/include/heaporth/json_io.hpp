#pragma once

#include "json.hpp"

#include "heaporth/multipoly.hpp"
#include "heaporth/series.hpp"
#include "heaporth/unipoly.hpp"

namespace heaporth {

// {"terms":[{"coeff":"p/q","powers":{"x":2,"c0":1}}, ...]} in descending term order.
nlohmann::json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const nlohmann::json& j);

// Integer constants become JSON integers, other rational constants "p/q"
// strings, anything else the full polynomial object.
nlohmann::json to_compact_json(const MultiPoly& p);

nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const TruncatedSeries& s);

}  // namespace heaporth
