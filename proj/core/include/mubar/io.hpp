#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mubar/diagrams.hpp"
#include "mubar/milnor.hpp"
#include "mubar/words.hpp"

namespace mubar {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "mubar/v1";

Json load_json_file(const std::string& path);

// {"strands": m, "word": [1, -2, ...]}
Braid braid_from_json(const Json& j);
Json braid_to_json(const Braid& b);

// {"m": m, "longitudes": ["X1^-1 X2", ...]}
std::vector<Word> longitudes_from_json(const Json& j);
Json longitudes_to_json(const std::vector<Word>& lams);

// {"components": n, "free_loops": k, "crossings": [[a,b,c,d,"+"], ...]}
LinkDiagram pd_from_json(const Json& j);
Json pd_to_json(const LinkDiagram& d);

// {"schema": ..., "m": m, "q": q, "entries": [{"index": [...], "value": v}]}
Json mu_to_json(const MuTable& t);

// coefficient lists, constant term first; rationals as "p/q" strings when
// not integral
Json series_to_json(const Series1& s);
Json conway_to_json(const ConwayPoly& p);

Json verify_to_json(const VerifyResult& r);

}  // namespace mubar
