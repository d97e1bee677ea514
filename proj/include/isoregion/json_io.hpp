#pragma once

#include "json.hpp"

#include "isoregion/census.hpp"
#include "isoregion/pdcode.hpp"
#include "isoregion/regiongraph.hpp"
#include "isoregion/suite.hpp"
#include "isoregion/warping.hpp"

namespace isoregion {

using Json = nlohmann::json;

// Regions sorted by smallest dart; darts as [crossing, slot].
Json regions_json(const LinkProjection& L, const RegionSet& rs);
Json gon_census_json(const GonCensus& census);

void to_json(Json& j, const Dart& d);
void to_json(Json& j, const ValidationReport& r);
void to_json(Json& j, const RegionGraph& g);
void to_json(Json& j, const IGenPolynomial& f);
void to_json(Json& j, const WarpingLabeling& w);
void to_json(Json& j, const WarpingStats& s);
void to_json(Json& j, const WeldedBounds& b);
void to_json(Json& j, const A2Bounds& b);
void to_json(Json& j, const CensusRecord& r);
void to_json(Json& j, const CheckResult& r);

}  // namespace isoregion
