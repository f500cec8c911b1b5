#pragma once

#include <nlohmann/json.hpp>

#include "sylvester/bounds.hpp"
#include "sylvester/eigcore.hpp"
#include "sylvester/interval.hpp"
#include "sylvester/nep.hpp"
#include "sylvester/oracle.hpp"

namespace sylvester {

// Insertion-ordered so the output reads n_plus, n_zero, n_minus.
using Json = nlohmann::ordered_json;

void to_json(Json& j, const Inertia3& v);
void from_json(const Json& j, Inertia3& v);
void to_json(Json& j, const Inertia5& v);
void from_json(const Json& j, Inertia5& v);
void to_json(Json& j, const Tolerance& v);
void from_json(const Json& j, Tolerance& v);
void to_json(Json& j, const Bound& v);
void from_json(const Json& j, Bound& v);
void to_json(Json& j, const InertiaCombinations& v);
void from_json(const Json& j, InertiaCombinations& v);
void to_json(Json& j, const BoundsReport& v);
void from_json(const Json& j, BoundsReport& v);
void to_json(Json& j, const CountRange& v);
void from_json(const Json& j, CountRange& v);
void to_json(Json& j, const IntervalReport& v);
void from_json(const Json& j, IntervalReport& v);
void to_json(Json& j, const EigenRecord& v);
void from_json(const Json& j, EigenRecord& v);
void to_json(Json& j, const OracleReport& v);
void from_json(const Json& j, OracleReport& v);

void to_json(Json& j, const ParityResult& v);
void to_json(Json& j, const NepLowerResult& v);
void to_json(Json& j, const DefiniteCheck& v);
void to_json(Json& j, const EndpointLower& v);

}  // namespace sylvester
