#pragma once

#include <json.hpp>

#include "fgl/chern.hpp"
#include "fgl/coeff_ring.hpp"
#include "fgl/cycles.hpp"
#include "fgl/face.hpp"
#include "fgl/series.hpp"
#include "fgl/snc.hpp"

// JSON forms of every value the CLI reads or writes. Output objects keep
// insertion order so serializations are canonical; readers accept any key
// order. Schema errors surface as nlohmann::json exceptions, domain errors as
// DomainError.
namespace fgl::json_io {

using Json = nlohmann::ordered_json;

// [{"coeff":"p/q","monomial":{"A(1,1)":2}}, ...]
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"variables":[..],"order":N,"terms":[{"exponents":[..],"coeff":<poly>}]}
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

// {"dim_bound":d,"terms":[{"c_exponents":[..],"coeff":<poly>}]}
Json to_json(const ChernPolynomial& p);
ChernPolynomial chern_from_json(const Json& j, std::size_t symbols);

// Sorted 1-based index array.
Json to_json(Face f);
Face face_from_json(const Json& j);

// {"ambient_dim":2,"components":[{"name":..,"quasiprojective":..}],"faces":[[1],[2],[1,2]]}
Json to_json(const SncConfiguration& c);
SncConfiguration config_from_json(const Json& j);
MultiplicityVector multiplicities_from_json(const Json& j);

// {"ambient_dim":d,"classes":[{"face":[..],"class":<chern>}]}
Json to_json(const FaceClassVector& v);
FaceClassVector face_classes_from_json(const Json& j, const SncConfiguration& config);

Json to_json(const ValidationReport& report);

// {"name":"Y","dim":2,"smooth":true,"quasiprojective":false,"complete":false[,"nu":k]}
Json to_json(const SpaceLabel& label);
SpaceLabel label_from_json(const Json& j);

Json to_json(const DecoratedCycle& c);
DecoratedCycle cycle_from_json(const Json& j);

// [{"coeff":k,"source":..,"target":..,"bundles":[..]}]; Lazard sums carry a
// polynomial in "coeff".
Json to_json(const CycleSum& z);
Json to_json(const LazardCycleSum& z);
CycleSum cycle_sum_from_json(const Json& j);
LazardCycleSum lazard_cycle_sum_from_json(const Json& j);

Json to_json(const GradedDegree& d);

} // namespace fgl::json_io
