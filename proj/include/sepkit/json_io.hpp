#pragma once

#include <json.hpp>

#include "sepkit/harness.hpp"
#include "sepkit/one_chord.hpp"
#include "sepkit/reduction.hpp"
#include "sepkit/separators.hpp"

namespace sepkit {

// All serializers use ordered_json so documents are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const StructuralProfile& p);
Json to_json(const VertexSeparatorRecord& rec);
Json to_json(const EdgeSeparatorRecord& rec);
Json to_json(const OneChordWitness& w);
Json to_json(const InducedCycleWitness& w);
Json to_json(const ContractibilityReport& rep);
Json to_json(const ReductionOutput& r);
Json to_json(const ReductionCheck& c);
Json to_json(const Report& rep);

// Report JSON with the timing fields removed, for determinism comparisons.
Json strip_timings(Json report);

}  // namespace sepkit
