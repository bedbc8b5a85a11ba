#pragma once

// JSON and plain-text renderings of the library's results. Integers that fit
// in 64 bits are JSON numbers, larger ones decimal strings; rationals are
// strings "p/q" (or "p"), infinity is "inf" except in Farey output ("-1/0").

#include <string>

#include "json.hpp"

#include "sfill/embedding.hpp"
#include "sfill/farey.hpp"
#include "sfill/gompf.hpp"
#include "sfill/plumbing.hpp"
#include "sfill/seifert.hpp"

namespace sfill {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
Json to_json(const MobiusMap& map);
Json to_json(const GompfReport& report);
Json to_json(const FareyConfiguration& config);
Json to_json(const RealizabilitySearch& search);
Json to_json(const SpecialTypeReport& report);
Json to_json(const RealizableConstruction& construction);
Json to_json(const SearchCertificate& cert);
Json to_json(const StarGraph& graph);
Json to_json(const IntersectionLattice& lattice);
Json to_json(const Verdict& verdict);

BigInt bigint_from_json(const Json& j);

// {"central": e0, "legs": [[...], ...]} or {"matrix": [[...], ...]}.
// DomainError on malformed documents.
IntersectionLattice lattice_from_json(const Json& j);
StarGraph graph_from_json(const Json& j);
SearchCertificate certificate_from_json(const Json& j);

std::string describe(const Verdict& verdict);
std::string describe(const GompfReport& report);
std::string describe(const SearchCertificate& cert);

}  // namespace sfill
