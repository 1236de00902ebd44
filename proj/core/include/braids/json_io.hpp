#pragma once

#include <nlohmann/json.hpp>

#include "braids/boundary.hpp"
#include "braids/braidcplx.hpp"
#include "braids/confspace.hpp"
#include "braids/garside.hpp"
#include "braids/orthoscheme.hpp"
#include "braids/partition.hpp"

namespace braids {

using nlohmann::json;

// All encoders emit canonical orderings; re-reading an emitted value yields
// a structurally equal object. Readers throw DomainError("malformed-json").

json encode(const NoncrossingPartition& pi);
NoncrossingPartition decode_partition(const json& j);

json encode(const Permutation& sigma);
Permutation decode_permutation(const json& j);

json encode(const GarsideElement& g);
GarsideElement decode_element(const json& j);

json encode(const BoundaryWord& w);
BoundaryWord decode_word(const json& j);

json encode(const BoundarySet& b);
BoundarySet decode_boundary_set(const json& j);

json encode(const WrappingProfile& p);
WrappingProfile decode_profile(const json& j);

json encode(const DeltaComplex& x);
DeltaComplex decode_complex(const json& j);

json encode(const CayleyBall& ball);
json encode(const BoundaryBall& ball);

json encode(const ComponentSummary& c);
json encode(const ProductCheckReport& r);

/// Disjoint cycle notation, fixed points omitted; "()" for the identity.
std::string cycle_string(const Permutation& sigma);

}  // namespace braids
