#pragma once

#include "fmckit/aut_groups.hpp"
#include "fmckit/blowup.hpp"
#include "fmckit/chow.hpp"
#include "fmckit/cone.hpp"
#include "fmckit/fibrations.hpp"
#include "fmckit/stable_maps.hpp"

#include <json.hpp>

#include <stdexcept>

namespace fmckit {

using Json = nlohmann::json;

// Malformed input document.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);
Json rational_to_json(const Rational& r);  // integer or "p/q"

Json subset_to_json(const IndexSubset& s);
IndexSubset subset_from_json(int n, const Json& j);

Json to_json(const BlowupSchedule& s);
Json to_json(const SquareFreeClass& c);
Json to_json(const RationalCone& c);
Json to_json(const NumericalClass& c);

Json to_json(const ProjPoint& p);
Json to_json(const MobiusMap& m);
Json to_json(const StableMapTree& t);
Json to_json(const StableCurveTree& t);
StableMapTree map_tree_from_json(const Json& j);
MobiusMap mobius_from_json(const Json& j);

Json to_json(const PencilDescriptor& p);
Json to_json(const ForgetfulDescriptor& f);
PencilDescriptor pencil_from_json(int n, const Json& j);

Json to_json(const GroupExpr& g);
Json to_json(const GroupOrder& o);
SpaceDescriptor space_from_json(const Json& j);

}  // namespace fmckit
