#pragma once

#include <json.hpp>

#include "lierank/classifier.hpp"
#include "lierank/descriptor.hpp"
#include "lierank/reps.hpp"

namespace lierank {

using json = nlohmann::json;

/// Doubled coordinates, so every entry is an integer.
json to_json(const HalfIntVector& v);
HalfIntVector vector_from_json(const json& j);

/// Sorted array of roots.
json to_json(const RootSet& s);
RootSet root_set_from_json(const json& j);

/// Array of [coords, multiplicity] pairs in weight order.
json to_json(const WeightMultiset& w);
WeightMultiset weight_multiset_from_json(const json& j);

json to_json(const WitnessChain& w);
/// {group, subgroup, kind, case_label, chi, witness, notes}
json to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

json to_json(const Resolution& r);

/// One enumerated subgroup: descriptor, key, chi, and optionally its roots.
json to_json(const EmbeddedSubgroup& h, bool with_roots);

json to_json(const TableReport& r);

VerdictKind verdict_kind_from_string(const std::string& s);
Rule rule_from_string(const std::string& s);

}  // namespace lierank
