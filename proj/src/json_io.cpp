#include "lierank/json_io.hpp"

#include "lierank/errors.hpp"

namespace lierank {

json to_json(const HalfIntVector& v) { return v.doubled(); }

HalfIntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw Error("vector must be a JSON array");
  std::vector<int> d;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error("coordinates must be integers");
    d.push_back(x.get<int>());
  }
  return HalfIntVector(std::move(d));
}

json to_json(const RootSet& s) {
  json a = json::array();
  for (const auto& r : s) a.push_back(to_json(r));
  return a;
}

RootSet root_set_from_json(const json& j) {
  std::vector<HalfIntVector> vs;
  for (const auto& x : j) vs.push_back(vector_from_json(x));
  return make_root_set(std::move(vs));
}

json to_json(const WeightMultiset& w) {
  json a = json::array();
  for (const auto& [wt, m] : w.entries) a.push_back(json::array({to_json(wt), m}));
  return a;
}

WeightMultiset weight_multiset_from_json(const json& j) {
  WeightMultiset w;
  for (const auto& e : j) {
    auto v = vector_from_json(e.at(0));
    w.ambient_dim = v.dim();
    w.add(v, e.at(1).get<int>());
  }
  return w;
}

VerdictKind verdict_kind_from_string(const std::string& s) {
  for (auto k : {VerdictKind::InvariantACS, VerdictKind::StablyTrivial,
                 VerdictKind::WeaklyComplexOnly, VerdictKind::NotWeaklyComplex}) {
    if (to_string(k) == s) return k;
  }
  throw Error("unknown verdict kind " + s);
}

Rule rule_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(Rule::BorelSiebenthalList); ++i) {
    auto r = static_cast<Rule>(i);
    if (to_string(r) == s) return r;
  }
  throw Error("unknown rule " + s);
}

json to_json(const WitnessChain& w) {
  json a = json::array();
  for (const auto& s : w.steps) {
    a.push_back({{"rule", to_string(s.rule)}, {"chain", s.chain}, {"note", s.note}});
  }
  return a;
}

json to_json(const Verdict& v) {
  return {{"group", v.group},           {"subgroup", v.subgroup},
          {"kind", to_string(v.kind)},  {"case_label", v.case_label},
          {"chi", v.chi},               {"witness", to_json(v.witness)},
          {"notes", v.notes}};
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.group = j.at("group").get<std::string>();
  v.subgroup = j.at("subgroup").get<std::string>();
  v.kind = verdict_kind_from_string(j.at("kind").get<std::string>());
  v.case_label = j.at("case_label").get<std::string>();
  v.chi = j.at("chi").get<std::uint64_t>();
  for (const auto& s : j.at("witness")) {
    WitnessStep st;
    st.rule = rule_from_string(s.at("rule").get<std::string>());
    st.chain = s.at("chain").get<std::vector<std::string>>();
    st.note = s.at("note").get<std::string>();
    v.witness.steps.push_back(std::move(st));
  }
  if (j.contains("notes")) v.notes = j.at("notes").get<std::vector<std::string>>();
  return v;
}

json to_json(const Resolution& r) {
  json j = to_json(r.verdict);
  j["candidates"] = r.candidates;
  j["ambiguous"] = r.ambiguous;
  j["alternatives"] = r.alternatives;
  return j;
}

json to_json(const EmbeddedSubgroup& h, bool with_roots) {
  auto cf = conjugacy_canonical_form(h);
  json j = {{"descriptor", h.descriptor.str()},
            {"key", cf.key},
            {"roots_count", h.subsystem.size()},
            {"ambiguous_mirror", cf.ambiguous_mirror}};
  if (h.parent) {
    GroupDescriptor g;
    g.factors.push_back(Factor::simple(*h.parent->type));
    try {
      j["chi"] = euler_characteristic(g, h.descriptor);
    } catch (const Error&) {
      j["chi"] = nullptr;
    }
  }
  if (with_roots) j["roots"] = to_json(h.subsystem);
  return j;
}

json to_json(const TableReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json v = to_json(e.verdict);
    v["key"] = e.key;
    entries.push_back(std::move(v));
  }
  json counts = json::object();
  for (auto k : {VerdictKind::InvariantACS, VerdictKind::StablyTrivial,
                 VerdictKind::WeaklyComplexOnly, VerdictKind::NotWeaklyComplex}) {
    counts[to_string(k)] = r.count(k);
  }
  return {{"rank_cap", r.rank_cap},
          {"counts", counts},
          {"unclassified", r.unclassified},
          {"entries", entries}};
}

}  // namespace lierank
