#include "lierank/classifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "lierank/errors.hpp"
#include "lierank/linalg.hpp"

namespace lierank {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::InvariantACS: return "InvariantACS";
    case VerdictKind::StablyTrivial: return "StablyTrivial";
    case VerdictKind::WeaklyComplexOnly: return "WeaklyComplexOnly";
    case VerdictKind::NotWeaklyComplex: return "NotWeaklyComplex";
  }
  return "?";
}

bool weakly_complex(VerdictKind k) { return k != VerdictKind::NotWeaklyComplex; }

std::string to_string(Rule r) {
  switch (r) {
    case Rule::ProductSplit: return "ProductSplit";
    case Rule::FiberObstruction: return "FiberObstruction";
    case Rule::StackConstruction: return "StackConstruction";
    case Rule::FibConstruction: return "FibConstruction";
    case Rule::OracleQK: return "OracleQK";
    case Rule::OracleInnerSym: return "OracleInnerSym";
    case Rule::OracleE7A7: return "OracleE7A7";
    case Rule::CentralizerCase: return "CentralizerCase";
    case Rule::StablyTrivialTable: return "StablyTrivialTable";
    case Rule::BorelSiebenthalList: return "BorelSiebenthalList";
  }
  return "?";
}

const std::vector<OracleFact>& oracle_fact_table() {
  static const std::vector<OracleFact> table = {
      {Rule::OracleQK,
       "Quaternion-Kaehler symmetric spaces of positive scalar curvature other than "
       "HP^n and Gr2(C^n) are not stably almost complex."},
      {Rule::OracleInnerSym,
       "Irreducible inner symmetric spaces that are neither spheres nor Hermitian "
       "are not stably almost complex."},
      {Rule::OracleE7A7, "E7/(SU(8)/Z2) is not stably almost complex."},
      {Rule::FiberObstruction,
       "For H in H' in G with H maximal in H', a weakly complex structure on G/H "
       "restricts to the fiber H'/H, so an obstructed fiber obstructs G/H."},
  };
  return table;
}

namespace {

std::int64_t max_norm(const RootSet& roots) {
  std::int64_t m = 0;
  for (const auto& a : roots) m = std::max(m, dot4(a, a));
  return m;
}

std::vector<SimpleTypeId> types_of(const RootSet& s) {
  std::vector<SimpleTypeId> out;
  for (const auto& c : decompose(s)) out.push_back(c.type);
  std::sort(out.begin(), out.end());
  return out;
}

std::string types_str(const RootSet& s) {
  auto ts = types_of(s);
  std::string out;
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    if (!out.empty()) out += "x";
    out += ts[i].name();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "1" : out;
}

std::vector<SimpleTypeId> parse_types(std::initializer_list<const char*> names) {
  std::vector<SimpleTypeId> out;
  for (const char* n : names) {
    Series s{};
    switch (n[0]) {
      case 'A': s = Series::A; break;
      case 'B': s = Series::B; break;
      case 'C': s = Series::C; break;
      case 'D': s = Series::D; break;
      case 'E': s = Series::E; break;
      case 'F': s = Series::F; break;
      default: s = Series::G; break;
    }
    out.push_back(SimpleTypeId::make(s, std::atoi(n + 1)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int span_rank(const RootSet& s) {
  if (s.empty()) return 0;
  return linalg::rank(s, static_cast<std::size_t>(s.front().dim()));
}

RootSet intersect(const RootSet& a, const RootSet& b) {
  RootSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string label_for(const RootSystem& g, const RootSet& roots) {
  return describe(g, roots).str();
}

WitnessStep step(Rule r, const RootSystem& g, std::vector<RootSet> subs, std::string note) {
  WitnessStep s;
  s.rule = r;
  for (const auto& x : subs) s.chain.push_back(label_for(g, x));
  s.subsystems = std::move(subs);
  s.note = std::move(note);
  return s;
}

std::optional<WitnessChain> find_obstruction(const RootSystem& g, const EmbeddedSubgroup& h) {
  if (is_maximal_in(h.subsystem, g.roots, g.roots)) {
    if (auto r = fiber_obstruction(g.roots, h.subsystem)) {
      WitnessChain w;
      w.steps.push_back(step(*r, g, {h.subsystem, g.roots},
                             g.label + "/" + types_str(h.subsystem)));
      return w;
    }
  }
  for (const auto& over : minimal_overgroups(h)) {
    if (over.subsystem == g.roots) continue;
    for (const auto& comp : decompose(over.subsystem)) {
      RootSet l = intersect(h.subsystem, comp.roots);
      if (l == comp.roots) continue;
      auto r = fiber_obstruction(comp.roots, l);
      if (!r) continue;
      std::string fiber = comp.type.name() + "/" + types_str(l);
      WitnessChain w;
      w.steps.push_back(step(Rule::FiberObstruction, g,
                             {h.subsystem, over.subsystem, g.roots}, "fiber " + fiber));
      WitnessStep o;
      o.rule = *r;
      o.chain = {types_str(l), comp.type.name()};
      o.subsystems = {l, comp.roots};
      o.note = fiber;
      w.steps.push_back(std::move(o));
      return w;
    }
  }
  return std::nullopt;
}

std::uint64_t chi_of(const RootSystem& g, const RootSet& h) {
  std::uint64_t wh = 1;
  for (const auto& t : types_of(h)) wh *= weyl_order(t);
  std::uint64_t wg = 1;
  for (const auto& t : types_of(g.roots)) wg *= weyl_order(t);
  return wg / wh;
}

/// Overgroup of h among the minimal ones whose types match.
std::optional<EmbeddedSubgroup> overgroup_of_type(const EmbeddedSubgroup& h,
                                                   const std::vector<SimpleTypeId>& types) {
  for (auto& over : minimal_overgroups(h)) {
    if (types_of(over.subsystem) == types) return over;
  }
  return std::nullopt;
}

bool is_centralizer_in(const RootSet& h, const RootSet& ambient_roots) {
  RootSystem sys;
  sys.roots = ambient_roots;
  sys.ambient_dim = ambient_roots.front().dim();
  sys.rank = span_rank(ambient_roots);
  auto comp = cartan_complement(sys, h);
  RootSet cent;
  for (const auto& a : ambient_roots) {
    bool ok = std::all_of(comp.begin(), comp.end(),
                          [&](const HalfIntVector& d) { return dot4(a, d) == 0; });
    if (ok) cent.push_back(a);
  }
  return cent == h;
}

void add_consistency_notes(const RootSystem& g, const EmbeddedSubgroup& h, Verdict& v) {
  if (v.kind == VerdictKind::InvariantACS && !invariant_acs_exists(g, h)) {
    v.notes.push_back("conflict: no invariant almost complex structure at weight level");
  }
  if (weakly_complex(v.kind)) {
    if (auto w = find_obstruction(g, h)) {
      v.notes.push_back("conflict: fiber obstruction " + w->steps.back().note);
    }
  }
}

Verdict classify_semisimple(const SimpleTypeId& gt, const RootSystem& g,
                            const EmbeddedSubgroup& h, Verdict v) {
  const auto types = types_of(h.subsystem);
  if (is_maximal_in(h.subsystem, g.roots, g.roots) && !symmetric_pair(g.roots, h.subsystem)) {
    v.kind = VerdictKind::InvariantACS;
    v.case_label = "maximal";
    v.witness.steps.push_back(step(Rule::BorelSiebenthalList, g, {h.subsystem, g.roots},
                                   g.label + "/" + types_str(h.subsystem)));
    return v;
  }
  if (gt.series == Series::E && gt.rank == 8) {
    const std::pair<std::vector<SimpleTypeId>, std::vector<SimpleTypeId>> fib_cases[] = {
        {parse_types({"A1", "A2", "A5"}), parse_types({"A1", "E7"})},
        {parse_types({"A2", "A2", "A2", "A2"}), parse_types({"A2", "E6"})},
    };
    for (std::size_t i = 0; i < 2; ++i) {
      if (types != fib_cases[i].first) continue;
      v.kind = VerdictKind::InvariantACS;
      v.case_label = i == 0 ? "fibered-e7" : "fibered-e6";
      auto over = overgroup_of_type(h, fib_cases[i].second);
      if (!over) throw Unclassified("no " + types_str(h.subsystem) + " overgroup found");
      v.witness.steps.push_back(step(Rule::FibConstruction, g,
                                     {h.subsystem, over->subsystem, g.roots},
                                     "base " + types_str(over->subsystem)));
      add_consistency_notes(g, h, v);
      return v;
    }
  }
  auto lr = long_roots(g.roots);
  if (h.subsystem == lr && lr != g.roots) {
    v.kind = VerdictKind::StablyTrivial;
    if (gt.series == Series::B || (gt.series == Series::C && gt.rank == 2)) {
      v.case_label = "stably-trivial-b";
    } else if (gt.series == Series::C) {
      v.case_label = "stably-trivial-c";
    } else {
      v.case_label = "stably-trivial-f";
    }
    v.witness.steps.push_back(step(Rule::StablyTrivialTable, g, {h.subsystem, g.roots},
                                   g.label + "/" + types_str(h.subsystem)));
    return v;
  }
  auto w = find_obstruction(g, h);
  if (!w) throw Unclassified(g.label + "/" + h.descriptor.str());
  v.kind = VerdictKind::NotWeaklyComplex;
  v.case_label = "obstructed";
  v.witness = std::move(*w);
  return v;
}

Verdict classify_reductive(const SimpleTypeId& gt, const RootSystem& g,
                           const EmbeddedSubgroup& h, Verdict v) {
  if (is_centralizer_of_torus(g, h)) {
    v.kind = VerdictKind::InvariantACS;
    v.case_label = "centralizer";
    v.witness.steps.push_back(
        step(Rule::CentralizerCase, g, {h.subsystem, g.roots}, "coadjoint orbit"));
    return v;
  }
  auto hp = centralizer_of_torus(g, h.cartan_complement);
  std::vector<std::pair<Component, RootSet>> diff;
  for (auto& comp : decompose(hp.subsystem)) {
    RootSet l = intersect(h.subsystem, comp.roots);
    if (l != comp.roots) diff.emplace_back(std::move(comp), std::move(l));
  }
  if (diff.size() == 1) {
    const auto& [f, l] = diff.front();
    const auto ltypes = types_of(l);
    bool fib = (f.type == SimpleTypeId{Series::E, 7} && ltypes == parse_types({"A2", "A5"})) ||
               (f.type == SimpleTypeId{Series::E, 6} && ltypes == parse_types({"A2", "A2", "A2"}));
    if (fib) {
      v.kind = VerdictKind::InvariantACS;
      v.case_label = "fibered-centralizer";
      v.witness.steps.push_back(step(Rule::FibConstruction, g,
                                     {h.subsystem, hp.subsystem, g.roots},
                                     "fiber " + f.type.name() + "/" + types_str(l)));
      add_consistency_notes(g, h, v);
      return v;
    }
    auto flr = long_roots(f.roots);
    if (l == flr && flr != f.roots && f.type.rank >= 2) {
      auto glr = long_roots(g.roots);
      if (gt.series == Series::B && f.type.series == Series::B) {
        v.kind = VerdictKind::WeaklyComplexOnly;
        v.case_label = "stacked-b";
      } else if (gt.series == Series::C && f.type.series != Series::G) {
        v.kind = VerdictKind::WeaklyComplexOnly;
        v.case_label = "stacked-c";
      } else if (gt.series == Series::F) {
        v.kind = VerdictKind::WeaklyComplexOnly;
        v.case_label = "stacked-f";
        if (f.type != SimpleTypeId{Series::B, 2} && f.type != SimpleTypeId{Series::C, 3}) {
          v.notes.push_back("conflict: centralizer of the centre is " + hp.descriptor.str() +
                            ", outside the listed pairs; weakly complex through " +
                            types_str(glr));
        }
      }
      if (!v.case_label.empty()) {
        if (v.case_label == "stacked-c") {
          v.witness.steps.push_back(step(Rule::CentralizerCase, g, {hp.subsystem, g.roots},
                                         "base coadjoint orbit"));
          WitnessStep st;
          st.rule = Rule::StablyTrivialTable;
          st.chain = {types_str(l), f.type.name()};
          st.subsystems = {l, f.roots};
          st.note = "fiber " + f.type.name() + "/" + types_str(l);
          v.witness.steps.push_back(std::move(st));
        } else {
          if (!is_subset(h.subsystem, glr) || !is_centralizer_in(h.subsystem, glr)) {
            throw Unclassified("stack construction fails for " + h.descriptor.str());
          }
          v.witness.steps.push_back(step(Rule::StackConstruction, g,
                                         {h.subsystem, glr, g.roots},
                                         "centralizer in " + types_str(glr)));
        }
        return v;
      }
    }
  }
  auto w = find_obstruction(g, h);
  if (!w) throw Unclassified(g.label + "/" + h.descriptor.str());
  v.kind = VerdictKind::NotWeaklyComplex;
  v.case_label = "obstructed";
  v.witness = std::move(*w);
  return v;
}

}  // namespace

RootSet long_roots(const RootSet& roots) {
  auto m = max_norm(roots);
  RootSet out;
  for (const auto& a : roots) {
    if (dot4(a, a) == m) out.push_back(a);
  }
  return out;
}

bool symmetric_pair(const RootSet& f, const RootSet& l) {
  RootSet m = set_difference(f, l);
  auto lookup = make_lookup(m);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (lookup.count(m[i] + m[j])) return false;
    }
  }
  return true;
}

std::optional<Rule> fiber_obstruction(const RootSet& f, const RootSet& l) {
  if (l == f || !is_subset(l, f)) return std::nullopt;
  if (span_rank(l) != span_rank(f)) return std::nullopt;  // Hermitian
  if (!is_maximal_in(l, f, f)) return std::nullopt;
  if (!symmetric_pair(f, l)) return std::nullopt;
  auto lr = long_roots(f);
  if (l == lr && lr != f) return std::nullopt;  // even sphere
  auto comps = decompose(f);
  if (comps.size() != 1) return std::nullopt;
  const auto ftype = comps.front().type;
  if (ftype == SimpleTypeId{Series::E, 7} && types_of(l) == parse_types({"A7"})) {
    return Rule::OracleE7A7;
  }
  // real Grassmannians go through the inner symmetric fact
  if (ftype.series == Series::B || ftype.series == Series::D) return Rule::OracleInnerSym;
  const auto longest = max_norm(f);
  for (const auto& a : l) {
    if (dot4(a, a) != longest) continue;
    RootSet wolf = orthogonal_filter(f, a);
    wolf.push_back(a);
    wolf.push_back(-a);
    std::sort(wolf.begin(), wolf.end());
    if (wolf == l && f.size() - l.size() >= 8) return Rule::OracleQK;
  }
  return Rule::OracleInnerSym;
}

Verdict classify_simple(SimpleTypeId gt, const EmbeddedSubgroup& h) {
  const RootSystem& g = realize(gt);
  if (h.parent == nullptr || h.parent->roots != g.roots) {
    throw DimensionMismatch("subgroup is not embedded in " + gt.name());
  }
  Verdict v;
  v.group = gt.name();
  v.subgroup = h.descriptor.str();
  v.chi = chi_of(g, h.subsystem);
  if (h.subsystem == g.roots) {
    v.kind = VerdictKind::InvariantACS;
    v.case_label = "trivial";
    v.witness.steps.push_back(step(Rule::CentralizerCase, g, {g.roots}, "H = G"));
    return v;
  }
  if (h.cartan_complement.empty()) return classify_semisimple(gt, g, h, std::move(v));
  return classify_reductive(gt, g, h, std::move(v));
}

WitnessChain witness_chain(SimpleTypeId g, const EmbeddedSubgroup& h, const Verdict& v) {
  auto fresh = classify_simple(g, h);
  if (fresh.kind != v.kind || fresh.case_label != v.case_label) {
    throw Error("verdict does not match " + g.name() + "/" + h.descriptor.str());
  }
  return fresh.witness;
}

bool replay_witness(const RootSystem& g, const WitnessChain& w) {
  if (w.steps.empty()) return false;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& s = w.steps[i];
    const auto& subs = s.subsystems;
    for (std::size_t k = 0; k + 1 < subs.size(); ++k) {
      if (!is_subset(subs[k], subs[k + 1])) return false;
    }
    switch (s.rule) {
      case Rule::FiberObstruction: {
        if (subs.size() != 3 || i + 1 >= w.steps.size()) return false;
        const auto& o = w.steps[i + 1];
        if (o.subsystems.size() != 2) return false;
        if (!is_maximal_in(subs[0], subs[1], g.roots)) return false;
        if (!is_subset(o.subsystems[1], subs[1])) return false;
        if (intersect(subs[0], o.subsystems[1]) != o.subsystems[0]) return false;
        break;
      }
      case Rule::OracleQK:
      case Rule::OracleInnerSym:
      case Rule::OracleE7A7: {
        if (fiber_obstruction(subs.back(), subs.front()) != s.rule) return false;
        break;
      }
      case Rule::BorelSiebenthalList:
        if (!is_maximal_in(subs[0], subs[1], g.roots) || symmetric_pair(subs[1], subs[0])) {
          return false;
        }
        break;
      case Rule::StackConstruction:
        if (!is_centralizer_in(subs[0], subs[1])) return false;
        break;
      case Rule::CentralizerCase:
        if (subs.size() == 2 && !is_centralizer_in(subs[0], subs[1])) return false;
        break;
      default:
        break;
    }
  }
  return true;
}

RootSystem product_realization(const std::vector<SimpleTypeId>& factors) {
  RootSystem out;
  for (const auto& t : factors) out.ambient_dim += realize(t).ambient_dim;
  std::size_t offset = 0;
  for (const auto& t : factors) {
    const auto& r = realize(t);
    for (const auto& a : r.roots) {
      std::vector<int> d(out.ambient_dim, 0);
      for (std::size_t i = 0; i < r.ambient_dim; ++i) d[offset + i] = a.doubled(i);
      out.roots.emplace_back(std::move(d));
    }
    offset += r.ambient_dim;
    out.rank += t.rank;
    if (!out.label.empty()) out.label += "x";
    out.label += t.name();
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

std::vector<std::pair<SimpleTypeId, EmbeddedSubgroup>> split_product(
    const std::vector<SimpleTypeId>& factors, const RootSet& h_roots, int h_rank) {
  int total = 0;
  for (const auto& t : factors) total += t.rank;
  if (h_rank != total) {
    throw NotEqualRank("subgroup rank " + std::to_string(h_rank) + " differs from group rank " +
                       std::to_string(total));
  }
  std::vector<RootSet> parts(factors.size());
  std::vector<int> offsets;
  int off = 0;
  for (const auto& t : factors) {
    offsets.push_back(off);
    off += static_cast<int>(realize(t).ambient_dim);
  }
  for (const auto& a : h_roots) {
    if (static_cast<int>(a.dim()) != off) throw DimensionMismatch("root " + a.str() + " has wrong dimension");
    int owner = -1;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      int dim = static_cast<int>(realize(factors[f]).ambient_dim);
      bool inside = false, outside = false;
      for (int i = 0; i < off; ++i) {
        if (a.doubled(i) == 0) continue;
        (i >= offsets[f] && i < offsets[f] + dim ? inside : outside) = true;
      }
      if (inside && !outside) owner = static_cast<int>(f);
    }
    if (owner < 0) throw NotClosedSubsystem("root " + a.str() + " is not inside one factor");
    int dim = static_cast<int>(realize(factors[owner]).ambient_dim);
    std::vector<int> d(dim);
    for (int i = 0; i < dim; ++i) d[i] = a.doubled(offsets[owner] + i);
    parts[owner].emplace_back(std::move(d));
  }
  std::vector<std::pair<SimpleTypeId, EmbeddedSubgroup>> out;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    std::sort(parts[f].begin(), parts[f].end());
    out.emplace_back(factors[f], make_subgroup(realize(factors[f]), std::move(parts[f])));
  }
  return out;
}

Verdict classify_product(const std::vector<std::pair<SimpleTypeId, EmbeddedSubgroup>>& parts) {
  if (parts.empty()) throw Error("empty product");
  if (parts.size() == 1) return classify_simple(parts[0].first, parts[0].second);
  Verdict v;
  std::vector<Verdict> sub;
  for (const auto& [t, h] : parts) sub.push_back(classify_simple(t, h));
  WitnessStep split;
  split.rule = Rule::ProductSplit;
  bool any_neg = false, same = true;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const auto& s = sub[i];
    if (i) {
      v.group += "x";
      v.subgroup += "x";
      split.note += "; ";
    }
    v.group += s.group;
    v.subgroup += "(" + s.subgroup + ")";
    v.chi *= s.chi;
    split.note += s.group + "/" + s.subgroup + ": " + to_string(s.kind);
    any_neg = any_neg || s.kind == VerdictKind::NotWeaklyComplex;
    same = same && s.kind == sub[0].kind;
    for (const auto& n : s.notes) v.notes.push_back(s.group + "/" + s.subgroup + " " + n);
  }
  split.chain = {v.subgroup, v.group};
  v.kind = any_neg ? VerdictKind::NotWeaklyComplex
           : same  ? sub[0].kind
                   : VerdictKind::WeaklyComplexOnly;
  v.case_label = "product";
  v.witness.steps.push_back(std::move(split));
  for (const auto& s : sub) {
    if (any_neg && s.kind != VerdictKind::NotWeaklyComplex) continue;
    for (const auto& st : s.witness.steps) v.witness.steps.push_back(st);
    if (any_neg) break;
  }
  return v;
}

int TableReport::count(VerdictKind k) const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [&](const TableEntry& e) { return e.verdict.kind == k; }));
}

std::vector<SimpleTypeId> simple_types_up_to(int rank_cap) {
  std::vector<SimpleTypeId> out;
  for (int n = 1; n <= rank_cap; ++n) out.push_back({Series::A, n});
  for (int n = 2; n <= rank_cap; ++n) out.push_back({Series::B, n});
  for (int n = 2; n <= rank_cap; ++n) out.push_back({Series::C, n});
  for (int n = 4; n <= rank_cap; ++n) out.push_back({Series::D, n});
  for (int n = 6; n <= std::min(rank_cap, 8); ++n) out.push_back({Series::E, n});
  if (rank_cap >= 4) out.push_back({Series::F, 4});
  if (rank_cap >= 2) out.push_back({Series::G, 2});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

TableReport build_report(int rank_cap, bool parallel) {
  TableReport rep;
  rep.rank_cap = rank_cap;
  std::vector<std::pair<SimpleTypeId, EmbeddedSubgroup>> jobs;
  for (const auto& t : simple_types_up_to(rank_cap)) {
    auto subs = parallel ? enumerate_full_rank_subgroups(t, -1)
                         : enumerate_full_rank_subgroups_serial(t, -1);
    for (auto& h : subs) jobs.emplace_back(t, std::move(h));
  }
  std::vector<std::optional<TableEntry>> slots(jobs.size());
  std::vector<std::string> failures(jobs.size());
  auto work = [&](std::size_t i) {
    const auto& [t, h] = jobs[i];
    try {
      slots[i] = TableEntry{t, h, conjugacy_canonical_form(h).key, classify_simple(t, h)};
    } catch (const Unclassified& e) {
      failures[i] = t.name() + "/" + h.descriptor.str() + ": " + e.what();
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(jobs.size()); ++i) work(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) work(i);
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (slots[i]) rep.entries.push_back(std::move(*slots[i]));
    if (!failures[i].empty()) rep.unclassified.push_back(failures[i]);
  }
  return rep;
}

}  // namespace

TableReport reproduce_theorem_tables(int rank_cap) { return build_report(rank_cap, true); }
TableReport reproduce_theorem_tables_serial(int rank_cap) {
  return build_report(rank_cap, false);
}

}  // namespace lierank
