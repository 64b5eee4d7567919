#include "lierank/checks.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "lierank/classifier.hpp"
#include "lierank/descriptor.hpp"
#include "lierank/errors.hpp"
#include "lierank/linalg.hpp"
#include "lierank/reps.hpp"

namespace lierank {

namespace {

struct Context {
  RootSet e8;
  int rank_cap = 5;
  mutable std::optional<TableReport> tables;

  const TableReport& report() const {
    if (!tables) tables = reproduce_theorem_tables(rank_cap);
    return *tables;
  }
};

struct Check {
  std::string name;
  std::string description;
  std::function<std::string(const Context&)> run;  // empty string means pass
};

HalfIntVector half(std::vector<int> doubled) { return HalfIntVector(std::move(doubled)); }

std::string expect_eq(const std::string& what, long long got, long long want) {
  if (got == want) return {};
  return what + ": got " + std::to_string(got) + ", want " + std::to_string(want);
}

EmbeddedSubgroup subgroup_of(const std::string& space) {
  auto s = parse_space(space);
  auto cands = resolve_subgroup(s.group.factors.at(0).type, s.subgroup);
  if (cands.size() != 1) {
    throw Error(space + " resolves to " + std::to_string(cands.size()) + " classes");
  }
  return cands.front();
}

std::string kind_is(const std::string& space, VerdictKind want) {
  auto h = subgroup_of(space);
  auto v = classify_simple(*h.parent->type, h);
  if (v.kind == want) return {};
  return space + " is " + to_string(v.kind) + ", want " + to_string(want);
}

RootSet e7_from(const RootSet& e8) {
  RootSet out;
  const auto a0 = e7_cut_vector();
  for (const auto& a : e8) {
    if (dot4(a, a0) == 0) out.push_back(a);
  }
  return out;
}

HalfIntVector d6_direction() { return half({2, 2, 2, 2, -2, -2, -2, -2}); }

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : "; ") + x;
  return s;
}

/// Weakly complex spaces named by the classification, by descriptor.
bool listed_weakly_complex(SimpleTypeId g, const EmbeddedSubgroup& h) {
  const RootSystem& sys = realize(g);
  RootSet span_closure;
  for (const auto& a : sys.roots) {
    if (linalg::in_span(h.subsystem, a)) span_closure.push_back(a);
  }
  if (h.subsystem.empty()) span_closure.clear();
  if (span_closure == h.subsystem) return true;

  const auto d = h.descriptor;
  const auto types = d.normalized_types();
  auto has = [&](std::initializer_list<const char*> names, int torus) {
    std::vector<SimpleTypeId> want;
    for (const char* n : names) {
      Series ser = static_cast<Series>(std::string("ABCDEFG").find(n[0]));
      want.push_back({ser, std::atoi(n + 1)});
    }
    std::sort(want.begin(), want.end());
    return types == want && d.total_torus_rank() == torus;
  };
  auto long_only = [&] {
    std::int64_t longest = 0;
    for (const auto& a : sys.roots) longest = std::max(longest, dot4(a, a));
    return std::all_of(h.subsystem.begin(), h.subsystem.end(),
                       [&](const HalfIntVector& a) { return dot4(a, a) == longest; });
  };
  switch (g.series) {
    case Series::B: {
      int big_d = 0;
      for (const auto& f : d.factors) {
        if (f.kind == Factor::Kind::Unitary) continue;
        if (f.type.series != Series::D) return false;
        ++big_d;
      }
      return big_d == 1;
    }
    case Series::C: {
      int c1 = 0;
      for (const auto& f : d.factors) {
        if (f.kind == Factor::Kind::Unitary) continue;
        if (f.type.series != Series::C || f.type.rank != 1) return false;
        ++c1;
      }
      return c1 >= 2;
    }
    case Series::F:
      return (has({"D4"}, 0) && long_only()) || (has({"A1", "A1"}, 2) && long_only()) ||
             (has({"A1", "A1", "A1"}, 1) && long_only()) || has({"A2", "A2"}, 0) ||
             (has({"A3"}, 1) && long_only());
    case Series::G:
      return has({"A2"}, 0);
    case Series::E:
      if (g.rank == 6) return has({"A2", "A2", "A2"}, 0);
      if (g.rank == 7) return has({"A2", "A5"}, 0) || has({"A2", "A2", "A2"}, 1);
      return has({"A8"}, 0) || has({"A2", "E6"}, 0) || has({"A4", "A4"}, 0) ||
             has({"A1", "A2", "A5"}, 0) || has({"A2", "A2", "A2", "A2"}, 0) ||
             has({"A2", "A5"}, 1) || has({"A1", "A2", "A2", "A2"}, 1) ||
             has({"A2", "A2", "A2"}, 2);
    default:
      return false;
  }
}

std::vector<Check> all_checks() {
  std::vector<Check> c;
  c.push_back({"roots-e8", "E8 has 240 roots", [](const Context& x) {
                 return expect_eq("E8 roots", static_cast<long long>(x.e8.size()), 240);
               }});
  c.push_back({"roots-e8-split", "E8 = 112 roots ±e_i±e_j plus 128 even half-spin weights",
               [](const Context& x) {
                 int integral = 0, spin = 0;
                 for (const auto& a : x.e8) {
                   int odd = 0, minus = 0;
                   for (int d : a.doubled()) {
                     odd += d % 2 != 0;
                     minus += d < 0;
                   }
                   if (odd == 0) ++integral;
                   if (odd == 8 && minus % 2 == 0) ++spin;
                 }
                 auto e = expect_eq("integral", integral, 112);
                 return e.empty() ? expect_eq("half-spin", spin, 128) : e;
               }});
  c.push_back({"roots-e7-slice", "roots of E8 orthogonal to (1/2)(1,...,1) number 126",
               [](const Context& x) {
                 return expect_eq("E7 roots", static_cast<long long>(e7_from(x.e8).size()), 126);
               }});
  c.push_back({"roots-e6", "E6 has 72 roots", [](const Context&) {
                 return expect_eq("E6 roots", realize({Series::E, 6}).roots.size(), 72);
               }});
  c.push_back({"roots-f4-split", "F4 = 24 roots ±e_i±e_j, 8 roots ±e_i, 16 half-sums",
               [](const Context&) {
                 int two = 0, one = 0, halves = 0;
                 for (const auto& a : realize({Series::F, 4}).roots) {
                   int nz = 0, odd = 0;
                   for (int d : a.doubled()) {
                     nz += d != 0;
                     odd += d % 2 != 0;
                   }
                   if (odd) {
                     ++halves;
                   } else {
                     (nz == 2 ? two : one)++;
                   }
                 }
                 std::string e = expect_eq("±e_i±e_j", two, 24);
                 if (e.empty()) e = expect_eq("±e_i", one, 8);
                 if (e.empty()) e = expect_eq("half-sums", halves, 16);
                 return e;
               }});
  c.push_back({"roots-g2", "G2 has 12 roots", [](const Context&) {
                 return expect_eq("G2 roots", realize({Series::G, 2}).roots.size(), 12);
               }});
  c.push_back({"roots-classical", "A_n: n(n+1), B_n and C_n: 2n^2, D_n: 2n(n-1) for n <= 8",
               [](const Context&) {
                 for (int n = 1; n <= 8; ++n) {
                   std::vector<std::pair<SimpleTypeId, int>> want = {
                       {{Series::A, n}, n * (n + 1)},
                       {{Series::B, n}, 2 * n * n},
                       {{Series::C, n}, 2 * n * n}};
                   if (n >= 2) want.push_back({{Series::D, n}, 2 * n * (n - 1)});
                   for (auto [t, k] : want) {
                     auto e = expect_eq(t.name(), realize(t).roots.size(), k);
                     if (!e.empty()) return e;
                   }
                 }
                 return std::string{};
               }});
  c.push_back({"weyl-orders", "Weyl group orders of the exceptional types", [](const Context&) {
                 const std::pair<SimpleTypeId, long long> want[] = {
                     {{Series::G, 2}, 12},
                     {{Series::F, 4}, 1152},
                     {{Series::E, 6}, 51840},
                     {{Series::E, 7}, 2903040},
                     {{Series::E, 8}, 696729600}};
                 for (auto [t, k] : want) {
                   auto e = expect_eq(t.name(), static_cast<long long>(weyl_order(t)), k);
                   if (!e.empty()) return e;
                 }
                 return std::string{};
               }});
  c.push_back({"marks", "highest-root coefficients match the marks table", [](const Context&) {
                 for (const auto& t : simple_types_up_to(8)) {
                   auto comps = decompose(realize(t).roots);
                   auto coeff = root_coefficients(comps.at(0), highest_root(comps.at(0)));
                   std::sort(coeff.begin(), coeff.end());
                   if (coeff != dynkin_marks_table(t)) return "marks of " + t.name() + " differ";
                 }
                 return std::string{};
               }});
  c.push_back({"borel-siebenthal",
               "non-symmetric maximal full-rank subgroups are exactly the seven listed spaces",
               [](const Context&) {
                 std::set<std::string> got;
                 for (const auto& t : simple_types_up_to(8)) {
                   for (const auto& h : maximal_full_rank_subgroups(t)) {
                     if (!h.cartan_complement.empty()) continue;
                     if (!symmetric_pair(realize(t).roots, h.subsystem)) {
                       got.insert(t.name() + "/" + h.descriptor.str());
                     }
                   }
                 }
                 std::set<std::string> want = {"G2/A2",  "F4/A2^2",  "E6/A2^3", "E7/A2xA5",
                                               "E8/A8",  "E8/A2xE6", "E8/A4^2"};
                 if (got == want) return std::string{};
                 std::vector<std::string> g(got.begin(), got.end());
                 return "found " + join(g);
               }});
  c.push_back({"e7-identify", "the 126-root slice identifies as E7", [](const Context& x) {
                 auto id = identify(e7_from(x.e8), 7);
                 return id.str() == "E7" ? std::string{} : "identified as " + id.str();
               }});
  c.push_back({"e7-d6-centralizer",
               "E7 roots orthogonal to e1+e2+e3+e4-e5-e6-e7-e8: 60 roots, D6 x T1",
               [](const Context& x) {
                 auto g = orthogonal_filter(e7_from(x.e8), d6_direction());
                 auto e = expect_eq("roots", g.size(), 60);
                 if (!e.empty()) return e;
                 auto id = identify(g, 7);
                 return id.str() == "D6xT1" ? std::string{} : "identified as " + id.str();
               }});
  c.push_back({"e7-f-basis", "the f-basis maps D6 x T1 and A3 x A3 x T1 onto standard D6, D3 x D3",
               [](const Context& x) {
                 auto g = orthogonal_filter(e7_from(x.e8), d6_direction());
                 // images of e_1..e_8 in f-coordinates (f_7 component vanishes on g)
                 std::vector<HalfIntVector> img;
                 const int sgn[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
                 for (int k = 0; k < 8; ++k) {
                   std::vector<int> d(7, 0);
                   for (int i = 0; i < 3; ++i) d[(k < 4 ? 0 : 3) + i] = sgn[k % 4][i];
                   img.push_back(half(d));
                 }
                 RootSet d6, d33, a33;
                 for (int i = 0; i < 6; ++i) {
                   for (int j = i + 1; j < 6; ++j) {
                     for (int si : {1, -1}) {
                       for (int sj : {1, -1}) {
                         std::vector<int> d(7, 0);
                         d[i] = 2 * si;
                         d[j] = 2 * sj;
                         d6.push_back(half(d));
                         if ((i < 3) == (j < 3)) d33.push_back(half(d));
                       }
                     }
                   }
                 }
                 for (int i = 0; i < 8; ++i) {
                   for (int j = 0; j < 8; ++j) {
                     if (i == j || (i < 4) != (j < 4)) continue;
                     std::vector<int> d(8, 0);
                     d[i] = 2;
                     d[j] = -2;
                     a33.push_back(half(d));
                   }
                 }
                 d6 = make_root_set(d6);
                 d33 = make_root_set(d33);
                 a33 = make_root_set(a33);
                 if (!verify_isometry(g, d6, img)) return std::string("D6 isometry fails");
                 if (!verify_isometry(a33, d33, img)) return std::string("D3xD3 isometry fails");
                 return std::string{};
               }});
  c.push_back({"e7-a7", "E7/A7 is not weakly complex, through the E7/A7 fact", [](const Context&) {
                 auto h = subgroup_of("E7/A7");
                 auto v = classify_simple({Series::E, 7}, h);
                 if (v.kind != VerdictKind::NotWeaklyComplex) return "verdict " + to_string(v.kind);
                 bool cited = std::any_of(v.witness.steps.begin(), v.witness.steps.end(),
                                          [](const WitnessStep& s) { return s.rule == Rule::OracleE7A7; });
                 return cited ? std::string{} : std::string("witness does not cite E7/A7");
               }});
  c.push_back({"f4-c3a1", "the 18-root subset plus ±(e3-e4) is C3 x A1 through the f-basis",
               [](const Context&) {
                 const auto& f4 = realize({Series::F, 4}).roots;
                 RootSet c3;
                 for (const auto& a : f4) {
                   const auto& d = a.doubled();
                   if (d[2] == d[3]) c3.push_back(a);
                 }
                 auto e = expect_eq("C3 subset", c3.size(), 18);
                 if (!e.empty()) return e;
                 // e1 -> f1+f2, e2 -> f1-f2, e3, e4 -> f3
                 std::vector<HalfIntVector> img = {half({2, 2, 0}), half({2, -2, 0}),
                                                   half({0, 0, 2}), half({0, 0, 2})};
                 RootSet mapped;
                 for (const auto& a : c3) mapped.push_back(apply_linear(a, img));
                 mapped = make_root_set(mapped);
                 if (mapped != realize({Series::C, 3}).roots) return std::string("image is not C3");
                 for (const auto& a : c3) {
                   for (const auto& b : c3) {
                     if (2 * dot4(a, b) != dot4(apply_linear(a, img), apply_linear(b, img))) {
                       return std::string("inner products not scaled uniformly");
                     }
                   }
                 }
                 RootSet h = c3;
                 h.push_back(half({0, 0, 2, -2}));
                 h.push_back(half({0, 0, -2, 2}));
                 auto id = identify(make_root_set(h), 4);
                 return id.str() == "A1xC3" ? std::string{} : "identified as " + id.str();
               }});
  c.push_back({"f4-a1-4", "(A1)^4 from ±2f_i inside C3 x A1 is {±e1±e2, ±e3±e4}",
               [](const Context&) {
                 RootSet want;
                 for (int s1 : {2, -2}) {
                   for (int s2 : {2, -2}) {
                     want.push_back(half({s1, s2, 0, 0}));
                     want.push_back(half({0, 0, s1, s2}));
                   }
                 }
                 want = make_root_set(want);
                 // ±2f_i with f1 = (e1+e2)/2, f2 = (e1-e2)/2, f3 = (e3+e4)/2
                 RootSet got = {half({2, 2, 0, 0}), half({-2, -2, 0, 0}), half({2, -2, 0, 0}),
                                half({-2, 2, 0, 0}), half({0, 0, 2, 2}), half({0, 0, -2, -2}),
                                half({0, 0, 2, -2}), half({0, 0, -2, 2})};
                 got = make_root_set(got);
                 if (got != want) return std::string("subsystems differ");
                 auto h = make_subgroup(realize({Series::F, 4}), want);
                 auto v = classify_simple({Series::F, 4}, h);
                 if (v.kind != VerdictKind::NotWeaklyComplex) return "verdict " + to_string(v.kind);
                 const auto& last = v.witness.steps.back();
                 if (last.note != "D4/A1^4") return "witness fiber " + last.note;
                 return std::string{};
               }});
  c.push_back({"lemma-iso", "Λ²H^n = n trivial + isotropy of C_n/(C1)^n, n <= 8", [](const Context&) {
                 for (int n = 1; n <= 8; ++n) {
                   if (!verify_lemma_iso(n)) return "fails for n = " + std::to_string(n);
                   auto g = realize({Series::C, n});
                   int rest = static_cast<int>(g.roots.size()) - 2 * n;
                   if (2 * n * (2 * n - 1) / 2 != n + rest) {
                     return "dimension ledger fails for n = " + std::to_string(n);
                   }
                 }
                 return std::string{};
               }});
  c.push_back({"cn-split", "four pieces of Λ²H^n sum to Λ²H^n for p + q <= 8", [](const Context&) {
                 for (int n = 1; n <= 8; ++n) {
                   for (int p = 0; p <= n; ++p) {
                     int q = n - p;
                     auto sp = prop_cn_split(n, p, q);
                     if (!(sp.total() == exterior_square(standard_symplectic_weights(n)))) {
                       return "fails for p = " + std::to_string(p) + ", q = " + std::to_string(q);
                     }
                   }
                 }
                 return std::string{};
               }});
  c.push_back({"euler-spot", "chi(B_n/D_n) = 2, chi(F4/D4) = 6, chi(C_n/(C1)^n) = n!, chi(G2/A2) = 2, chi(E8/D8) = 135",
               [](const Context&) {
                 auto chi = [](const std::string& s) {
                   auto sp = parse_space(s);
                   return static_cast<long long>(euler_characteristic(sp.group, sp.subgroup));
                 };
                 long long fact = 1;
                 for (int n = 2; n <= 8; ++n) {
                   fact *= n;
                   auto e = expect_eq("B" + std::to_string(n),
                                      chi("B" + std::to_string(n) + "/D" + std::to_string(n)), 2);
                   if (e.empty()) {
                     e = expect_eq("C" + std::to_string(n),
                                   chi("C" + std::to_string(n) + "/C1^" + std::to_string(n)), fact);
                   }
                   if (!e.empty()) return e;
                 }
                 std::string e = expect_eq("F4/D4", chi("F4/D4"), 6);
                 if (e.empty()) e = expect_eq("G2/A2", chi("G2/A2"), 2);
                 if (e.empty()) e = expect_eq("E8/D8", chi("E8/D8"), 135);
                 return e;
               }});
  c.push_back({"euler-divisibility", "chi is a positive integer on every enumerated pair, rank <= 6",
               [](const Context&) {
                 for (const auto& t : simple_types_up_to(6)) {
                   GroupDescriptor g;
                   g.factors.push_back(Factor::simple(t));
                   for (const auto& h : enumerate_full_rank_subgroups(t, -1)) {
                     try {
                       if (euler_characteristic(g, h.descriptor) == 0) {
                         return t.name() + "/" + h.descriptor.str() + " has chi 0";
                       }
                     } catch (const Error& e) {
                       return std::string(e.what());
                     }
                   }
                 }
                 return std::string{};
               }});
  c.push_back({"stably-trivial", "B_n/D_n, C_n/(C1)^n and F4/D4 are stably trivial",
               [](const Context&) {
                 for (int n = 2; n <= 6; ++n) {
                   auto e = kind_is("B" + std::to_string(n) + "/D" + std::to_string(n),
                                    VerdictKind::StablyTrivial);
                   if (e.empty() && n >= 3) {
                     e = kind_is("C" + std::to_string(n) + "/C1^" + std::to_string(n),
                                 VerdictKind::StablyTrivial);
                   }
                   if (!e.empty()) return e;
                 }
                 return kind_is("F4/D4", VerdictKind::StablyTrivial);
               }});
  c.push_back({"seven-acs", "the seven maximal spaces carry invariant almost complex structures",
               [](const Context&) {
                 for (const char* s : {"G2/A2", "F4/A2^2", "E6/A2^3", "E7/A2xA5", "E8/A8",
                                       "E8/A2xE6", "E8/A4^2"}) {
                   auto e = kind_is(s, VerdictKind::InvariantACS);
                   if (!e.empty()) return e;
                 }
                 return std::string{};
               }});
  c.push_back({"exceptional-weakly-complex",
               "F4/D2xT2 and F4/(C1)^3xT1 are weakly complex without invariant structure",
               [](const Context&) {
                 auto e = kind_is("F4/D2xT2", VerdictKind::WeaklyComplexOnly);
                 if (e.empty()) e = kind_is("F4/C1^3xT1", VerdictKind::WeaklyComplexOnly);
                 if (e.empty()) e = kind_is("F4/D2xU(2)", VerdictKind::WeaklyComplexOnly);
                 return e;
               }});
  c.push_back({"e-series-fibered",
               "E7/A2^3xT1, E8/A2xA5xT1, E8/A1xA2^3xT1, E8/A2^3xT2 carry invariant structures",
               [](const Context&) {
                 for (const char* s : {"E7/A2^3xT1", "E8/A2xA5xT1", "E8/A1xA2^3xT1", "E8/A2^3xT2"}) {
                   auto e = kind_is(s, VerdictKind::InvariantACS);
                   if (!e.empty()) return e;
                 }
                 return std::string{};
               }});
  c.push_back({"acs-agreement", "the invariant-ACS criterion matches the named verdicts",
               [](const Context&) {
                 std::vector<std::pair<std::string, bool>> cases = {
                     {"G2/A2", true},         {"F4/A2^2", true},       {"E6/A2^3", true},
                     {"E7/A2xA5", true},      {"E8/A8", true},         {"E8/A2xE6", true},
                     {"E8/A4^2", true},       {"E8/A2^4", true},       {"E8/A1xA2xA5", true},
                     {"E8/A1xA2^3xT1", true}, {"E8/A2xA5xT1", true},   {"E8/A2^3xT2", true},
                     {"E7/A2^3xT1", true},    {"F4/D4", false},        {"F4/D2xT2", false},
                     {"F4/C1^3xT1", false}};
                 for (int n = 2; n <= 6; ++n) {
                   cases.push_back({"B" + std::to_string(n) + "/D" + std::to_string(n), false});
                   if (n >= 3) cases.push_back({"C" + std::to_string(n) + "/C1^" + std::to_string(n), false});
                 }
                 std::vector<std::string> bad;
                 for (const auto& [s, want] : cases) {
                   auto h = subgroup_of(s);
                   if (invariant_acs_exists(*h.parent, h) != want) bad.push_back(s);
                 }
                 return bad.empty() ? std::string{} : "disagree: " + join(bad);
               }});
  c.push_back({"tables", "classification up to rank 5 matches the named weakly complex families",
               [](const Context& x) {
                 const auto& rep = x.report();
                 std::vector<std::string> bad = rep.unclassified;
                 for (const auto& e : rep.entries) {
                   bool want = listed_weakly_complex(e.group, e.subgroup);
                   if (weakly_complex(e.verdict.kind) != want) {
                     bad.push_back(e.group.name() + "/" + e.subgroup.descriptor.str());
                   }
                 }
                 return bad.empty() ? std::string{} : join(bad);
               }});
  c.push_back({"witness-replay", "every witness up to rank 5 replays", [](const Context& x) {
                 const auto& rep = x.report();
                 for (const auto& e : rep.entries) {
                   if (!replay_witness(realize(e.group), e.verdict.witness)) {
                     return e.group.name() + "/" + e.subgroup.descriptor.str();
                   }
                 }
                 return std::string{};
               }});
  c.push_back({"enumerate-small", "class counts: A1 2, A2 3, C2 5, G2 6 (two A1xT1)",
               [](const Context&) {
                 const std::pair<SimpleTypeId, long long> want[] = {
                     {{Series::A, 1}, 2}, {{Series::A, 2}, 3}, {{Series::C, 2}, 5}, {{Series::G, 2}, 6}};
                 for (auto [t, k] : want) {
                   auto e = expect_eq(t.name(), enumerate_full_rank_subgroups(t, -1).size(), k);
                   if (!e.empty()) return e;
                 }
                 return std::string{};
               }});
  c.push_back({"product-split", "B2xC3/D2x(C1)^3 splits into two stably trivial factors",
               [](const Context&) {
                 auto r = classify_space(parse_space("B2xC3/D2x(C1)^3"));
                 if (r.ambiguous) return std::string("ambiguous");
                 if (r.verdict.witness.steps.front().rule != Rule::ProductSplit) {
                   return std::string("no product step");
                 }
                 return r.verdict.kind == VerdictKind::StablyTrivial
                            ? std::string{}
                            : "verdict " + to_string(r.verdict.kind);
               }});
  return c;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : all_checks()) out.push_back(c.name);
  return out;
}

std::vector<CheckResult> run_checks(const CheckOptions& opts) {
  Context ctx;
  ctx.e8 = realize({Series::E, 8}).roots;
  ctx.rank_cap = opts.table_rank_cap;
  if (opts.corrupt_e8) ctx.e8.pop_back();
  std::vector<CheckResult> out;
  for (const auto& c : all_checks()) {
    if (!opts.only.empty() && c.name.find(opts.only) == std::string::npos) continue;
    CheckResult r;
    r.name = c.name;
    r.description = c.description;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = c.run(ctx);
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lierank
