#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "lierank/checks.hpp"
#include "lierank/classifier.hpp"
#include "lierank/descriptor.hpp"
#include "lierank/errors.hpp"
#include "lierank/json_io.hpp"

using namespace lierank;

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kDomain = 2;
constexpr int kParse = 3;

int rank_cap() {
  const char* env = std::getenv("LIERANK_RANK_CAP");
  if (env == nullptr || *env == '\0') return 8;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw ParseError("LIERANK_RANK_CAP is not a positive integer", 0);
  return static_cast<int>(v);
}

void require_cap(const GroupDescriptor& g) {
  for (const auto& f : g.factors) {
    if (f.rank() > rank_cap()) {
      throw NotEqualRank(f.name() + " exceeds LIERANK_RANK_CAP=" + std::to_string(rank_cap()));
    }
  }
}

/// Descriptor with short-root components marked, for non-simply-laced parents.
std::string annotated(const EmbeddedSubgroup& h) {
  std::string s = h.descriptor.str();
  const auto& g = *h.parent;
  auto lr = long_roots(g.roots);
  if (lr == g.roots || g.type->series == Series::B || g.type->series == Series::C) return s;
  std::vector<std::string> shorts;
  for (const auto& c : decompose(h.subsystem)) {
    if (std::none_of(c.roots.begin(), c.roots.end(),
                     [&](const HalfIntVector& a) { return contains(lr, a); })) {
      shorts.push_back(c.type.name());
    }
  }
  if (shorts.empty()) return s;
  s += "  (short";
  for (const auto& x : shorts) s += " " + x;
  return s + ")";
}

void print_verdict(const Verdict& v) {
  std::cout << v.group << "/" << v.subgroup << ": " << to_string(v.kind) << " [" << v.case_label
            << "]\n";
  std::cout << "chi = " << v.chi << "\n";
  std::cout << "witness:\n";
  for (const auto& s : v.witness.steps) {
    std::cout << "  " << to_string(s.rule);
    std::string chain;
    for (const auto& c : s.chain) chain += (chain.empty() ? "" : " < ") + c;
    if (!chain.empty()) std::cout << "  " << chain;
    if (!s.note.empty()) std::cout << "  (" << s.note << ")";
    std::cout << "\n";
  }
  for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
}

int cmd_classify(const std::string& text, bool as_json) {
  auto space = parse_space(text);
  require_cap(space.group);
  auto r = classify_space(space);
  if (as_json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else if (!r.ambiguous) {
    print_verdict(r.verdict);
    if (r.candidates > 1 && !r.ambiguous) {
      std::cout << "note: " << r.candidates << " conjugacy classes match, all with this verdict\n";
    }
  }
  if (r.ambiguous) {
    std::cerr << "error: " << text << " matches conjugacy classes with different verdicts:\n";
    for (const auto& a : r.alternatives) std::cerr << "  " << a << "\n";
    return kDomain;
  }
  return kOk;
}

int cmd_enumerate(const std::string& text, int max_depth, bool as_json, bool with_roots) {
  auto g = parse_group(text);
  if (g.factors.size() != 1 || g.torus_rank != 0 || g.factors[0].kind != Factor::Kind::Simple) {
    throw InadmissibleType("enumerate expects a simple group, got " + g.str());
  }
  require_cap(g);
  auto t = g.factors[0].type;
  auto subs = enumerate_full_rank_subgroups(t, max_depth);
  if (as_json) {
    json list = json::array();
    for (const auto& h : subs) list.push_back(to_json(h, with_roots));
    json j = {{"group", t.name()}, {"max_depth", max_depth}, {"count", subs.size()},
              {"subgroups", list}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  GroupDescriptor gd;
  gd.factors.push_back(Factor::simple(t));
  std::cout << t.name() << ": " << subs.size() << " conjugacy classes\n";
  for (const auto& h : subs) {
    std::cout << "  " << annotated(h) << "  chi=" << euler_characteristic(gd, h.descriptor)
              << "\n";
  }
  return kOk;
}

int cmd_euler(const std::string& text, bool as_json) {
  auto s = parse_space(text);
  auto chi = euler_characteristic(s.group, s.subgroup);
  if (as_json) {
    std::cout << json{{"space", s.str()}, {"chi", chi}}.dump(2) << "\n";
  } else {
    std::cout << s.str() << ": chi = " << chi << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& only, bool corrupt, bool as_json) {
  CheckOptions opts;
  opts.only = only;
  opts.corrupt_e8 = corrupt;
  opts.table_rank_cap = std::min(5, rank_cap());
  auto results = run_checks(opts);
  int failed = 0;
  json list = json::array();
  for (const auto& r : results) {
    failed += r.pass ? 0 : 1;
    if (as_json) {
      list.push_back({{"name", r.name}, {"description", r.description}, {"pass", r.pass},
                      {"detail", r.detail}});
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.description;
      if (!r.pass) std::cout << "\n     " << r.detail;
      std::cout << "\n";
    }
  }
  if (as_json) {
    std::cout << json{{"checks", list}, {"total", results.size()}, {"failed", failed}}.dump(2)
              << "\n";
  } else {
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  if (results.empty()) {
    std::cerr << "error: no check matches '" << only << "'\n";
    return kDomain;
  }
  return failed == 0 ? kOk : kInternal;
}

int cmd_tables(int cap, bool as_json) {
  if (cap > rank_cap()) {
    throw NotEqualRank("rank cap " + std::to_string(cap) + " exceeds LIERANK_RANK_CAP=" +
                       std::to_string(rank_cap()));
  }
  auto rep = reproduce_theorem_tables(cap);
  if (as_json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    for (const auto& e : rep.entries) {
      const auto& v = e.verdict;
      std::cout << v.group << "/" << v.subgroup << "  " << to_string(v.kind) << "  "
                << v.case_label << "\n";
    }
    for (auto k : {VerdictKind::InvariantACS, VerdictKind::StablyTrivial,
                   VerdictKind::WeaklyComplexOnly, VerdictKind::NotWeaklyComplex}) {
      std::cout << to_string(k) << ": " << rep.count(k) << "\n";
    }
    for (const auto& u : rep.unclassified) std::cout << "unclassified: " << u << "\n";
  }
  return rep.unclassified.empty() ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equal-rank homogeneous spaces G/H: subgroup enumeration and weakly complex "
               "classification"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");

  std::string space;
  auto* classify = app.add_subcommand("classify", "Classify G/H, e.g. \"F4/D2xT2\"");
  classify->add_option("space", space, "Space descriptor G/H")->required();

  std::string group;
  int max_depth = -1;
  bool with_roots = false;
  auto* enumerate = app.add_subcommand("enumerate", "List full-rank subgroups of a simple group");
  enumerate->add_option("group", group, "Simple group, e.g. F4")->required();
  enumerate->add_option("--max-depth", max_depth, "Maximal-subgroup steps (default unbounded)");
  enumerate->add_flag("--roots", with_roots, "Include root sets in JSON output");

  auto* euler = app.add_subcommand("euler", "Euler characteristic of G/H");
  euler->add_option("space", space, "Space descriptor G/H")->required();

  std::string only;
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "Run the built-in check suite");
  verify->add_option("--only", only, "Run checks whose name contains FILTER");
  verify->add_flag("--corrupt-e8", corrupt, "Negative control")->group("");

  int cap = 5;
  auto* tables = app.add_subcommand("tables", "Classify every full-rank subgroup up to a rank");
  tables->add_option("--rank-cap", cap, "Largest rank (default 5)");

  for (auto* sub : {classify, enumerate, euler, verify, tables}) {
    sub->add_flag("--json", as_json, "Emit JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*classify) return cmd_classify(space, as_json);
    if (*enumerate) return cmd_enumerate(group, max_depth, as_json, with_roots);
    if (*euler) return cmd_euler(space, as_json);
    if (*verify) return cmd_verify(only, corrupt, as_json);
    if (*tables) return cmd_tables(cap, as_json);
  } catch (const lierank::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InadmissibleType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const NotEqualRank& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const Unclassified& e) {
    std::cerr << "error: unclassified: " << e.what() << "\n";
    return kDomain;
  } catch (const NotClosedSubsystem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
