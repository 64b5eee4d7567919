#include "lierank/descriptor.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>

#include "lierank/errors.hpp"

namespace lierank {

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::size_t base) : s_(text), base_(base) {}

  GroupDescriptor parse() {
    GroupDescriptor d;
    product(d);
    skip_space();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    d.canonicalize();
    return d;
  }

 private:
  const std::string& s_;
  std::size_t base_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(const std::string& tok) {
    skip_space();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!accept(tok)) {
      if (pos_ >= s_.size()) fail("expected '" + tok + "' but input ended");
      fail("expected '" + tok + "' but found '" + std::string(1, s_[pos_]) + "'");
    }
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) {
      if (pos_ >= s_.size()) fail("expected a number but input ended");
      fail("expected a number but found '" + std::string(1, s_[pos_]) + "'");
    }
    if (pos_ - start > 6) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoi(s_.substr(start, pos_ - start));
  }

  bool separator() {
    return accept("x") || accept("*") || accept("\xC3\x97");
  }

  void product(GroupDescriptor& d) {
    factor(d);
    while (separator()) factor(d);
  }

  void factor(GroupDescriptor& d) {
    GroupDescriptor one;
    atom(one);
    int k = 1;
    if (accept("^")) {
      std::size_t at = pos_;
      k = integer();
      if (k < 1) {
        pos_ = at;
        fail("exponent must be positive");
      }
    }
    for (int i = 0; i < k; ++i) {
      d.factors.insert(d.factors.end(), one.factors.begin(), one.factors.end());
      d.torus_rank += one.torus_rank;
    }
  }

  int call_argument() {
    expect("(");
    int n = integer();
    expect(")");
    return n;
  }

  void simple(GroupDescriptor& d, Series s, int n) {
    d.factors.push_back(Factor::simple(SimpleTypeId::make(s, n)));
  }

  void atom(GroupDescriptor& d) {
    skip_space();
    if (pos_ >= s_.size()) fail("expected a group but input ended");
    if (accept("(")) {
      product(d);
      expect(")");
      return;
    }
    if (accept("Spin") || accept("SO")) {
      int n = call_argument();
      if (n % 2 == 0) {
        if (n == 2) ++d.torus_rank;
        if (n > 2) simple(d, Series::D, n / 2);
      } else if (n > 1) {
        simple(d, Series::B, n / 2);
      }
      return;
    }
    if (accept("Sp")) {
      int n = call_argument();
      if (n > 0) simple(d, Series::C, n);
      return;
    }
    if (accept("SU")) {
      int n = call_argument();
      if (n > 1) simple(d, Series::A, n - 1);
      return;
    }
    if (accept("U")) {
      int q = call_argument();
      if (q == 1) ++d.torus_rank;
      if (q > 1) d.factors.push_back(Factor::unitary(q));
      return;
    }
    if (accept("T")) {
      skip_space();
      bool digit = pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
      d.torus_rank += digit ? integer() : 1;
      return;
    }
    if (accept("1")) return;
    char c = s_[pos_];
    static const std::string letters = "ABCDEFG";
    auto at = letters.find(c);
    if (at == std::string::npos) fail("unexpected '" + std::string(1, c) + "'");
    ++pos_;
    int n = integer();
    Series s = static_cast<Series>(at);
    if (s == Series::D && n == 1) {
      ++d.torus_rank;
      return;
    }
    simple(d, s, n);
  }
};

enum class Length { Any, Long, Short, Mixed };

struct Requirement {
  SimpleTypeId type;
  Length length;
};

std::vector<Requirement> requirements(const GroupDescriptor& h) {
  bool orthogonal = false, symplectic = false;
  for (const auto& f : h.factors) {
    if (f.kind != Factor::Kind::Simple) continue;
    orthogonal = orthogonal || f.type.series == Series::B || f.type.series == Series::D;
    symplectic = symplectic || f.type.series == Series::C;
  }
  const Length unitary = orthogonal ? Length::Long : symplectic ? Length::Short : Length::Any;
  std::vector<Requirement> out;
  for (const auto& f : h.factors) {
    if (f.kind == Factor::Kind::Unitary) {
      out.push_back({{Series::A, f.q - 1}, unitary});
      continue;
    }
    const auto t = f.type;
    if (t.series == Series::B && t.rank == 1) {
      out.push_back({{Series::A, 1}, Length::Short});
    } else if (t.series == Series::C && t.rank == 1) {
      out.push_back({{Series::A, 1}, Length::Long});
    } else if (t.series == Series::C && t.rank == 2) {
      out.push_back({{Series::B, 2}, Length::Any});
    } else if (t.series == Series::D && t.rank == 2) {
      out.push_back({{Series::A, 1}, Length::Long});
      out.push_back({{Series::A, 1}, Length::Long});
    } else if (t.series == Series::D && t.rank == 3) {
      out.push_back({{Series::A, 3}, Length::Long});
    } else if (t.series == Series::D) {
      out.push_back({t, Length::Long});
    } else {
      out.push_back({t, Length::Any});
    }
  }
  return out;
}

std::vector<Requirement> components_of(const RootSystem& g, const RootSet& s) {
  std::int64_t longest = 0;
  for (const auto& a : g.roots) longest = std::max(longest, dot4(a, a));
  std::vector<Requirement> out;
  for (const auto& c : decompose(s)) {
    bool all_long = true, all_short = true;
    for (const auto& a : c.roots) {
      (dot4(a, a) == longest ? all_short : all_long) = false;
    }
    out.push_back({c.type, all_long ? Length::Long : all_short ? Length::Short : Length::Mixed});
  }
  return out;
}

bool assign(const std::vector<Requirement>& req, const std::vector<Requirement>& comps,
            std::size_t i, std::vector<char>& used) {
  if (i == req.size()) return true;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (used[j] || comps[j].type != req[i].type) continue;
    if (req[i].length != Length::Any && req[i].length != comps[j].length) continue;
    used[j] = 1;
    if (assign(req, comps, i + 1, used)) return true;
    used[j] = 0;
  }
  return false;
}

const std::vector<EmbeddedSubgroup>& cached_enumeration(SimpleTypeId g) {
  static std::mutex mu;
  static std::map<SimpleTypeId, std::vector<EmbeddedSubgroup>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
  }
  auto subs = enumerate_full_rank_subgroups(g, -1);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(g, std::move(subs)).first->second;
}

void distribute(const std::vector<Factor>& items, std::size_t i, std::vector<int>& room,
                std::vector<GroupDescriptor>& parts, std::set<std::vector<std::string>>& seen,
                std::vector<std::vector<GroupDescriptor>>& out) {
  if (i == items.size()) {
    auto filled = parts;
    std::vector<std::string> key;
    for (std::size_t k = 0; k < filled.size(); ++k) {
      filled[k].torus_rank += room[k];
      filled[k].canonicalize();
      key.push_back(filled[k].str());
    }
    if (seen.insert(key).second) out.push_back(std::move(filled));
    return;
  }
  for (std::size_t k = 0; k < room.size(); ++k) {
    int r = items[i].rank();
    if (room[k] < r) continue;
    room[k] -= r;
    parts[k].factors.push_back(items[i]);
    distribute(items, i + 1, room, parts, seen, out);
    parts[k].factors.pop_back();
    room[k] += r;
  }
}

}  // namespace

GroupDescriptor parse_group(const std::string& text) { return Parser(text, 0).parse(); }

SpaceDescriptor parse_space(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw ParseError("expected '/' but input ended", text.size());
  auto second = text.find('/', slash + 1);
  if (second != std::string::npos) throw ParseError("unexpected '/'", second);
  SpaceDescriptor s;
  std::string left = text.substr(0, slash), right = text.substr(slash + 1);
  s.group = Parser(left, 0).parse();
  s.subgroup = Parser(right, slash + 1).parse();
  return s;
}

std::vector<EmbeddedSubgroup> resolve_subgroup(SimpleTypeId g, const GroupDescriptor& h) {
  if (h.rank() != g.rank) {
    throw NotEqualRank(h.str() + " has rank " + std::to_string(h.rank()) + ", " + g.name() +
                       " has rank " + std::to_string(g.rank));
  }
  const auto& all = cached_enumeration(g);
  std::vector<EmbeddedSubgroup> exact;
  for (const auto& c : all) {
    if (c.descriptor == h) exact.push_back(c);
  }
  if (!exact.empty()) return exact;
  const auto req = requirements(h);
  const RootSystem& sys = realize(g);
  std::vector<EmbeddedSubgroup> out;
  for (const auto& c : all) {
    if (c.descriptor.total_torus_rank() != h.total_torus_rank()) continue;
    auto comps = components_of(sys, c.subsystem);
    if (comps.size() != req.size()) continue;
    std::vector<char> used(comps.size(), 0);
    if (assign(req, comps, 0, used)) out.push_back(c);
  }
  return out;
}

std::vector<ProductEmbedding> resolve_space(const SpaceDescriptor& s, std::size_t limit) {
  std::vector<SimpleTypeId> gs;
  int absorbed = s.group.torus_rank;
  for (const auto& f : s.group.factors) {
    if (f.kind == Factor::Kind::Unitary) {
      gs.push_back({Series::A, f.q - 1});
      ++absorbed;
    } else {
      gs.push_back(f.type);
    }
  }
  if (gs.empty()) throw InadmissibleType("group " + s.group.str() + " has no simple factor");
  GroupDescriptor h = s.subgroup;
  if (h.rank() != s.group.rank()) {
    throw NotEqualRank(h.str() + " has rank " + std::to_string(h.rank()) + ", " +
                       s.group.str() + " has rank " + std::to_string(s.group.rank()));
  }
  if (h.torus_rank < absorbed) {
    throw NotEqualRank(h.str() + " does not contain the central torus of " + s.group.str());
  }
  h.torus_rank -= absorbed;
  std::vector<int> room;
  for (const auto& t : gs) room.push_back(t.rank);
  std::vector<GroupDescriptor> parts(gs.size());
  std::set<std::vector<std::string>> seen;
  std::vector<std::vector<GroupDescriptor>> splits;
  distribute(h.factors, 0, room, parts, seen, splits);
  std::vector<ProductEmbedding> out;
  std::set<std::vector<std::string>> keys;
  for (const auto& split : splits) {
    std::vector<std::vector<EmbeddedSubgroup>> options;
    bool ok = true;
    for (std::size_t k = 0; k < gs.size() && ok; ++k) {
      options.push_back(resolve_subgroup(gs[k], split[k]));
      ok = !options.back().empty();
    }
    if (!ok) continue;
    std::vector<std::size_t> idx(gs.size(), 0);
    while (out.size() < limit) {
      ProductEmbedding e;
      std::vector<std::string> key;
      for (std::size_t k = 0; k < gs.size(); ++k) {
        e.emplace_back(gs[k], options[k][idx[k]]);
        key.push_back(conjugacy_canonical_form(e.back().second).key);
      }
      if (keys.insert(key).second) out.push_back(std::move(e));
      std::size_t k = 0;
      while (k < gs.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
      if (k == gs.size()) break;
    }
    if (out.size() >= limit) break;
  }
  if (out.empty()) {
    throw Unclassified("no full-rank subgroup " + s.subgroup.str() + " in " + s.group.str());
  }
  return out;
}

Resolution classify_space(const SpaceDescriptor& s) {
  Resolution r;
  auto cands = resolve_space(s);
  r.candidates = cands.size();
  for (std::size_t i = 0; i < cands.size(); ++i) {
    auto v = classify_product(cands[i]);
    if (i == 0) {
      r.verdict = std::move(v);
      continue;
    }
    if (v.kind != r.verdict.kind || v.case_label != r.verdict.case_label) {
      r.ambiguous = true;
      r.alternatives.push_back(v.subgroup + ": " + to_string(v.kind) + " " + v.case_label);
    }
  }
  if (r.ambiguous) {
    r.alternatives.insert(r.alternatives.begin(), r.verdict.subgroup + ": " +
                                                      to_string(r.verdict.kind) + " " +
                                                      r.verdict.case_label);
  }
  return r;
}

}  // namespace lierank
