#include "bisetkit/library.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "bisetkit/error.hpp"

namespace bisetkit {

namespace {

Perm cycle_perm(std::size_t degree, std::vector<std::uint32_t> cycle) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

GroupRef cyclic(std::uint32_t n) {
  std::vector<std::uint32_t> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  std::vector<Perm> gens;
  if (n > 1) gens.push_back(cycle_perm(n, cyc));
  return group_from_perm_gens(n, gens, "C" + std::to_string(n));
}

GroupRef dihedral(std::uint32_t n, const std::string& label) {
  std::vector<std::uint32_t> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  Perm flip(n);
  for (std::uint32_t i = 0; i < n; ++i) flip[i] = (n - i) % n;
  return group_from_perm_gens(n, {cycle_perm(n, cyc), flip}, label);
}

// Units +-1, +-i, +-j, +-k encoded as sign*4 + unit with unit in {1,i,j,k}.
GroupRef quaternion() {
  static const int unit_table[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  std::vector<std::vector<Elt>> table(8, std::vector<Elt>(8));
  for (Elt a = 0; a < 8; ++a)
    for (Elt b = 0; b < 8; ++b) {
      const auto& r = unit_table[a % 4][b % 4];
      Elt sign = (a / 4 + b / 4 + static_cast<Elt>(r[0])) % 2;
      table[a][b] = sign * 4 + static_cast<Elt>(r[1]);
    }
  return Group::from_cayley(table, "Q8");
}

GroupRef product_label(const std::string& a, const std::string& b, const std::string& label) {
  return direct_product(builtin_group(a), builtin_group(b)).group->relabeled(label);
}

const std::map<std::string, std::function<GroupRef()>>& factories() {
  static const std::map<std::string, std::function<GroupRef()>> f = [] {
    std::map<std::string, std::function<GroupRef()>> m;
    for (std::uint32_t n = 1; n <= 12; ++n) m["C" + std::to_string(n)] = [n] { return cyclic(n); };
    for (std::uint32_t n = 3; n <= 6; ++n)
      m["D" + std::to_string(n)] = [n] { return dihedral(n, "D" + std::to_string(n)); };
    m["S3"] = [] { return dihedral(3, "S3"); };
    m["V4"] = [] { return group_from_perm_gens(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, "V4"); };
    m["S4"] = [] { return group_from_perm_gens(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, "S4"); };
    m["A4"] = [] { return group_from_perm_gens(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, "A4"); };
    m["Q8"] = [] { return quaternion(); };
    m["Dic3"] = [] {
      return group_from_perm_gens(7, {cycle_perm(7, {0, 1, 2}), {0, 2, 1, 4, 5, 6, 3}}, "Dic3");
    };
    m["C2xC4"] = [] { return product_label("C2", "C4", "C2xC4"); };
    m["C2xC2xC2"] = [] { return product_label("C2", "V4", "C2xC2xC2"); };
    m["C3xC3"] = [] { return product_label("C3", "C3", "C3xC3"); };
    m["C2xC6"] = [] { return product_label("C2", "C6", "C2xC6"); };
    return m;
  }();
  return f;
}

}  // namespace

GroupRef builtin_group(const std::string& name) {
  static std::recursive_mutex mu;
  static std::map<std::string, GroupRef> made;
  std::lock_guard lock(mu);
  auto it = made.find(name);
  if (it != made.end()) return it->second;
  auto f = factories().find(name);
  if (f == factories().end()) throw Error(ErrorKind::InvalidArgument, "unknown builtin group '" + name + "'");
  return made[name] = f->second();
}

std::vector<std::string> builtin_group_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : factories()) out.push_back(k);
  return out;
}

namespace {

const std::vector<std::string> kUpto6 = {"C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3"};
const std::vector<std::string> kUpto8Extra = {"C7", "C8", "C2xC4", "C2xC2xC2", "D4", "Q8"};
const std::vector<std::string> kUpto12Extra = {"C9", "C3xC3", "C10", "D5", "C11",
                                               "C12", "C2xC6", "D6", "Dic3", "A4"};

}  // namespace

UniverseRef universe_of(const std::vector<std::string>& names, std::size_t max_order) {
  auto u = std::make_shared<GroupUniverse>(max_order);
  for (const auto& n : names) u->register_group(builtin_group(n));
  return u;
}

UniverseRef builtin_universe(const std::string& name, std::size_t max_order) {
  std::vector<std::string> names = kUpto6;
  if (name == "upto8" || name == "upto12") names.insert(names.end(), kUpto8Extra.begin(), kUpto8Extra.end());
  if (name == "upto12") names.insert(names.end(), kUpto12Extra.begin(), kUpto12Extra.end());
  if (name != "upto6" && name != "upto8" && name != "upto12")
    throw Error(ErrorKind::InvalidArgument, "unknown builtin universe '" + name + "'");
  auto u = std::make_shared<GroupUniverse>(max_order, name);
  for (const auto& n : names) {
    auto g = builtin_group(n);
    if (g->order() > max_order) throw Error(ErrorKind::TooLarge, "universe bound below " + n);
    u->register_group(g);
  }
  return u;
}

std::vector<std::string> builtin_universe_names() { return {"upto6", "upto8", "upto12"}; }

}  // namespace bisetkit
