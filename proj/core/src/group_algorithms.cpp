#include "bisetkit/group_algorithms.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <utility>

#include "bisetkit/error.hpp"

namespace bisetkit {

namespace {

std::vector<Elt> closure(const Group& g, const std::vector<Elt>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elt> out{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elt s : gens) {
      Elt y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
  return a.elems < b.elems;
}

// Cache keyed by group serial.  The stored value keeps whatever it needs alive.
template <class V>
class SerialCache {
 public:
  template <class F>
  const V& get(std::uint64_t key, F&& make) {
    {
      std::lock_guard lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = make();
    std::lock_guard lock(mu_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::uint64_t, V> map_;
};

// Backtracking over images of k's generators.  `candidates[i]` lists allowed
// images of generator i.  The visitor returns false to stop the search.
void search_homs(const GroupRef& k, const GroupRef& g, const std::vector<std::vector<Elt>>& candidates,
                 bool injective, const std::function<bool(const std::vector<Elt>&)>& visit) {
  const auto& gens = k->generators();
  const std::size_t n = k->order();
  constexpr Elt kUnset = ~Elt{0};
  std::vector<Elt> images(gens.size());

  // Rebuilds the partial map on <gens[0..depth)> and checks every Cayley edge.
  std::vector<Elt> map(n);
  std::vector<Elt> queue;
  std::vector<char> used(g->order());
  auto consistent = [&](std::size_t depth) {
    std::fill(map.begin(), map.end(), kUnset);
    map[k->identity()] = g->identity();
    queue.assign(1, k->identity());
    if (injective) {
      std::fill(used.begin(), used.end(), 0);
      used[g->identity()] = 1;
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Elt x = queue[qi];
      for (std::size_t j = 0; j < depth; ++j) {
        Elt y = k->mul(x, gens[j]);
        Elt fy = g->mul(map[x], images[j]);
        if (map[y] == kUnset) {
          if (injective) {
            if (used[fy]) return false;
            used[fy] = 1;
          }
          map[y] = fy;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop) return;
    if (depth == gens.size()) {
      if (!consistent(depth)) return;
      if (!visit(map)) stop = true;
      return;
    }
    for (Elt c : candidates[depth]) {
      images[depth] = c;
      if (consistent(depth + 1)) rec(depth + 1);
      if (stop) return;
    }
  };
  if (gens.empty()) {
    std::fill(map.begin(), map.end(), g->identity());
    visit(map);
    return;
  }
  rec(0);
}

}  // namespace

Subgroup generated_subgroup(const GroupRef& g, const std::vector<Elt>& gens) {
  return Subgroup{g, closure(*g, gens)};
}

Subgroup whole_group(const GroupRef& g) {
  Subgroup s{g, std::vector<Elt>(g->order())};
  for (Elt x = 0; x < g->order(); ++x) s.elems[x] = x;
  return s;
}

Subgroup trivial_subgroup(const GroupRef& g) { return Subgroup{g, {g->identity()}}; }

Subgroup conjugate_subgroup(const Subgroup& s, Elt g) {
  Subgroup out{s.parent, {}};
  out.elems.reserve(s.elems.size());
  for (Elt x : s.elems) out.elems.push_back(s.parent->conj(g, x));
  std::sort(out.elems.begin(), out.elems.end());
  return out;
}

bool is_normal(const Subgroup& s) {
  const auto& g = *s.parent;
  for (Elt x : g.generators())
    for (Elt y : s.elems)
      if (!s.contains(g.conj(x, y))) return false;
  return true;
}

Subgroup normal_closure(const GroupRef& g, const std::vector<Elt>& elems) {
  std::vector<Elt> gens;
  for (Elt x : elems)
    for (Elt h = 0; h < g->order(); ++h) gens.push_back(g->conj(h, x));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generated_subgroup(g, gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  Subgroup out{a.parent, {}};
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                        std::back_inserter(out.elems));
  return out;
}

namespace {

// Closes a family of subgroups under joins with the given atoms.
std::vector<Subgroup> join_closure(const GroupRef& g, const std::vector<std::pair<Elt, Subgroup>>& atoms,
                                   std::vector<Subgroup> seed, bool atoms_are_normal) {
  std::set<std::vector<Elt>> known;
  for (const auto& s : seed) known.insert(s.elems);
  std::vector<Subgroup> all = seed;
  std::vector<Subgroup> frontier = seed;
  std::vector<char> in(g->order());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      std::fill(in.begin(), in.end(), 0);
      for (Elt x : s.elems) in[x] = 1;
      for (const auto& [gen, atom] : atoms) {
        if (in[gen]) continue;
        std::vector<Elt> gens = s.elems;
        if (atoms_are_normal)
          gens.insert(gens.end(), atom.elems.begin(), atom.elems.end());
        else
          gens.push_back(gen);
        // Closing under s's elements is wasteful; use a small generating set.
        std::vector<Elt> small;
        {
          std::vector<char> cov(g->order(), 0);
          std::vector<Elt> cur{g->identity()};
          cov[g->identity()] = 1;
          for (Elt x : gens) {
            if (cov[x]) continue;
            small.push_back(x);
            cur = closure(*g, small);
            for (Elt y : cur) cov[y] = 1;
          }
        }
        Subgroup j{g, closure(*g, small)};
        if (known.insert(j.elems).second) {
          all.push_back(j);
          next.push_back(std::move(j));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), subgroup_less);
  return all;
}

}  // namespace

const std::vector<Subgroup>& subgroups(const GroupRef& g) {
  static SerialCache<std::vector<Subgroup>> cache;
  return cache.get(g->serial(), [&] {
    std::vector<std::pair<Elt, Subgroup>> cyclic;
    std::set<std::vector<Elt>> seen;
    for (Elt x = 0; x < g->order(); ++x) {
      Subgroup c = generated_subgroup(g, {x});
      if (seen.insert(c.elems).second) cyclic.emplace_back(x, std::move(c));
    }
    std::vector<Subgroup> seed;
    for (const auto& [x, c] : cyclic) seed.push_back(c);
    return join_closure(g, cyclic, seed, false);
  });
}

const std::vector<Subgroup>& normal_subgroups(const GroupRef& g) {
  static SerialCache<std::vector<Subgroup>> cache;
  return cache.get(g->serial(), [&] {
    std::vector<std::pair<Elt, Subgroup>> atoms;
    std::set<std::vector<Elt>> seen;
    for (Elt x = 0; x < g->order(); ++x) {
      Subgroup c = normal_closure(g, {x});
      if (seen.insert(c.elems).second) atoms.emplace_back(x, std::move(c));
    }
    std::vector<Subgroup> seed{trivial_subgroup(g)};
    for (const auto& [x, c] : atoms)
      if (c.elems.size() > 1) seed.push_back(c);
    return join_closure(g, atoms, seed, true);
  });
}

SubgroupClasses::SubgroupClasses(const GroupRef& g) : g_(g) {
  std::set<std::vector<Elt>> assigned;
  for (const auto& s : subgroups(g)) {
    if (assigned.count(s.elems)) continue;
    std::set<std::vector<Elt>> conj;
    for (Elt x = 0; x < g->order(); ++x) conj.insert(conjugate_subgroup(s, x).elems);
    std::vector<Subgroup> cls;
    for (const auto& e : conj) {
      assigned.insert(e);
      cls.push_back(Subgroup{g, e});
    }
    classes_.push_back(std::move(cls));
  }
  std::sort(classes_.begin(), classes_.end(),
            [](const auto& a, const auto& b) { return subgroup_less(a.front(), b.front()); });
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (const auto& s : classes_[i]) lookup_.emplace(s.elems, i);
}

std::size_t SubgroupClasses::classify(const std::vector<Elt>& sorted_elems) const {
  auto it = lookup_.find(sorted_elems);
  if (it == lookup_.end()) throw Error(ErrorKind::InvalidArgument, "not a subgroup of " + g_->label());
  return it->second;
}

std::size_t SubgroupClasses::classify(const Subgroup& s) const {
  if (s.parent != g_) throw Error(ErrorKind::GroupMismatch, "subgroup of a different group");
  return classify(s.elems);
}

const SubgroupClasses& subgroup_classes(const GroupRef& g) {
  static SerialCache<SubgroupClasses> cache;
  return cache.get(g->serial(), [&] { return SubgroupClasses(g); });
}

std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(const GroupRef& g) {
  const auto& c = subgroup_classes(g);
  std::vector<std::vector<Subgroup>> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c.members(i));
  return out;
}

Subgroup kernel(const Hom& f) {
  Subgroup s{f.source, {}};
  for (Elt x = 0; x < f.source->order(); ++x)
    if (f.map[x] == f.target->identity()) s.elems.push_back(x);
  return s;
}

Subgroup image(const Hom& f) {
  Subgroup s{f.target, f.map};
  std::sort(s.elems.begin(), s.elems.end());
  s.elems.erase(std::unique(s.elems.begin(), s.elems.end()), s.elems.end());
  return s;
}

Quotient quotient(const GroupRef& g, const Subgroup& n) {
  if (n.parent != g) throw Error(ErrorKind::GroupMismatch, "quotient: subgroup of another group");
  if (!is_normal(n)) throw Error(ErrorKind::NotNormal, "quotient: subgroup is not normal");
  constexpr Elt kUnset = ~Elt{0};
  std::vector<Elt> coset(g->order(), kUnset);
  std::vector<Elt> reps;
  for (Elt x = 0; x < g->order(); ++x) {
    if (coset[x] != kUnset) continue;
    auto idx = static_cast<Elt>(reps.size());
    reps.push_back(x);
    for (Elt y : n.elems) coset[g->mul(x, y)] = idx;
  }
  const std::size_t m = reps.size();
  std::vector<Elt> flat(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) flat[a * m + b] = coset[g->mul(reps[a], reps[b])];
  auto q = Group::from_trusted_table(m, std::move(flat), g->label() + "/N");
  return Quotient{q, Hom{g, q, coset}};
}

const SubgroupGroup& subgroup_as_group(const Subgroup& s) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::vector<Elt>>, SubgroupGroup> memo;
  auto key = std::make_pair(s.parent->serial(), s.elems);
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const auto& g = *s.parent;
  const std::size_t m = s.elems.size();
  std::vector<Elt> pos(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) pos[s.elems[i]] = static_cast<Elt>(i);
  std::vector<Elt> flat(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) flat[a * m + b] = pos[g.mul(s.elems[a], s.elems[b])];
  auto sub = Group::from_trusted_table(m, std::move(flat), "sub(" + g.label() + ")");
  SubgroupGroup value{sub, Hom{sub, s.parent, s.elems}};
  std::lock_guard lock(mu);
  return memo.emplace(std::move(key), std::move(value)).first->second;
}

std::vector<Hom> all_homs(const GroupRef& k, const GroupRef& g, std::size_t bound) {
  const auto& gens = k->generators();
  std::vector<std::vector<Elt>> candidates(gens.size());
  double total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elt y = 0; y < g->order(); ++y)
      if (k->elt_order(gens[i]) % g->elt_order(y) == 0) candidates[i].push_back(y);
    total *= static_cast<double>(candidates[i].size());
  }
  if (total > static_cast<double>(bound))
    throw Error(ErrorKind::TooLarge, "hom search space too large for " + k->label() + " -> " + g->label());
  std::vector<Hom> out;
  search_homs(k, g, candidates, false, [&](const std::vector<Elt>& map) {
    out.push_back(Hom{k, g, map});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Hom& a, const Hom& b) { return a.map < b.map; });
  return out;
}

const std::vector<Hom>& hom_classes(const GroupRef& k, const GroupRef& g) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<Hom>> memo;
  auto key = std::make_pair(k->serial(), g->serial());
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::set<std::vector<Elt>> reps;
  for (const auto& f : all_homs(k, g)) reps.insert(hom_class_of(f).rep.map);
  std::vector<Hom> out;
  for (const auto& r : reps) out.push_back(Hom{k, g, r});
  std::lock_guard lock(mu);
  return memo.emplace(key, std::move(out)).first->second;
}

std::vector<Hom> automorphisms(const GroupRef& g) {
  const auto& gens = g->generators();
  std::vector<std::vector<Elt>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elt y = 0; y < g->order(); ++y)
      if (g->elt_order(y) == g->elt_order(gens[i])) candidates[i].push_back(y);
  std::vector<Hom> out;
  search_homs(g, g, candidates, true, [&](const std::vector<Elt>& map) {
    out.push_back(Hom{g, g, map});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Hom& a, const Hom& b) { return a.map < b.map; });
  return out;
}

std::vector<Hom> automorphism_generators(const GroupRef& g) {
  std::vector<Hom> gens;
  std::set<std::vector<Elt>> group{Hom::identity(g).map};
  for (const auto& a : automorphisms(g)) {
    if (group.count(a.map)) continue;
    gens.push_back(a);
    std::vector<std::vector<Elt>> queue(group.begin(), group.end());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& s : gens) {
        std::vector<Elt> c(queue[i].size());
        for (std::size_t x = 0; x < c.size(); ++x) c[x] = s.map[queue[i][x]];
        if (group.insert(c).second) queue.push_back(std::move(c));
      }
  }
  return gens;
}

std::vector<std::uint32_t> order_profile(const GroupRef& g) {
  std::vector<std::uint32_t> p(g->order());
  for (Elt x = 0; x < g->order(); ++x) p[x] = g->elt_order(x);
  std::sort(p.begin(), p.end());
  return p;
}

std::optional<Hom> is_isomorphic(const GroupRef& a, const GroupRef& b) {
  if (a->order() != b->order()) return std::nullopt;
  if (a == b) return Hom::identity(a);
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  const auto& gens = a->generators();
  std::vector<std::vector<Elt>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elt y = 0; y < b->order(); ++y)
      if (b->elt_order(y) == a->elt_order(gens[i])) candidates[i].push_back(y);
  std::optional<Hom> found;
  search_homs(a, b, candidates, true, [&](const std::vector<Elt>& map) {
    found = Hom{a, b, map};
    return false;
  });
  return found;
}

}  // namespace bisetkit
