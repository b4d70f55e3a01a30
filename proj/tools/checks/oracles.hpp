#pragma once

// Slow reference implementations used only by tests.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "bisetkit/biset.hpp"
#include "bisetkit/group.hpp"

namespace oracle {

using bisetkit::Elt;
using bisetkit::GroupRef;

// Every subgroup, by closing every subset of size <= 2 and then every union
// of two found subgroups until nothing new appears.
inline std::set<std::vector<Elt>> subgroups_by_seeds(const GroupRef& g) {
  const Elt n = static_cast<Elt>(g->order());
  auto close = [&](std::vector<Elt> s) {
    std::set<Elt> cur(s.begin(), s.end());
    cur.insert(g->identity());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Elt> v(cur.begin(), cur.end());
      for (Elt a : v)
        for (Elt b : v)
          if (cur.insert(g->mul(a, b)).second) grew = true;
    }
    return std::vector<Elt>(cur.begin(), cur.end());
  };
  std::set<std::vector<Elt>> found;
  for (Elt a = 0; a < n; ++a)
    for (Elt b = a; b < n; ++b) found.insert(close({a, b}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Elt>> cur(found.begin(), found.end());
    for (const auto& x : cur)
      for (const auto& y : cur) {
        std::vector<Elt> u = x;
        u.insert(u.end(), y.begin(), y.end());
        if (found.insert(close(u)).second) grew = true;
      }
  }
  return found;
}

// Conjugacy classes counted by conjugating every subgroup by every element.
inline std::size_t subgroup_class_count(const GroupRef& g) {
  std::set<std::vector<Elt>> canon;
  for (const auto& s : subgroups_by_seeds(g)) {
    std::vector<Elt> best = s;
    for (Elt x = 0; x < g->order(); ++x) {
      std::vector<Elt> c;
      for (Elt y : s) c.push_back(g->conj(x, y));
      std::sort(c.begin(), c.end());
      best = std::min(best, c);
    }
    canon.insert(best);
  }
  return canon.size();
}

// Every map K -> G checked against the homomorphism law.
inline std::size_t hom_count_brute(const GroupRef& k, const GroupRef& g) {
  const std::size_t n = k->order();
  std::vector<Elt> map(n, 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (Elt a = 0; a < n && ok; ++a)
      for (Elt b = 0; b < n && ok; ++b) ok = map[k->mul(a, b)] == g->mul(map[a], map[b]);
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++map[i] == g->order()) map[i++] = 0;
    if (i == n) break;
  }
  return count;
}

// Orbits of a G-set by repeated relaxation with every group element.
inline std::size_t orbit_count(const bisetkit::GSet& x) {
  std::vector<std::size_t> label(x.size());
  for (std::size_t i = 0; i < label.size(); ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elt g = 0; g < x.group()->order(); ++g)
      for (bisetkit::Point p = 0; p < x.size(); ++p) {
        auto q = x.act(g, p);
        auto m = std::min(label[p], label[q]);
        if (label[p] != m || label[q] != m) {
          label[p] = label[q] = m;
          changed = true;
        }
      }
  }
  return std::set<std::size_t>(label.begin(), label.end()).size();
}

}  // namespace oracle
