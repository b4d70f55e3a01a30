#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "bisetkit/group.hpp"

namespace bisetkit {

// Search bound on the number of candidate generator-image tuples in all_homs.
inline constexpr std::size_t kDefaultHomSearchBound = 20'000'000;

Subgroup generated_subgroup(const GroupRef& g, const std::vector<Elt>& gens);
Subgroup whole_group(const GroupRef& g);
Subgroup trivial_subgroup(const GroupRef& g);
Subgroup conjugate_subgroup(const Subgroup& s, Elt g);
bool is_normal(const Subgroup& s);
Subgroup normal_closure(const GroupRef& g, const std::vector<Elt>& elems);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

// All subgroups, sorted by (order, element list).  Memoized per group.
const std::vector<Subgroup>& subgroups(const GroupRef& g);
// Normal subgroups, same order convention.  Does not enumerate all subgroups.
const std::vector<Subgroup>& normal_subgroups(const GroupRef& g);

/// Conjugacy classes of subgroups.  The representative of a class is its
/// lexicographically least member; classes are sorted by (order, rep).
class SubgroupClasses {
 public:
  explicit SubgroupClasses(const GroupRef& g);

  const GroupRef& group() const { return g_; }
  std::size_t size() const { return classes_.size(); }
  const Subgroup& rep(std::size_t i) const { return classes_[i].front(); }
  const std::vector<Subgroup>& members(std::size_t i) const { return classes_[i]; }
  std::size_t classify(const Subgroup& s) const;
  std::size_t classify(const std::vector<Elt>& sorted_elems) const;

 private:
  GroupRef g_;
  std::vector<std::vector<Subgroup>> classes_;
  std::map<std::vector<Elt>, std::size_t> lookup_;
};

const SubgroupClasses& subgroup_classes(const GroupRef& g);
std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(const GroupRef& g);

Subgroup kernel(const Hom& f);
Subgroup image(const Hom& f);

struct Quotient {
  GroupRef group;
  Hom projection;
};
// Cosets are numbered by their least element.  Throws NotNormal.
Quotient quotient(const GroupRef& g, const Subgroup& n);

struct SubgroupGroup {
  GroupRef group;  // elements renumbered in sorted order
  Hom inclusion;   // group -> parent
};
// Memoized on (parent serial, element list).
const SubgroupGroup& subgroup_as_group(const Subgroup& s);

std::vector<Hom> all_homs(const GroupRef& k, const GroupRef& g,
                          std::size_t bound = kDefaultHomSearchBound);
// Class representatives sorted lexicographically by map.  Memoized.
const std::vector<Hom>& hom_classes(const GroupRef& k, const GroupRef& g);
std::vector<Hom> automorphisms(const GroupRef& g);
// A generating set of Aut(g) picked greedily from automorphisms().
std::vector<Hom> automorphism_generators(const GroupRef& g);

std::optional<Hom> is_isomorphic(const GroupRef& a, const GroupRef& b);

// Sorted multiset of element orders.
std::vector<std::uint32_t> order_profile(const GroupRef& g);

}  // namespace bisetkit
