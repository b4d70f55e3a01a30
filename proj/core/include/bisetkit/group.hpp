#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bisetkit {

using Elt = std::uint32_t;

class Group;
using GroupRef = std::shared_ptr<const Group>;

// Upper bound on the order of any group we are willing to materialize.
inline constexpr std::size_t kDefaultGroupBound = 10080;

/// A finite group stored as a dense multiplication table.
///
/// Instances are immutable and always handled through GroupRef.  Each one gets
/// a process-unique serial number used as a cache key by the algorithms layer.
class Group {
 public:
  // Validates associativity, identity and inverses; throws NotAGroup.
  static GroupRef from_cayley(const std::vector<std::vector<Elt>>& table, std::string label = "");
  // Skips validation.  Only for tables produced by trusted constructions.
  static GroupRef from_trusted_table(std::size_t order, std::vector<Elt> flat, std::string label);

  std::size_t order() const { return n_; }
  Elt mul(Elt a, Elt b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt identity() const { return id_; }
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv_[g]); }  // g x g^-1
  std::uint32_t elt_order(Elt a) const { return ord_[a]; }

  // Deterministic generating set: greedy over elements by decreasing order.
  const std::vector<Elt>& generators() const { return gens_; }
  const std::string& label() const { return label_; }
  std::uint64_t serial() const { return serial_; }
  bool is_abelian() const;

  std::vector<std::vector<Elt>> cayley() const;
  const std::vector<Elt>& flat_table() const { return table_; }

  // Same table under a different display name.
  GroupRef relabeled(std::string label) const;

 private:
  Group(std::size_t n, std::vector<Elt> table, std::string label);

  std::size_t n_;
  std::vector<Elt> table_;
  std::vector<Elt> inv_;
  std::vector<std::uint32_t> ord_;
  std::vector<Elt> gens_;
  Elt id_ = 0;
  std::string label_;
  std::uint64_t serial_;
};

struct Subgroup {
  GroupRef parent;
  std::vector<Elt> elems;  // sorted

  std::size_t order() const { return elems.size(); }
  bool contains(Elt x) const;
  bool operator==(const Subgroup& o) const { return parent == o.parent && elems == o.elems; }
};

struct Hom {
  GroupRef source;
  GroupRef target;
  std::vector<Elt> map;

  Elt operator()(Elt x) const { return map[x]; }
  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_surjective() const;

  static Hom identity(const GroupRef& g);
  static Hom trivial(const GroupRef& src, const GroupRef& dst);
};

// (g o f)(x) = g(f(x)).
Hom compose(const Hom& g, const Hom& f);
// sigma_h o f, i.e. x -> h f(x) h^-1.
Hom conjugate(Elt h, const Hom& f);
// Inverse of a bijective hom.
Hom inverse(const Hom& f);

/// Morphism of the stabilized category: a hom up to target conjugation.
/// The representative is the lexicographically least map in the class.
struct HomClass {
  Hom rep;
};

HomClass hom_class_of(const Hom& f);

// Permutation groups.  Composition is (a*b)(i) = a(b(i)).
using Perm = std::vector<std::uint32_t>;
GroupRef group_from_perm_gens(std::size_t degree, const std::vector<Perm>& gens,
                              std::string label = "", std::size_t bound = kDefaultGroupBound);

struct DirectProduct {
  GroupRef group;
  GroupRef first;
  GroupRef second;

  Elt pair(Elt a, Elt b) const { return a * static_cast<Elt>(second->order()) + b; }
  Elt first_of(Elt x) const { return x / static_cast<Elt>(second->order()); }
  Elt second_of(Elt x) const { return x % static_cast<Elt>(second->order()); }
};

DirectProduct direct_product(const GroupRef& a, const GroupRef& b, std::size_t bound = kDefaultGroupBound);
// Memoized on the serial pair, so repeated calls return the same GroupRef.
const DirectProduct& product_of(const GroupRef& a, const GroupRef& b);

}  // namespace bisetkit
