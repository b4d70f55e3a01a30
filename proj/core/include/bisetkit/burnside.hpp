#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bisetkit/biset.hpp"
#include "bisetkit/group.hpp"
#include "bisetkit/group_algorithms.hpp"
#include "bisetkit/linalg.hpp"
#include "bisetkit/universe.hpp"

namespace bisetkit {

// Display name of a subgroup: "1", the group label, or the name of a builtin
// group it is isomorphic to, made unique with a/b/... suffixes.
std::vector<std::string> subgroup_class_names(const GroupRef& g);

/// Burnside ring of G with basis [G/S], S over conjugacy classes of subgroups
/// in SubgroupClasses order.
class BurnsideRing {
 public:
  explicit BurnsideRing(GroupRef g);

  const GroupRef& group() const { return g_; }
  std::size_t dim() const { return classes_->size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Subgroup& subgroup(std::size_t i) const { return classes_->rep(i); }
  const GSet& gset(std::size_t i) const { return cosets_[i]; }

  QVector basis(std::size_t i) const;
  QVector one() const;
  QVector vector_of(const GSet& x) const;
  // Structure constants come from orbit decompositions of G/S x G/T.
  QVector multiply(const QVector& a, const QVector& b) const;
  const QVector& product_of_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }

 private:
  GroupRef g_;
  const SubgroupClasses* classes_;
  std::vector<std::string> labels_;
  std::vector<GSet> cosets_;
  std::vector<std::vector<QVector>> table_;
};

const BurnsideRing& burnside_ring(const GroupRef& g);

/// Bigger Burnside module at G, truncated to a universe: basis elements are
/// classes [K -> G] with K a member, up to target conjugation and automorphisms
/// of K.  Ordered by (|K|, member index, least representative map).
class BiggerBurnside {
 public:
  BiggerBurnside(GroupRef g, UniverseRef universe);

  struct BasisElement {
    std::size_t member;
    Hom rep;
  };

  const GroupRef& group() const { return g_; }
  const UniverseRef& universe() const { return universe_; }
  std::size_t dim() const { return basis_.size(); }
  const BasisElement& element(std::size_t i) const { return basis_[i]; }
  std::string label(std::size_t i) const;

  // Throws UniverseOverflow when the source is not in the universe.
  std::size_t classify(const Hom& f) const;
  // The pullback terms [K x_G L -> G] of e_i e_j, one per double coset,
  // before they are matched against the universe.
  std::vector<Hom> product_terms(std::size_t i, std::size_t j) const;
  // Double-coset product; throws UniverseOverflow when a pullback group is
  // not a member.
  QVector multiply_basis(std::size_t i, std::size_t j) const;
  QVector multiply(const QVector& a, const QVector& b) const;
  QVector one() const;

 private:
  std::vector<Elt> canonical_map(std::size_t member, const std::vector<Elt>& map) const;

  GroupRef g_;
  UniverseRef universe_;
  std::vector<BasisElement> basis_;
  std::map<std::pair<std::size_t, std::vector<Elt>>, std::size_t> index_;
  std::vector<std::vector<Hom>> auts_;  // per member
};

struct TildeDeflation {
  PresentedModule quotient;
  QMatrix projection;  // dim Omega(G) x dim bigger Burnside
  bool subquotient_closed = true;
  std::size_t rank() const { return quotient.rank(); }
};

// Quotient by [K -f-> G] - [K/ker f -> G], with the induced map to Omega(G).
TildeDeflation tilde_deflation(const BiggerBurnside& b);

/// Double Burnside module for (H,G)-bisets: basis over conjugacy classes of
/// subgroups of H x G, i.e. transitive bisets (H x G)/S.
class DoubleBurnside {
 public:
  DoubleBurnside(GroupRef h, GroupRef g);

  const GroupRef& left() const { return h_; }
  const GroupRef& right() const { return g_; }
  std::size_t dim() const { return classes_->size(); }
  const Biset& basis_biset(std::size_t i) const { return bisets_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t identity_index() const;

  QVector vector_of(const Biset& u) const;
  QVector basis(std::size_t i) const;

 private:
  GroupRef h_;
  GroupRef g_;
  const SubgroupClasses* classes_;
  std::vector<Biset> bisets_;
  std::vector<std::string> labels_;
};

const DoubleBurnside& double_burnside(const GroupRef& h, const GroupRef& g);

// Basis composition [b_i] o [a_j] for b over (L,H) and a over (H,G).  Memoized.
const QVector& double_burnside_compose_basis(const DoubleBurnside& left, std::size_t i,
                                             const DoubleBurnside& right, std::size_t j);
QVector double_burnside_compose(const DoubleBurnside& left, const QVector& b, const DoubleBurnside& right,
                                const QVector& a);

}  // namespace bisetkit
