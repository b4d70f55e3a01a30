#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bisetkit/group.hpp"

namespace bisetkit {

using Point = std::uint32_t;

/// A finite left G-set.  act[g * size + x] is g.x.
class GSet {
 public:
  GSet() = default;
  // Validated; throws PointOutOfRange or InvalidArgument.
  static GSet make(GroupRef g, std::size_t size, std::vector<Point> act);
  static GSet trusted(GroupRef g, std::size_t size, std::vector<Point> act);

  const GroupRef& group() const { return g_; }
  std::size_t size() const { return size_; }
  Point act(Elt g, Point x) const { return act_[static_cast<std::size_t>(g) * size_ + x]; }
  const std::vector<Point>& table() const { return act_; }

 private:
  GroupRef g_;
  std::size_t size_ = 0;
  std::vector<Point> act_;
};

struct Orbit {
  Point rep;                  // least point
  std::vector<Point> points;  // sorted
};

// Sorted by (size, least point).
std::vector<Orbit> orbits(const GSet& x);
Subgroup stabilizer(const GSet& x, Point p);

GSet trivial_gset(const GroupRef& g, std::size_t points);
// G/S on left cosets, numbered in order of their least element.
GSet coset_gset(const Subgroup& s);
GSet gset_product(const GSet& x, const GSet& y);
GSet gset_union(const GSet& x, const GSet& y);

/// A finite (H,G)-biset: left H-action and commuting right G-action.
class Biset {
 public:
  Biset() = default;
  // Validated: both action laws and commutation.  Throws on failure.
  static Biset make(GroupRef left, GroupRef right, std::size_t size, std::vector<Point> lact,
                    std::vector<Point> ract);
  static Biset trusted(GroupRef left, GroupRef right, std::size_t size, std::vector<Point> lact,
                       std::vector<Point> ract);

  const GroupRef& left() const { return h_; }
  const GroupRef& right() const { return g_; }
  std::size_t size() const { return size_; }
  Point lmul(Elt h, Point u) const { return lact_[static_cast<std::size_t>(h) * size_ + u]; }
  Point rmul(Point u, Elt g) const { return ract_[static_cast<std::size_t>(g) * size_ + u]; }
  const std::vector<Point>& lact() const { return lact_; }
  const std::vector<Point>& ract() const { return ract_; }

  // The (H x G)-set structure (h,g).u = h.u.g^-1 over product_of(H,G).
  GSet as_gset() const;

 private:
  GroupRef h_;
  GroupRef g_;
  std::size_t size_ = 0;
  std::vector<Point> lact_;  // lact_[h * size + u]
  std::vector<Point> ract_;  // ract_[g * size + u]
};

struct Composition {
  Biset biset;
  std::vector<Point> class_of;  // (v * |U| + u) -> point of V x_H U
};

// V over (L,H) and U over (H,G) give V x_H U over (L,G).
Composition compose_with_classes(const Biset& v, const Biset& u);
Biset compose(const Biset& v, const Biset& u);

// For f : G -> H.  t(f) is the (H,G)-biset H with u.g = u f(g); r(f) is the
// (G,H)-biset H with g.u = f(g) u.
Biset elementary_t(const Hom& f);
Biset elementary_r(const Hom& f);
Biset identity_biset(const GroupRef& g);
// (H x G)/S for S a subgroup of product_of(H,G).group.
Biset transitive_biset(const GroupRef& h, const GroupRef& g, const Subgroup& s);

struct TransitivePiece {
  Point rep;
  Subgroup stabilizer;  // in product_of(H,G).group
  std::vector<Point> points;
};
std::vector<TransitivePiece> transitive_decomposition(const Biset& u);

// An equivariant bijection a -> b if one exists.
std::optional<std::vector<Point>> biset_iso(const Biset& a, const Biset& b);
bool is_equivariant_bijection(const Biset& a, const Biset& b, const std::vector<Point>& phi);

Biset disjoint_union(const Biset& a, const Biset& b);
// Same biset with points renamed: new point perm[u] carries old point u.
Biset relabel(const Biset& u, const std::vector<Point>& perm);

// U x_G X for a left G-set X.
GSet apply_to_gset(const Biset& u, const GSet& x);

}  // namespace bisetkit
