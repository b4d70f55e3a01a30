#include "bisetkit/biset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "bisetkit/error.hpp"
#include "bisetkit/group_algorithms.hpp"

namespace bisetkit {

namespace {

void check_action_table(const Group& g, std::size_t size, const std::vector<Point>& act, bool right,
                        const char* what) {
  if (act.size() != g.order() * size)
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " table has wrong size");
  for (Point p : act)
    if (p >= size) throw Error(ErrorKind::PointOutOfRange, std::string(what) + " table entry out of range");
  auto at = [&](Elt a, Point x) { return act[static_cast<std::size_t>(a) * size + x]; };
  for (Point x = 0; x < size; ++x)
    if (at(g.identity(), x) != x)
      throw Error(ErrorKind::InvalidArgument, std::string(what) + ": identity does not act trivially");
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = 0; b < g.order(); ++b)
      for (Point x = 0; x < size; ++x) {
        // left: a.(b.x) = (ab).x ; right: (x.a).b = x.(ab)
        Point lhs = right ? at(b, at(a, x)) : at(a, at(b, x));
        if (lhs != at(g.mul(a, b), x)) {
          std::ostringstream os;
          os << what << ": action law fails at (" << a << "," << b << "," << x << ")";
          throw Error(ErrorKind::InvalidArgument, os.str());
        }
      }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Cosets xS of s in its parent, numbered by least element.
std::vector<Point> coset_index(const Subgroup& s, std::vector<Elt>* reps) {
  const auto& g = *s.parent;
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> idx(g.order(), kUnset);
  Point next = 0;
  for (Elt x = 0; x < g.order(); ++x) {
    if (idx[x] != kUnset) continue;
    for (Elt y : s.elems) idx[g.mul(x, y)] = next;
    if (reps) reps->push_back(x);
    ++next;
  }
  return idx;
}

}  // namespace

GSet GSet::make(GroupRef g, std::size_t size, std::vector<Point> act) {
  check_action_table(*g, size, act, false, "G-set");
  return trusted(std::move(g), size, std::move(act));
}

GSet GSet::trusted(GroupRef g, std::size_t size, std::vector<Point> act) {
  GSet x;
  x.g_ = std::move(g);
  x.size_ = size;
  x.act_ = std::move(act);
  return x;
}

std::vector<Orbit> orbits(const GSet& x) {
  const auto& g = *x.group();
  std::vector<char> seen(x.size(), 0);
  std::vector<Orbit> out;
  for (Point p = 0; p < x.size(); ++p) {
    if (seen[p]) continue;
    Orbit o{p, {p}};
    seen[p] = 1;
    for (std::size_t i = 0; i < o.points.size(); ++i)
      for (Elt s : g.generators()) {
        Point q = x.act(s, o.points[i]);
        if (!seen[q]) {
          seen[q] = 1;
          o.points.push_back(q);
        }
      }
    std::sort(o.points.begin(), o.points.end());
    out.push_back(std::move(o));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Orbit& a, const Orbit& b) { return a.points.size() < b.points.size(); });
  return out;
}

Subgroup stabilizer(const GSet& x, Point p) {
  if (p >= x.size()) throw Error(ErrorKind::PointOutOfRange, "stabilizer: point out of range");
  Subgroup s{x.group(), {}};
  for (Elt g = 0; g < x.group()->order(); ++g)
    if (x.act(g, p) == p) s.elems.push_back(g);
  return s;
}

GSet trivial_gset(const GroupRef& g, std::size_t points) {
  std::vector<Point> act(g->order() * points);
  for (std::size_t a = 0; a < g->order(); ++a)
    for (std::size_t p = 0; p < points; ++p) act[a * points + p] = static_cast<Point>(p);
  return GSet::trusted(g, points, std::move(act));
}

GSet coset_gset(const Subgroup& s) {
  const auto& g = *s.parent;
  std::vector<Elt> reps;
  auto idx = coset_index(s, &reps);
  const std::size_t m = reps.size();
  std::vector<Point> act(g.order() * m);
  for (Elt a = 0; a < g.order(); ++a)
    for (std::size_t c = 0; c < m; ++c) act[a * m + c] = idx[g.mul(a, reps[c])];
  return GSet::trusted(s.parent, m, std::move(act));
}

GSet gset_product(const GSet& x, const GSet& y) {
  if (x.group() != y.group()) throw Error(ErrorKind::GroupMismatch, "gset_product: different groups");
  const std::size_t m = x.size() * y.size();
  std::vector<Point> act(x.group()->order() * m);
  for (Elt a = 0; a < x.group()->order(); ++a)
    for (Point p = 0; p < x.size(); ++p)
      for (Point q = 0; q < y.size(); ++q)
        act[a * m + p * y.size() + q] = static_cast<Point>(x.act(a, p) * y.size() + y.act(a, q));
  return GSet::trusted(x.group(), m, std::move(act));
}

GSet gset_union(const GSet& x, const GSet& y) {
  if (x.group() != y.group()) throw Error(ErrorKind::GroupMismatch, "gset_union: different groups");
  const std::size_t m = x.size() + y.size();
  std::vector<Point> act(x.group()->order() * m);
  for (Elt a = 0; a < x.group()->order(); ++a) {
    for (Point p = 0; p < x.size(); ++p) act[a * m + p] = x.act(a, p);
    for (Point q = 0; q < y.size(); ++q)
      act[a * m + x.size() + q] = static_cast<Point>(x.size() + y.act(a, q));
  }
  return GSet::trusted(x.group(), m, std::move(act));
}

Biset Biset::make(GroupRef left, GroupRef right, std::size_t size, std::vector<Point> lact,
                  std::vector<Point> ract) {
  check_action_table(*left, size, lact, false, "left action");
  check_action_table(*right, size, ract, true, "right action");
  for (Elt h = 0; h < left->order(); ++h)
    for (Elt g = 0; g < right->order(); ++g)
      for (Point u = 0; u < size; ++u)
        if (ract[g * size + lact[h * size + u]] != lact[h * size + ract[g * size + u]])
          throw Error(ErrorKind::InvalidArgument, "biset actions do not commute");
  return trusted(std::move(left), std::move(right), size, std::move(lact), std::move(ract));
}

Biset Biset::trusted(GroupRef left, GroupRef right, std::size_t size, std::vector<Point> lact,
                     std::vector<Point> ract) {
  Biset b;
  b.h_ = std::move(left);
  b.g_ = std::move(right);
  b.size_ = size;
  b.lact_ = std::move(lact);
  b.ract_ = std::move(ract);
  return b;
}

GSet Biset::as_gset() const {
  const auto& p = product_of(h_, g_);
  std::vector<Point> act(p.group->order() * size_);
  for (Elt x = 0; x < p.group->order(); ++x) {
    Elt h = p.first_of(x), ginv = g_->inv(p.second_of(x));
    for (Point u = 0; u < size_; ++u) act[x * size_ + u] = lmul(h, rmul(u, ginv));
  }
  return GSet::trusted(p.group, size_, std::move(act));
}

Composition compose_with_classes(const Biset& v, const Biset& u) {
  if (v.right() != u.left()) throw Error(ErrorKind::GroupMismatch, "compose: middle groups differ");
  const auto& h = *u.left();
  const std::size_t nv = v.size(), nu = u.size();
  UnionFind uf(nv * nu);
  for (Elt s : h.generators())
    for (Point a = 0; a < nv; ++a)
      for (Point b = 0; b < nu; ++b) uf.unite(v.rmul(a, s) * nu + b, a * nu + u.lmul(s, b));

  constexpr Point kUnset = ~Point{0};
  std::vector<Point> root_to_class(nv * nu, kUnset);
  std::vector<Point> class_of(nv * nu);
  std::vector<std::size_t> rep;
  for (std::size_t i = 0; i < nv * nu; ++i) {
    std::size_t r = uf.find(i);
    if (root_to_class[r] == kUnset) {
      root_to_class[r] = static_cast<Point>(rep.size());
      rep.push_back(i);
    }
    class_of[i] = root_to_class[r];
  }
  const std::size_t m = rep.size();
  const auto& l = *v.left();
  const auto& g = *u.right();
  std::vector<Point> lact(l.order() * m), ract(g.order() * m);
  for (std::size_t c = 0; c < m; ++c) {
    auto a = static_cast<Point>(rep[c] / nu), b = static_cast<Point>(rep[c] % nu);
    for (Elt x = 0; x < l.order(); ++x) lact[x * m + c] = class_of[v.lmul(x, a) * nu + b];
    for (Elt y = 0; y < g.order(); ++y) ract[y * m + c] = class_of[a * nu + u.rmul(b, y)];
  }
  return Composition{Biset::trusted(v.left(), u.right(), m, std::move(lact), std::move(ract)),
                     std::move(class_of)};
}

Biset compose(const Biset& v, const Biset& u) { return compose_with_classes(v, u).biset; }

Biset elementary_t(const Hom& f) {
  const auto& g = *f.source;
  const auto& h = *f.target;
  const std::size_t n = h.order();
  std::vector<Point> lact(n * n), ract(g.order() * n);
  for (Elt a = 0; a < n; ++a)
    for (Elt u = 0; u < n; ++u) lact[a * n + u] = h.mul(a, u);
  for (Elt x = 0; x < g.order(); ++x)
    for (Elt u = 0; u < n; ++u) ract[x * n + u] = h.mul(u, f.map[x]);
  return Biset::trusted(f.target, f.source, n, std::move(lact), std::move(ract));
}

Biset elementary_r(const Hom& f) {
  const auto& g = *f.source;
  const auto& h = *f.target;
  const std::size_t n = h.order();
  std::vector<Point> lact(g.order() * n), ract(n * n);
  for (Elt x = 0; x < g.order(); ++x)
    for (Elt u = 0; u < n; ++u) lact[x * n + u] = h.mul(f.map[x], u);
  for (Elt a = 0; a < n; ++a)
    for (Elt u = 0; u < n; ++u) ract[a * n + u] = h.mul(u, a);
  return Biset::trusted(f.source, f.target, n, std::move(lact), std::move(ract));
}

Biset identity_biset(const GroupRef& g) { return elementary_t(Hom::identity(g)); }

Biset transitive_biset(const GroupRef& h, const GroupRef& g, const Subgroup& s) {
  const auto& p = product_of(h, g);
  if (s.parent != p.group) throw Error(ErrorKind::GroupMismatch, "transitive_biset: subgroup not in HxG");
  std::vector<Elt> reps;
  auto idx = coset_index(s, &reps);
  const std::size_t m = reps.size();
  const auto& pg = *p.group;
  std::vector<Point> lact(h->order() * m), ract(g->order() * m);
  for (Elt a = 0; a < h->order(); ++a)
    for (std::size_t c = 0; c < m; ++c) lact[a * m + c] = idx[pg.mul(p.pair(a, g->identity()), reps[c])];
  for (Elt b = 0; b < g->order(); ++b)
    for (std::size_t c = 0; c < m; ++c)
      ract[b * m + c] = idx[pg.mul(p.pair(h->identity(), g->inv(b)), reps[c])];
  return Biset::trusted(h, g, m, std::move(lact), std::move(ract));
}

std::vector<TransitivePiece> transitive_decomposition(const Biset& u) {
  GSet x = u.as_gset();
  std::vector<TransitivePiece> out;
  for (auto& o : orbits(x)) out.push_back(TransitivePiece{o.rep, stabilizer(x, o.rep), std::move(o.points)});
  return out;
}

bool is_equivariant_bijection(const Biset& a, const Biset& b, const std::vector<Point>& phi) {
  if (a.left() != b.left() || a.right() != b.right() || a.size() != b.size() || phi.size() != a.size())
    return false;
  std::vector<char> hit(b.size(), 0);
  for (Point q : phi) {
    if (q >= b.size() || hit[q]) return false;
    hit[q] = 1;
  }
  for (Point p = 0; p < a.size(); ++p) {
    for (Elt h = 0; h < a.left()->order(); ++h)
      if (phi[a.lmul(h, p)] != b.lmul(h, phi[p])) return false;
    for (Elt g = 0; g < a.right()->order(); ++g)
      if (phi[a.rmul(p, g)] != b.rmul(phi[p], g)) return false;
  }
  return true;
}

std::optional<std::vector<Point>> biset_iso(const Biset& a, const Biset& b) {
  if (a.left() != b.left() || a.right() != b.right())
    throw Error(ErrorKind::GroupMismatch, "biset_iso: bisets over different groups");
  if (a.size() != b.size()) return std::nullopt;
  const auto& prod = product_of(a.left(), a.right());
  const auto& pg = *prod.group;
  const auto& classes = subgroup_classes(prod.group);
  GSet xa = a.as_gset(), xb = b.as_gset();
  auto pa = transitive_decomposition(a);
  auto pb = transitive_decomposition(b);
  if (pa.size() != pb.size()) return std::nullopt;

  std::vector<std::size_t> class_b(pb.size());
  for (std::size_t j = 0; j < pb.size(); ++j) class_b[j] = classes.classify(pb[j].stabilizer);
  std::vector<char> used(pb.size(), 0);
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> phi(a.size(), kUnset);

  for (const auto& piece : pa) {
    std::size_t ca = classes.classify(piece.stabilizer);
    std::size_t j = 0;
    while (j < pb.size() && (used[j] || class_b[j] != ca)) ++j;
    if (j == pb.size()) return std::nullopt;
    used[j] = 1;
    // Find c with c S_a c^-1 = S_b; then piece.rep maps to c^-1 . rep_b.
    std::optional<Elt> c;
    for (Elt x = 0; x < pg.order() && !c; ++x)
      if (conjugate_subgroup(piece.stabilizer, x).elems == pb[j].stabilizer.elems) c = x;
    if (!c) return std::nullopt;
    phi[piece.rep] = xb.act(pg.inv(*c), pb[j].rep);
    std::vector<Point> queue{piece.rep};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Elt s : pg.generators()) {
        Point p = xa.act(s, queue[i]);
        Point q = xb.act(s, phi[queue[i]]);
        if (phi[p] == kUnset) {
          phi[p] = q;
          queue.push_back(p);
        } else if (phi[p] != q) {
          return std::nullopt;
        }
      }
  }
  if (!is_equivariant_bijection(a, b, phi)) return std::nullopt;
  return phi;
}

Biset disjoint_union(const Biset& a, const Biset& b) {
  if (a.left() != b.left() || a.right() != b.right())
    throw Error(ErrorKind::GroupMismatch, "disjoint_union: bisets over different groups");
  const std::size_t m = a.size() + b.size();
  const std::size_t nh = a.left()->order(), ng = a.right()->order();
  std::vector<Point> lact(nh * m), ract(ng * m);
  auto off = static_cast<Point>(a.size());
  for (Elt h = 0; h < nh; ++h) {
    for (Point p = 0; p < a.size(); ++p) lact[h * m + p] = a.lmul(h, p);
    for (Point p = 0; p < b.size(); ++p) lact[h * m + off + p] = off + b.lmul(h, p);
  }
  for (Elt g = 0; g < ng; ++g) {
    for (Point p = 0; p < a.size(); ++p) ract[g * m + p] = a.rmul(p, g);
    for (Point p = 0; p < b.size(); ++p) ract[g * m + off + p] = off + b.rmul(p, g);
  }
  return Biset::trusted(a.left(), a.right(), m, std::move(lact), std::move(ract));
}

Biset relabel(const Biset& u, const std::vector<Point>& perm) {
  const std::size_t m = u.size();
  const std::size_t nh = u.left()->order(), ng = u.right()->order();
  std::vector<Point> lact(nh * m), ract(ng * m);
  for (Point p = 0; p < m; ++p) {
    for (Elt h = 0; h < nh; ++h) lact[h * m + perm[p]] = perm[u.lmul(h, p)];
    for (Elt g = 0; g < ng; ++g) ract[g * m + perm[p]] = perm[u.rmul(p, g)];
  }
  return Biset::trusted(u.left(), u.right(), m, std::move(lact), std::move(ract));
}

GSet apply_to_gset(const Biset& u, const GSet& x) {
  if (u.right() != x.group()) throw Error(ErrorKind::GroupMismatch, "apply_to_gset: group mismatch");
  const auto& g = *u.right();
  const std::size_t nu = u.size(), nx = x.size();
  UnionFind uf(nu * nx);
  for (Elt s : g.generators())
    for (Point a = 0; a < nu; ++a)
      for (Point b = 0; b < nx; ++b) uf.unite(u.rmul(a, s) * nx + b, a * nx + x.act(s, b));
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> root_to_class(nu * nx, kUnset);
  std::vector<Point> class_of(nu * nx);
  std::vector<std::size_t> rep;
  for (std::size_t i = 0; i < nu * nx; ++i) {
    std::size_t r = uf.find(i);
    if (root_to_class[r] == kUnset) {
      root_to_class[r] = static_cast<Point>(rep.size());
      rep.push_back(i);
    }
    class_of[i] = root_to_class[r];
  }
  const std::size_t m = rep.size();
  const auto& h = *u.left();
  std::vector<Point> act(h.order() * m);
  for (std::size_t c = 0; c < m; ++c) {
    auto a = static_cast<Point>(rep[c] / nx), b = static_cast<Point>(rep[c] % nx);
    for (Elt y = 0; y < h.order(); ++y) act[y * m + c] = class_of[u.lmul(y, a) * nx + b];
  }
  return GSet::trusted(u.left(), m, std::move(act));
}

}  // namespace bisetkit
