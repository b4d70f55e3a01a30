#include "bisetkit/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "bisetkit/error.hpp"

namespace bisetkit {

namespace {

std::atomic<std::uint64_t> g_next_serial{1};

std::vector<Elt> closure_of(const Group& g, const std::vector<Elt>& gens, std::vector<char>& seen) {
  std::vector<Elt> out{g.identity()};
  std::fill(seen.begin(), seen.end(), 0);
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elt s : gens) {
      Elt y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

Group::Group(std::size_t n, std::vector<Elt> table, std::string label)
    : n_(n), table_(std::move(table)), label_(std::move(label)), serial_(g_next_serial++) {
  for (Elt e = 0; e < n_; ++e) {
    bool is_id = true;
    for (Elt x = 0; x < n_ && is_id; ++x) is_id = mul(e, x) == x;
    if (is_id) {
      id_ = e;
      break;
    }
  }
  inv_.assign(n_, 0);
  for (Elt a = 0; a < n_; ++a)
    for (Elt b = 0; b < n_; ++b)
      if (mul(a, b) == id_) {
        inv_[a] = b;
        break;
      }
  ord_.assign(n_, 1);
  for (Elt a = 0; a < n_; ++a) {
    Elt p = a;
    while (p != id_) {
      p = mul(p, a);
      ++ord_[a];
    }
  }

  std::vector<Elt> by_order(n_);
  std::iota(by_order.begin(), by_order.end(), Elt{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [this](Elt a, Elt b) { return ord_[a] > ord_[b]; });
  std::vector<char> seen(n_, 0);
  std::vector<char> inside(n_, 0);
  inside[id_] = 1;
  std::size_t covered = 1;
  for (Elt a : by_order) {
    if (covered == n_) break;
    if (inside[a]) continue;
    gens_.push_back(a);
    auto sub = closure_of(*this, gens_, seen);
    covered = sub.size();
    for (Elt x : sub) inside[x] = 1;
  }
}

GroupRef Group::from_trusted_table(std::size_t order, std::vector<Elt> flat, std::string label) {
  return GroupRef(new Group(order, std::move(flat), std::move(label)));
}

GroupRef Group::from_cayley(const std::vector<std::vector<Elt>>& table, std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  std::vector<Elt> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::NotAGroup, "table is not square");
    for (Elt v : row) {
      if (v >= n) throw Error(ErrorKind::NotAGroup, "entry out of range");
      flat.push_back(v);
    }
  }
  auto at = [&](Elt a, Elt b) { return flat[a * n + b]; };

  std::optional<Elt> id;
  for (Elt e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (Elt x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) id = e;
  }
  if (!id) throw Error(ErrorKind::NotAGroup, "no two-sided identity");
  for (Elt a = 0; a < n; ++a) {
    bool found = false;
    for (Elt b = 0; b < n && !found; ++b) found = at(a, b) == *id && at(b, a) == *id;
    if (!found) {
      std::ostringstream os;
      os << "element " << a << " has no inverse";
      throw Error(ErrorKind::NotAGroup, os.str());
    }
  }
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      for (Elt c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          std::ostringstream os;
          os << "associativity fails at (" << a << "," << b << "," << c << ")";
          throw Error(ErrorKind::NotAGroup, os.str());
        }
  return from_trusted_table(n, std::move(flat), std::move(label));
}

bool Group::is_abelian() const {
  for (Elt a = 0; a < n_; ++a)
    for (Elt b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<Elt>> Group::cayley() const {
  std::vector<std::vector<Elt>> out(n_);
  for (std::size_t a = 0; a < n_; ++a)
    out[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * n_),
                  table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_));
  return out;
}

GroupRef Group::relabeled(std::string label) const {
  return from_trusted_table(n_, table_, std::move(label));
}

bool Subgroup::contains(Elt x) const { return std::binary_search(elems.begin(), elems.end(), x); }

bool Hom::is_homomorphism() const {
  if (map.size() != source->order()) return false;
  for (Elt x : map)
    if (x >= target->order()) return false;
  const auto n = static_cast<Elt>(source->order());
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) return false;
  return true;
}

bool Hom::is_injective() const {
  std::vector<char> hit(target->order(), 0);
  for (Elt y : map) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool Hom::is_surjective() const {
  std::vector<char> hit(target->order(), 0);
  std::size_t count = 0;
  for (Elt y : map)
    if (!hit[y]) {
      hit[y] = 1;
      ++count;
    }
  return count == target->order();
}

Hom Hom::identity(const GroupRef& g) {
  Hom h{g, g, std::vector<Elt>(g->order())};
  std::iota(h.map.begin(), h.map.end(), Elt{0});
  return h;
}

Hom Hom::trivial(const GroupRef& src, const GroupRef& dst) {
  return Hom{src, dst, std::vector<Elt>(src->order(), dst->identity())};
}

Hom compose(const Hom& g, const Hom& f) {
  if (f.target != g.source) throw Error(ErrorKind::GroupMismatch, "compose: target/source differ");
  Hom out{f.source, g.target, std::vector<Elt>(f.map.size())};
  for (std::size_t i = 0; i < f.map.size(); ++i) out.map[i] = g.map[f.map[i]];
  return out;
}

Hom conjugate(Elt h, const Hom& f) {
  Hom out = f;
  for (auto& y : out.map) y = f.target->conj(h, y);
  return out;
}

Hom inverse(const Hom& f) {
  if (f.source->order() != f.target->order() || !f.is_injective())
    throw Error(ErrorKind::InvalidArgument, "inverse: hom is not bijective");
  Hom out{f.target, f.source, std::vector<Elt>(f.map.size())};
  for (std::size_t i = 0; i < f.map.size(); ++i) out.map[f.map[i]] = static_cast<Elt>(i);
  return out;
}

HomClass hom_class_of(const Hom& f) {
  HomClass c{f};
  std::vector<Elt> cand(f.map.size());
  for (Elt h = 0; h < f.target->order(); ++h) {
    for (std::size_t i = 0; i < cand.size(); ++i) cand[i] = f.target->conj(h, f.map[i]);
    if (cand < c.rep.map) c.rep.map = cand;
  }
  return c;
}

GroupRef group_from_perm_gens(std::size_t degree, const std::vector<Perm>& gens, std::string label,
                              std::size_t bound) {
  for (const auto& p : gens) {
    if (p.size() != degree) throw Error(ErrorKind::InvalidArgument, "permutation has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto v : p) {
      if (v >= degree || hit[v]) throw Error(ErrorKind::InvalidArgument, "not a permutation");
      hit[v] = 1;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> elems{id};
  std::map<Perm, Elt> index{{id, 0}};
  auto apply = [degree](const Perm& a, const Perm& b) {
    Perm c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      Perm c = apply(elems[i], s);
      if (index.emplace(c, static_cast<Elt>(elems.size())).second) {
        elems.push_back(std::move(c));
        if (elems.size() > bound) throw Error(ErrorKind::TooLarge, "permutation group exceeds bound");
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elt> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = index.at(apply(elems[a], elems[b]));
  return Group::from_trusted_table(n, std::move(flat), std::move(label));
}

DirectProduct direct_product(const GroupRef& a, const GroupRef& b, std::size_t bound) {
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  if (n > bound) throw Error(ErrorKind::TooLarge, "direct product exceeds bound");
  std::vector<Elt> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elt p = a->mul(static_cast<Elt>(x / nb), static_cast<Elt>(y / nb));
      Elt q = b->mul(static_cast<Elt>(x % nb), static_cast<Elt>(y % nb));
      flat[x * n + y] = static_cast<Elt>(p * nb + q);
    }
  auto g = Group::from_trusted_table(n, std::move(flat), a->label() + "x" + b->label());
  return DirectProduct{g, a, b};
}

const DirectProduct& product_of(const GroupRef& a, const GroupRef& b) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, DirectProduct> memo;
  std::lock_guard lock(mu);
  auto key = std::make_pair(a->serial(), b->serial());
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, direct_product(a, b)).first;
  return it->second;
}

}  // namespace bisetkit
