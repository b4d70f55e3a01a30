#include "bisetkit/burnside.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

#include "bisetkit/error.hpp"
#include "bisetkit/library.hpp"

namespace bisetkit {

std::vector<std::string> subgroup_class_names(const GroupRef& g) {
  static const UniverseRef names = builtin_universe("upto12");
  const auto& classes = subgroup_classes(g);
  std::vector<std::string> base(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& s = classes.rep(i);
    if (s.order() == 1) {
      base[i] = "1";
    } else if (s.order() == g->order()) {
      base[i] = g->label();
    } else if (s.order() <= 12) {
      auto id = names->identify(subgroup_as_group(s).group);
      base[i] = id ? names->member(id->index)->label() : "o" + std::to_string(s.order());
    } else {
      base[i] = "o" + std::to_string(s.order());
    }
  }
  std::map<std::string, std::size_t> count, seen;
  for (const auto& b : base) ++count[b];
  std::vector<std::string> out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    out[i] = base[i];
    if (count[base[i]] > 1) {
      std::size_t k = seen[base[i]]++;
      std::string suffix;
      do {
        suffix.insert(suffix.begin(), static_cast<char>('a' + k % 26));
        k /= 26;
      } while (k > 0);
      out[i] += suffix;
    }
  }
  return out;
}

BurnsideRing::BurnsideRing(GroupRef g) : g_(std::move(g)), classes_(&subgroup_classes(g_)) {
  for (const auto& n : subgroup_class_names(g_)) labels_.push_back("[" + g_->label() + "/" + n + "]");
  for (std::size_t i = 0; i < dim(); ++i) cosets_.push_back(coset_gset(classes_->rep(i)));
  table_.assign(dim(), std::vector<QVector>(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) {
      table_[i][j] = vector_of(gset_product(cosets_[i], cosets_[j]));
      table_[j][i] = table_[i][j];
    }
}

QVector BurnsideRing::basis(std::size_t i) const {
  QVector v(dim());
  v.at(i) = 1;
  return v;
}

QVector BurnsideRing::one() const { return basis(dim() - 1); }

QVector BurnsideRing::vector_of(const GSet& x) const {
  if (x.group() != g_) throw Error(ErrorKind::GroupMismatch, "burnside_vector: G-set over another group");
  QVector v(dim());
  for (const auto& o : orbits(x)) v[classes_->classify(stabilizer(x, o.rep))] += 1;
  return v;
}

QVector BurnsideRing::multiply(const QVector& a, const QVector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "burnside_mult");
  QVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      Rational f = a[i] * b[j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (table_[i][j][k] != 0) out[k] += f * table_[i][j][k];
    }
  }
  return out;
}

const BurnsideRing& burnside_ring(const GroupRef& g) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<BurnsideRing>> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(g->serial());
    if (it != memo.end()) return *it->second;
  }
  auto ring = std::make_unique<BurnsideRing>(g);
  std::lock_guard lock(mu);
  return *memo.emplace(g->serial(), std::move(ring)).first->second;
}

BiggerBurnside::BiggerBurnside(GroupRef g, UniverseRef universe) : g_(std::move(g)), universe_(std::move(universe)) {
  auto members = universe_->members();
  for (const auto& m : members) auts_.push_back(automorphisms(m));
  std::vector<std::size_t> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return members[a]->order() < members[b]->order(); });
  for (std::size_t m : order) {
    std::set<std::vector<Elt>> canon;
    for (const auto& f : hom_classes(members[m], g_)) canon.insert(canonical_map(m, f.map));
    for (const auto& c : canon) {
      index_.emplace(std::make_pair(m, c), basis_.size());
      basis_.push_back(BasisElement{m, Hom{members[m], g_, c}});
    }
  }
}

std::vector<Elt> BiggerBurnside::canonical_map(std::size_t member, const std::vector<Elt>& map) const {
  const auto& k = universe_->member(member);
  std::vector<Elt> best;
  Hom f{k, g_, std::vector<Elt>(map.size())};
  for (const auto& a : auts_[member]) {
    for (std::size_t x = 0; x < map.size(); ++x) f.map[x] = map[a.map[x]];
    auto r = hom_class_of(f).rep.map;
    if (best.empty() || r < best) best = std::move(r);
  }
  return best;
}

std::string BiggerBurnside::label(std::size_t i) const {
  const auto& e = basis_[i];
  std::size_t k = 0;
  for (std::size_t j = 0; j < i; ++j)
    if (basis_[j].member == e.member) ++k;
  std::string kind = e.rep.is_injective() ? "inj" : (e.rep.is_surjective() ? "surj" : "hom");
  return "[" + e.rep.source->label() + "->" + g_->label() + ":" + kind + std::to_string(k) + "]";
}

std::size_t BiggerBurnside::classify(const Hom& f) const {
  if (f.target != g_) throw Error(ErrorKind::GroupMismatch, "bigger Burnside: hom into another group");
  auto id = universe_->require(f.source);
  std::vector<Elt> moved(f.map.size());
  for (std::size_t x = 0; x < f.map.size(); ++x) moved[id.iso.map[x]] = f.map[x];
  auto it = index_.find({id.index, canonical_map(id.index, moved)});
  if (it == index_.end()) throw Error(ErrorKind::UnknownClass, "hom class missing from bigger Burnside basis");
  return it->second;
}

std::vector<Hom> BiggerBurnside::product_terms(std::size_t i, std::size_t j) const {
  const Hom& f = basis_.at(i).rep;
  const Hom& g = basis_.at(j).rep;
  const auto& G = *g_;
  auto fk = image(f).elems;
  auto gl = image(g).elems;
  std::vector<char> seen(G.order(), 0);
  const auto& prod = product_of(f.source, g.source);
  std::vector<Hom> out;
  for (Elt x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    for (Elt a : fk)
      for (Elt b : gl) seen[G.mul(G.mul(a, x), b)] = 1;
    Subgroup gamma{prod.group, {}};
    Elt xinv = G.inv(x);
    for (Elt k = 0; k < f.source->order(); ++k)
      for (Elt l = 0; l < g.source->order(); ++l)
        if (f.map[k] == G.mul(G.mul(x, g.map[l]), xinv)) gamma.elems.push_back(prod.pair(k, l));
    std::sort(gamma.elems.begin(), gamma.elems.end());
    const auto& sg = subgroup_as_group(gamma);
    Hom to_g{sg.group, g_, std::vector<Elt>(sg.group->order())};
    for (Elt y = 0; y < sg.group->order(); ++y) to_g.map[y] = f.map[prod.first_of(sg.inclusion.map[y])];
    out.push_back(std::move(to_g));
  }
  return out;
}

QVector BiggerBurnside::multiply_basis(std::size_t i, std::size_t j) const {
  QVector out(dim());
  for (const auto& t : product_terms(i, j)) out[classify(t)] += 1;
  return out;
}

QVector BiggerBurnside::multiply(const QVector& a, const QVector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "bigger_burnside_mult");
  QVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      QVector p = multiply_basis(i, j);
      for (std::size_t k = 0; k < dim(); ++k) out[k] += a[i] * b[j] * p[k];
    }
  }
  return out;
}

QVector BiggerBurnside::one() const {
  QVector v(dim());
  v[classify(Hom::identity(g_))] = 1;
  return v;
}

TildeDeflation tilde_deflation(const BiggerBurnside& b) {
  const auto& g = b.group();
  const auto& omega = burnside_ring(g);
  const auto& classes = subgroup_classes(g);
  TildeDeflation out;
  out.projection = QMatrix(omega.dim(), b.dim());
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const Hom& f = b.element(i).rep;
    out.projection(classes.classify(image(f)), i) = 1;
    Subgroup ker = kernel(f);
    if (ker.order() == 1) continue;
    auto q = quotient(f.source, ker);
    Hom bar{q.group, g, std::vector<Elt>(q.group->order())};
    for (Elt x = 0; x < f.source->order(); ++x) bar.map[q.projection.map[x]] = f.map[x];
    try {
      std::size_t j = b.classify(bar);
      if (j != i) rows.push_back(i < j ? SparseRow{{i, 1}, {j, -1}} : SparseRow{{j, -1}, {i, 1}});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UniverseOverflow) throw;
      out.subquotient_closed = false;
    }
  }
  for (const auto& s : subgroups(g))
    if (!b.universe()->identify(subgroup_as_group(s).group)) out.subquotient_closed = false;
  out.quotient = PresentedModule::from_sparse(b.dim(), rows);
  return out;
}

DoubleBurnside::DoubleBurnside(GroupRef h, GroupRef g)
    : h_(std::move(h)), g_(std::move(g)), classes_(&subgroup_classes(product_of(h_, g_).group)) {
  auto names = subgroup_class_names(product_of(h_, g_).group);
  for (std::size_t i = 0; i < classes_->size(); ++i) {
    bisets_.push_back(transitive_biset(h_, g_, classes_->rep(i)));
    labels_.push_back("[(" + h_->label() + "x" + g_->label() + ")/" + names[i] + "]");
  }
}

QVector DoubleBurnside::basis(std::size_t i) const {
  QVector v(dim());
  v.at(i) = 1;
  return v;
}

QVector DoubleBurnside::vector_of(const Biset& u) const {
  if (u.left() != h_ || u.right() != g_) throw Error(ErrorKind::GroupMismatch, "double Burnside: wrong groups");
  QVector v(dim());
  for (const auto& piece : transitive_decomposition(u)) v[classes_->classify(piece.stabilizer)] += 1;
  return v;
}

std::size_t DoubleBurnside::identity_index() const {
  if (h_ != g_) throw Error(ErrorKind::GroupMismatch, "identity biset needs equal groups");
  auto v = vector_of(identity_biset(g_));
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), Rational(1)) - v.begin());
}

const DoubleBurnside& double_burnside(const GroupRef& h, const GroupRef& g) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, std::unique_ptr<DoubleBurnside>> memo;
  auto key = std::make_pair(h->serial(), g->serial());
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  auto value = std::make_unique<DoubleBurnside>(h, g);
  std::lock_guard lock(mu);
  return *memo.emplace(key, std::move(value)).first->second;
}

const QVector& double_burnside_compose_basis(const DoubleBurnside& left, std::size_t i, const DoubleBurnside& right,
                                             std::size_t j) {
  if (left.right() != right.left()) throw Error(ErrorKind::GroupMismatch, "double Burnside compose");
  using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::size_t, std::size_t>;
  static std::mutex mu;
  static std::map<Key, QVector> memo;
  Key key{left.left()->serial(), left.right()->serial(), right.right()->serial(), i, j};
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const auto& target = double_burnside(left.left(), right.right());
  QVector v = target.vector_of(compose(left.basis_biset(i), right.basis_biset(j)));
  std::lock_guard lock(mu);
  return memo.emplace(key, std::move(v)).first->second;
}

QVector double_burnside_compose(const DoubleBurnside& left, const QVector& b, const DoubleBurnside& right,
                                const QVector& a) {
  const auto& target = double_burnside(left.left(), right.right());
  QVector out(target.dim());
  for (std::size_t i = 0; i < left.dim(); ++i) {
    if (b[i] == 0) continue;
    for (std::size_t j = 0; j < right.dim(); ++j) {
      if (a[j] == 0) continue;
      const auto& c = double_burnside_compose_basis(left, i, right, j);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) out[k] += b[i] * a[j] * c[k];
    }
  }
  return out;
}

}  // namespace bisetkit
