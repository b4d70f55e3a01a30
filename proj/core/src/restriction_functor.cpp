#include "bisetkit/restriction_functor.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "bisetkit/error.hpp"
#include "bisetkit/group_algorithms.hpp"
#include "bisetkit/library.hpp"

namespace bisetkit {

QMatrix ConstantFunctor::apply(const Hom&) const { return QMatrix::identity(1); }

std::vector<GroupRef> ConstantFunctor::witnesses(const GroupRef& g) const {
  std::vector<GroupRef> out;
  for (const auto& s : subgroups(g)) out.push_back(subgroup_as_group(s).group);
  return out;
}

const std::vector<std::vector<Elt>>& SignFunctor::characters(const GroupRef& g) const {
  {
    std::lock_guard lock(mu_);
    auto it = chars_.find(g->serial());
    if (it != chars_.end()) return it->second;
  }
  std::vector<std::vector<Elt>> chars;
  for (const auto& h : all_homs(g, builtin_group("C2"))) chars.push_back(h.map);
  std::lock_guard lock(mu_);
  return chars_.emplace(g->serial(), std::move(chars)).first->second;
}

std::size_t SignFunctor::dim(const GroupRef& g) const { return characters(g).size(); }

QMatrix SignFunctor::apply(const Hom& f) const {
  const auto& src = characters(f.source);
  const auto& dst = characters(f.target);
  QMatrix m(src.size(), dst.size());
  std::vector<Elt> pulled(f.source->order());
  for (std::size_t j = 0; j < dst.size(); ++j) {
    for (std::size_t x = 0; x < pulled.size(); ++x) pulled[x] = dst[j][f.map[x]];
    auto it = std::lower_bound(src.begin(), src.end(), pulled);
    m(static_cast<std::size_t>(it - src.begin()), j) = 1;
  }
  return m;
}

std::vector<GroupRef> SignFunctor::witnesses(const GroupRef& g) const {
  std::vector<GroupRef> out;
  for (const auto& s : subgroups(product_of(g, builtin_group("C2")).group)) out.push_back(subgroup_as_group(s).group);
  return out;
}

namespace {

std::string describe(const GroupUniverse& u, std::size_t src, std::size_t dst, const std::vector<Elt>& map) {
  std::ostringstream os;
  os << u.member(src)->label() << "->" << u.member(dst)->label() << " [";
  for (std::size_t i = 0; i < map.size(); ++i) os << (i ? "," : "") << map[i];
  os << "]";
  return os.str();
}

}  // namespace

TableFunctor::TableFunctor(UniverseRef universe, std::vector<std::size_t> dims, const std::vector<Entry>& entries,
                           std::string name)
    : universe_(std::move(universe)), dims_(std::move(dims)), name_(std::move(name)) {
  const auto members = universe_->members();
  if (dims_.size() != members.size())
    throw Error(ErrorKind::DimensionMismatch, "functor table: one dimension per universe member required");
  for (const auto& e : entries) {
    if (e.src >= members.size() || e.dst >= members.size())
      throw Error(ErrorKind::InvalidArgument, "functor table: member index out of range");
    Hom f{members[e.src], members[e.dst], e.map};
    if (!f.is_homomorphism())
      throw Error(ErrorKind::FunctorLawViolation,
                  "functor table: not a homomorphism: " + describe(*universe_, e.src, e.dst, e.map));
    if (e.matrix.rows() != dims_[e.src] || e.matrix.cols() != dims_[e.dst])
      throw Error(ErrorKind::DimensionMismatch,
                  "functor table: matrix shape for " + describe(*universe_, e.src, e.dst, e.map));
    auto rep = hom_class_of(f).rep.map;
    auto key = std::make_tuple(e.src, e.dst, rep);
    auto [it, fresh] = mats_.emplace(key, e.matrix);
    if (!fresh && it->second != e.matrix)
      throw Error(ErrorKind::FunctorLawViolation, "functor table: conjugate homs carry different matrices at " +
                                                      describe(*universe_, e.src, e.dst, e.map));
  }
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b)
      for (const auto& f : hom_classes(members[a], members[b]))
        if (!mats_.count({a, b, f.map}))
          throw Error(ErrorKind::FunctorLawViolation,
                      "functor table: no matrix for class " + describe(*universe_, a, b, f.map));
  for (std::size_t a = 0; a < members.size(); ++a)
    if (lookup(a, a, Hom::identity(members[a]).map) != QMatrix::identity(dims_[a]))
      throw Error(ErrorKind::FunctorLawViolation, "functor table: P(id) is not the identity on " +
                                                      members[a]->label());
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b)
      for (const auto& f : hom_classes(members[a], members[b]))
        for (std::size_t c = 0; c < members.size(); ++c)
          for (const auto& g : hom_classes(members[b], members[c])) {
            Hom gf = compose(g, f);
            const auto& lhs = lookup(a, c, hom_class_of(gf).rep.map);
            if (lhs != lookup(a, b, f.map) * lookup(b, c, g.map))
              throw Error(ErrorKind::FunctorLawViolation,
                          "functor table: P(g o f) != P(f) P(g) for f = " + describe(*universe_, a, b, f.map) +
                              ", g = " + describe(*universe_, b, c, g.map));
          }
}

const QMatrix& TableFunctor::lookup(std::size_t src, std::size_t dst, const std::vector<Elt>& map) const {
  auto it = mats_.find({src, dst, map});
  if (it == mats_.end()) throw Error(ErrorKind::UnknownClass, "functor table: missing class");
  return it->second;
}

std::size_t TableFunctor::dim(const GroupRef& g) const { return dims_[universe_->require(g).index]; }

QMatrix TableFunctor::apply(const Hom& f) const {
  auto a = universe_->require(f.source);
  auto b = universe_->require(f.target);
  // Transport f to the members: b.iso o f o a.iso^-1.
  const auto& ma = universe_->member(a.index);
  std::vector<Elt> moved(ma->order());
  for (Elt x = 0; x < f.source->order(); ++x) moved[a.iso.map[x]] = b.iso.map[f.map[x]];
  Hom t{ma, universe_->member(b.index), moved};
  return lookup(a.index, b.index, hom_class_of(t).rep.map);
}

std::vector<GroupRef> TableFunctor::witnesses(const GroupRef& g) const {
  std::vector<GroupRef> out;
  for (const auto& s : subgroups(g)) out.push_back(subgroup_as_group(s).group);
  return out;
}

std::vector<TableFunctor::Entry> tabulate(const RestrictionFunctor& p, const GroupUniverse& u) {
  std::vector<TableFunctor::Entry> out;
  const auto members = u.members();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b)
      for (const auto& f : hom_classes(members[a], members[b])) out.push_back({a, b, f.map, p.apply(f)});
  return out;
}

}  // namespace bisetkit
