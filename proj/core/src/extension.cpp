#include "bisetkit/extension.hpp"

#include <algorithm>
#include <numeric>

#include "bisetkit/error.hpp"
#include "bisetkit/group_algorithms.hpp"
#include "bisetkit/span.hpp"

namespace bisetkit {

namespace {

QVector unit_vector(std::size_t n, std::size_t j) {
  QVector v(n);
  v.at(j) = 1;
  return v;
}

bool contained(const Subgroup& a, const Subgroup& b) {
  return std::all_of(a.elems.begin(), a.elems.end(), [&](Elt x) { return b.contains(x); });
}

}  // namespace

ExtensionSpace::ExtensionSpace(RestrictionFunctorRef p, UniverseRef universe, GroupRef g, ScalarMode mode)
    : p_(std::move(p)), universe_(std::move(universe)), g_(std::move(g)) {
  const auto members = universe_->members();
  std::vector<std::size_t> ord(members.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(),
                   [&](std::size_t a, std::size_t b) { return members[a]->order() < members[b]->order(); });

  for (std::size_t m : ord) {
    const auto& cls = hom_classes(members[m], g_);
    std::size_t d = p_->dim(members[m]);
    auto& offs = offset_[m];
    for (std::size_t c = 0; c < cls.size(); ++c) {
      offs.push_back(basis_.size());
      for (std::size_t j = 0; j < d; ++j) basis_.push_back({m, c, j});
    }
  }

  std::vector<SparseRow> rows;
  for (std::size_t src : ord) {
    const auto& k = members[src];
    std::size_t dk = p_->dim(k);
    for (const auto& n : normal_subgroups(k)) {
      std::vector<Hom> pis;
      if (n.order() == 1) {
        pis = automorphism_generators(k);
      } else {
        auto q = quotient(k, n);
        auto id = universe_->identify(q.group);
        if (!id) continue;
        pis.push_back(compose(id->iso, q.projection));
      }
      for (const auto& pi : pis) {
        std::size_t dst = *universe_->index_of(pi.target);
        std::size_t dm = p_->dim(pi.target);
        QMatrix pm = p_->apply(pi);
        const auto& cls = hom_classes(pi.target, g_);
        for (std::size_t c = 0; c < cls.size(); ++c) {
          std::size_t fc = class_index(src, compose(cls[c], pi));
          for (std::size_t j = 0; j < dm; ++j) {
            std::map<std::size_t, Rational> acc;
            acc[index(dst, c, j)] += 1;
            for (std::size_t i = 0; i < dk; ++i)
              if (pm(i, j) != 0) acc[index(src, fc, i)] -= pm(i, j);
            SparseRow row;
            for (auto& [col, v] : acc)
              if (v != 0) row.emplace_back(col, v);
            if (!row.empty()) rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  n_relations_ = rows.size();
  module_ = PresentedModule::from_sparse(basis_.size(), rows, mode, PivotOrder::Trailing);
}

std::size_t ExtensionSpace::class_index(std::size_t member, const Hom& f) const {
  const auto& cls = hom_classes(universe_->member(member), g_);
  auto rep = hom_class_of(f).rep.map;
  auto it = std::lower_bound(cls.begin(), cls.end(), rep, [](const Hom& h, const std::vector<Elt>& m) {
    return h.map < m;
  });
  if (it == cls.end() || it->map != rep) throw Error(ErrorKind::UnknownClass, "extension: hom class not found");
  return static_cast<std::size_t>(it - cls.begin());
}

std::string ExtensionSpace::label(std::size_t i) const {
  const auto& b = basis_.at(i);
  const auto& f = hom_classes(universe_->member(b.member), g_)[b.hom_class];
  std::string kind;
  if (f.is_injective() && f.is_surjective())
    kind = "iso";
  else if (f.is_injective())
    kind = "inj";
  else if (f.is_surjective())
    kind = "surj";
  else
    kind = "hom";
  std::size_t same_kind = 0;
  const auto& cls = hom_classes(universe_->member(b.member), g_);
  for (std::size_t c = 0; c < b.hom_class; ++c) {
    bool inj = cls[c].is_injective(), sur = cls[c].is_surjective();
    if ((inj && sur && kind == "iso") || (inj && !sur && kind == "inj") || (!inj && sur && kind == "surj") ||
        (!inj && !sur && kind == "hom"))
      ++same_kind;
  }
  return "[" + f.source->label() + "->" + g_->label() + ":" + kind + std::to_string(same_kind) + ",e" +
         std::to_string(b.component) + "]";
}

ExtensionTerm ExtensionSpace::free_term(std::size_t i) const {
  const auto& b = basis_.at(module_.free_columns().at(i));
  const auto& k = universe_->member(b.member);
  return {hom_classes(k, g_)[b.hom_class], unit_vector(p_->dim(k), b.component)};
}

void ExtensionSpace::add_member_term(std::size_t member, const Hom& f, const QVector& kappa, QVector& out) const {
  std::size_t c = class_index(member, f);
  for (std::size_t j = 0; j < kappa.size(); ++j)
    if (kappa[j] != 0) out[index(member, c, j)] += kappa[j];
}

const ExtensionSpace::PushDown& ExtensionSpace::push_down(const Hom& f) const {
  auto key = std::make_pair(f.source->serial(), f.map);
  {
    std::lock_guard lock(mu_);
    auto it = push_downs_.find(key);
    if (it != push_downs_.end()) return it->second;
  }
  const auto& k = f.source;
  auto ker = kernel(f);
  PushDown pd;
  std::vector<QMatrix> blocks;
  for (const auto& n : normal_subgroups(k)) {
    if (!contained(n, ker)) continue;
    auto q = quotient(k, n);
    auto id = universe_->identify(q.group);
    if (!id) continue;
    Hom pi = compose(id->iso, q.projection);
    Hom bar{pi.target, g_, std::vector<Elt>(pi.target->order(), 0)};
    for (Elt x = 0; x < k->order(); ++x) bar.map[pi(x)] = f(x);
    blocks.push_back(p_->apply(pi));
    pd.widths.push_back(blocks.back().cols());
    pd.targets.emplace_back(id->index, std::move(bar));
  }
  if (pd.targets.empty())
    throw Error(ErrorKind::UniverseOverflow, "extension: no quotient of " + k->label() + " is a universe member");
  std::size_t width = std::accumulate(pd.widths.begin(), pd.widths.end(), std::size_t{0});
  QMatrix a(p_->dim(k), width);
  std::size_t col = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) a(r, col + c) = b(r, c);
    col += b.cols();
  }
  pd.solver = std::make_shared<LinearSolver>(a);
  std::lock_guard lock(mu_);
  return push_downs_.emplace(key, std::move(pd)).first->second;
}

void ExtensionSpace::add_term(const Hom& f, const QVector& kappa, QVector& out) const {
  if (f.target != g_) throw Error(ErrorKind::GroupMismatch, "extension: term lands in another group");
  if (auto id = universe_->identify(f.source)) {
    const auto& m = universe_->member(id->index);
    if (m == f.source) {
      add_member_term(id->index, f, kappa, out);
      return;
    }
    Hom back = inverse(id->iso);
    add_member_term(id->index, compose(f, back), p_->apply(back) * kappa, out);
    return;
  }
  const auto& pd = push_down(f);
  auto mu = pd.solver->solve(kappa);
  if (!mu)
    throw Error(ErrorKind::UniverseOverflow,
                "extension: term on " + f.source->label() + " does not factor through universe quotients");
  std::size_t at = 0;
  for (std::size_t t = 0; t < pd.targets.size(); ++t) {
    QVector part(mu->begin() + static_cast<std::ptrdiff_t>(at),
                 mu->begin() + static_cast<std::ptrdiff_t>(at + pd.widths[t]));
    at += pd.widths[t];
    add_member_term(pd.targets[t].first, pd.targets[t].second, part, out);
  }
}

QVector ExtensionSpace::embed(const std::vector<ExtensionTerm>& terms) const {
  QVector out(basis_.size());
  for (const auto& t : terms) add_term(t.map, t.kappa, out);
  return out;
}

QVector ExtensionSpace::coords(const std::vector<ExtensionTerm>& terms) const { return module_.coords(embed(terms)); }

QVector ExtensionSpace::delta(const QVector& kappa) const { return coords({{Hom::identity(g_), kappa}}); }

QMatrix ExtensionSpace::delta_matrix() const {
  std::size_t d = p_->dim(g_);
  QMatrix m(rank(), d);
  for (std::size_t j = 0; j < d; ++j) m.set_col(j, delta(unit_vector(d, j)));
  return m;
}

bool ExtensionSpace::closed() const {
  for (const auto& w : p_->witnesses(g_))
    if (!universe_->identify(w)) return false;
  return true;
}

ExtensionFunctor::ExtensionFunctor(RestrictionFunctorRef p, UniverseRef universe)
    : p_(std::move(p)), universe_(std::move(universe)) {}

const ExtensionSpace& ExtensionFunctor::space(const GroupRef& g) const {
  std::lock_guard lock(mu_);
  auto& slot = spaces_[g->serial()];
  if (!slot) slot = std::make_unique<ExtensionSpace>(p_, universe_, g);
  return *slot;
}

std::vector<ExtensionTerm> ExtensionFunctor::act_on_term(const Biset& u, const ExtensionTerm& t,
                                                         const std::vector<Point>* reps) const {
  std::vector<Point> own;
  if (!reps) {
    own = double_coset_reps(u, t.map);
    reps = &own;
  }
  std::vector<ExtensionTerm> out;
  for (Point x : *reps) {
    Span s = stabilizing_span(u, t.map, x);
    out.push_back({s.q, p_->apply(s.p) * t.kappa});
  }
  return out;
}

QMatrix ExtensionFunctor::apply(const Biset& u) const {
  const auto& src = space(u.right());
  const auto& dst = space(u.left());
  QMatrix m(dst.rank(), src.rank());
  for (std::size_t i = 0; i < src.rank(); ++i) m.set_col(i, dst.coords(act_on_term(u, src.free_term(i))));
  return m;
}

QVector ExtensionFunctor::act(const Biset& u, const QVector& coords) const { return apply(u) * coords; }

}  // namespace bisetkit
