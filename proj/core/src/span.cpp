#include "bisetkit/span.hpp"

#include <algorithm>
#include <numeric>

#include "bisetkit/error.hpp"
#include "bisetkit/group_algorithms.hpp"

namespace bisetkit {

std::vector<Point> double_coset_reps(const Biset& u, const Hom& f) {
  if (f.target != u.right()) throw Error(ErrorKind::GroupMismatch, "double_coset_reps: f must land in the right group");
  const auto& h = u.left();
  const auto& k = f.source;
  std::vector<char> seen(u.size(), 0);
  std::vector<Point> reps;
  std::vector<Point> stack;
  for (Point start = 0; start < u.size(); ++start) {
    if (seen[start]) continue;
    reps.push_back(start);
    seen[start] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      Point p = stack.back();
      stack.pop_back();
      auto visit = [&](Point q) {
        if (!seen[q]) {
          seen[q] = 1;
          stack.push_back(q);
        }
      };
      for (Elt a : h->generators()) visit(u.lmul(a, p));
      for (Elt b : k->generators()) visit(u.rmul(p, f(b)));
    }
  }
  return reps;
}

Span stabilizing_span(const Biset& u, const Hom& f, Point x) {
  if (f.target != u.right()) throw Error(ErrorKind::GroupMismatch, "stabilizing_span: f must land in the right group");
  if (x >= u.size()) throw Error(ErrorKind::PointOutOfRange, "stabilizing_span: point out of range");
  const auto& prod = product_of(u.left(), f.source);
  std::vector<Elt> elems;
  for (Elt a = 0; a < u.left()->order(); ++a)
    for (Elt b = 0; b < f.source->order(); ++b)
      if (u.lmul(a, x) == u.rmul(x, f(b))) elems.push_back(prod.pair(a, b));
  std::sort(elems.begin(), elems.end());
  const auto& sg = subgroup_as_group(Subgroup{prod.group, std::move(elems)});
  Span s{{sg.group, u.left(), {}}, sg.group, {sg.group, f.source, {}}};
  for (Elt g = 0; g < sg.group->order(); ++g) {
    Elt e = sg.inclusion(g);
    s.q.map.push_back(prod.first_of(e));
    s.p.map.push_back(prod.second_of(e));
  }
  return s;
}

bool is_contraction(const Span& from, const Span& to, const Contraction& c) {
  if (c.pi.source != from.grp || c.pi.target != to.grp) return false;
  if (!c.pi.is_homomorphism() || !c.pi.is_surjective()) return false;
  if (from.p.target != to.p.target || from.q.target != to.q.target) return false;
  for (Elt g = 0; g < from.grp->order(); ++g) {
    if (from.p.target->conj(c.k, from.p(g)) != to.p(c.pi(g))) return false;
    if (from.q.target->conj(c.h, from.q(g)) != to.q(c.pi(g))) return false;
  }
  return true;
}

Contraction representative_contraction(const Biset& u, const Hom& f, Point x, Elt h0, Elt k0) {
  const auto& h = u.left();
  const auto& k = f.source;
  Point y = u.rmul(u.lmul(h0, x), f(k0));
  Span a = stabilizing_span(u, f, x);
  Span b = stabilizing_span(u, f, y);
  const auto& prod = product_of(h, k);
  // Index the target span's elements by their (h, k) pair.
  std::vector<Elt> index(prod.group->order(), 0);
  for (Elt g = 0; g < b.grp->order(); ++g) index[prod.pair(b.q(g), b.p(g))] = g;
  Elt k0i = k->inv(k0);
  Contraction c{h0, {a.grp, b.grp, {}}, k0i};
  for (Elt g = 0; g < a.grp->order(); ++g)
    c.pi.map.push_back(index[prod.pair(h->conj(h0, a.q(g)), k->conj(k0i, a.p(g)))]);
  if (!is_contraction(a, b, c)) throw Error(ErrorKind::ContractionFailure, "representative_contraction failed");
  return c;
}

ComposedSpans compose_spans(const Biset& v, const Biset& u, const Hom& f, Point y, Point x) {
  if (v.right() != u.left()) throw Error(ErrorKind::GroupMismatch, "compose_spans: bisets not composable");
  Span inner = stabilizing_span(u, f, x);
  Span nested_outer = stabilizing_span(v, inner.q, y);
  ComposedSpans out;
  out.nested = {nested_outer.q, nested_outer.grp, compose(inner.p, nested_outer.p)};

  auto comp = compose_with_classes(v, u);
  Point w = comp.class_of[static_cast<std::size_t>(y) * u.size() + x];
  out.direct = stabilizing_span(comp.biset, f, w);

  const auto& prod = product_of(v.left(), f.source);
  std::vector<Elt> index(prod.group->order(), 0);
  std::vector<char> present(prod.group->order(), 0);
  for (Elt g = 0; g < out.direct.grp->order(); ++g) {
    auto key = prod.pair(out.direct.q(g), out.direct.p(g));
    index[key] = g;
    present[key] = 1;
  }
  out.contraction = {v.left()->identity(), {out.nested.grp, out.direct.grp, {}}, f.source->identity()};
  for (Elt g = 0; g < out.nested.grp->order(); ++g) {
    auto key = prod.pair(out.nested.q(g), out.nested.p(g));
    if (!present[key]) throw Error(ErrorKind::ContractionFailure, "compose_spans: projection leaves Gamma_w");
    out.contraction.pi.map.push_back(index[key]);
  }
  if (!is_contraction(out.nested, out.direct, out.contraction))
    throw Error(ErrorKind::ContractionFailure, "compose_spans: projection is not a contraction");
  return out;
}

std::vector<Point> decomposition_check(const Biset& u, const Hom& f) {
  Biset lhs = compose(u, elementary_t(f));
  Biset rhs;
  bool first = true;
  for (Point x : double_coset_reps(u, f)) {
    Span s = stabilizing_span(u, f, x);
    Biset piece = compose(elementary_t(s.q), elementary_r(s.p));
    rhs = first ? piece : disjoint_union(rhs, piece);
    first = false;
  }
  if (first) rhs = Biset::trusted(u.left(), f.source, 0, {}, {});
  auto iso = biset_iso(lhs, rhs);
  if (!iso) throw Error(ErrorKind::IsoNotFound, "decomposition_check: no biset isomorphism");
  return *iso;
}

}  // namespace bisetkit
