#pragma once

#include <vector>

#include "bisetkit/biset.hpp"
#include "bisetkit/group.hpp"

namespace bisetkit {

// H <-q- grp -p-> K
struct Span {
  Hom q;
  GroupRef grp;
  Hom p;
};

// (h, pi, k) with pi surjective, sigma_k o p = p' o pi and sigma_h o q = q' o pi.
struct Contraction {
  Elt h;
  Hom pi;
  Elt k;
};

// Orbit representatives of H x K on U under (h, k) . u = h u f(k), one per
// orbit, least point first, in increasing order.
std::vector<Point> double_coset_reps(const Biset& u, const Hom& f);

// Gamma_u = {(h, k) : h u = u f(k)} <= H x K with its two projections.
Span stabilizing_span(const Biset& u, const Hom& f, Point x);

bool is_contraction(const Span& from, const Span& to, const Contraction& c);

// The contraction between the spans at x and at h0 x f(k0).
Contraction representative_contraction(const Biset& u, const Hom& f, Point x, Elt h0, Elt k0);

// For w = [v, x] in V x_H U: the projection Gamma_v(Gamma_x(K)) -> Gamma_w(K)
// as a contraction between the composed span and the span at w.  Throws
// ContractionFailure if the projection is not one.
struct ComposedSpans {
  Span nested;  // L <- Gamma_v(Gamma_x) -> K
  Span direct;  // L <- Gamma_w -> K
  Contraction contraction;
};
ComposedSpans compose_spans(const Biset& v, const Biset& u, const Hom& f, Point y, Point x);

// U x_G t(f) ~= disjoint union over representatives of t(q_x) x r(p_x).
// Throws IsoNotFound when no isomorphism exists.
std::vector<Point> decomposition_check(const Biset& u, const Hom& f);

}  // namespace bisetkit
