#include <algorithm>
#include <numeric>
#include <random>

#include "bisetkit/biset.hpp"
#include "bisetkit/error.hpp"
#include "bisetkit/group_algorithms.hpp"
#include "bisetkit/library.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bisetkit;

namespace {

Hom inclusion_of_order(const GroupRef& g, std::size_t order) {
  for (const auto& s : subgroups(g))
    if (s.order() == order) return subgroup_as_group(s).inclusion;
  throw std::runtime_error("no subgroup");
}

bool iso(const Biset& a, const Biset& b) { return biset_iso(a, b).has_value(); }

}  // namespace

TEST_CASE("orbits and stabilizers") {
  auto c3 = builtin_group("C3");
  GSet regular = coset_gset(trivial_subgroup(c3));
  auto orb = orbits(regular);
  CHECK(orb.size() == 1);
  CHECK(stabilizer(regular, 0).order() == 1);

  auto s3 = builtin_group("S3");
  GSet triv = trivial_gset(s3, 3);
  CHECK(orbits(triv).size() == 3);
  CHECK(stabilizer(triv, 2).order() == 6);
  CHECK_THROWS_AS(stabilizer(triv, 3), Error);

  // S3 acting by conjugation on its three subgroups of order 2.
  std::vector<Subgroup> invols;
  for (const auto& s : subgroups(s3))
    if (s.order() == 2) invols.push_back(s);
  REQUIRE(invols.size() == 3);
  std::vector<Point> act;
  for (Elt g = 0; g < 6; ++g)
    for (const auto& s : invols) {
      auto c = conjugate_subgroup(s, g);
      act.push_back(static_cast<Point>(std::find(invols.begin(), invols.end(), c) - invols.begin()));
    }
  GSet conj = GSet::make(s3, 3, act);
  CHECK(orbits(conj).size() == 1);
  for (Point p = 0; p < 3; ++p) CHECK(stabilizer(conj, p).order() == 2);
}

TEST_CASE("validation rejects bad tables") {
  auto c2 = builtin_group("C2");
  CHECK_THROWS_AS(GSet::make(c2, 2, {0, 1, 1, 1}), Error);
  CHECK_THROWS_AS(GSet::make(c2, 2, {0, 1, 1, 2}), Error);
  auto c3 = builtin_group("C3");
  // left action by C2 swapping, right action by C3 rotating on 2 points cannot
  // be a C3 action unless trivial
  CHECK_THROWS_AS(Biset::make(c2, c3, 2, {0, 1, 1, 0}, {0, 1, 1, 0, 0, 1}), Error);
}

TEST_CASE("composition with identities") {
  for (const auto& name : {"C2", "S3", "V4", "C6"}) {
    auto g = builtin_group(name);
    auto id = identity_biset(g);
    for (const auto& s : subgroups(product_of(g, g).group)) {
      Biset u = transitive_biset(g, g, s);
      CHECK(iso(compose(id, u), u));
      CHECK(iso(compose(u, id), u));
    }
  }
}

TEST_CASE("t and r compose like the underlying homs") {
  auto s3 = builtin_group("S3");
  auto c2 = builtin_group("C2");
  Hom iota = inclusion_of_order(s3, 2);
  Biset t = elementary_t(iota);
  CHECK(t.size() == 6);
  CHECK(t.left() == s3);
  // free left action
  for (Point u = 0; u < 6; ++u)
    for (Elt h = 0; h < 6; ++h)
      if (h != s3->identity()) CHECK(t.lmul(h, u) != u);

  CHECK(iso(elementary_t(Hom::identity(s3)), identity_biset(s3)));
  CHECK(iso(compose(elementary_r(Hom::identity(c2)), elementary_t(Hom::identity(c2))), identity_biset(c2)));

  auto s4 = builtin_group("S4");
  for (const auto& f : all_homs(c2, s3))
    for (const auto& g : all_homs(s3, s4)) {
      CHECK(iso(compose(elementary_t(g), elementary_t(f)), elementary_t(compose(g, f))));
      CHECK(iso(compose(elementary_r(f), elementary_r(g)), elementary_r(compose(g, f))));
    }
}

TEST_CASE("free compositions have the counted size") {
  auto s3 = builtin_group("S3");
  auto c3 = builtin_group("C3");
  auto one = builtin_group("C1");
  const auto& ps = product_of(s3, c3);
  const auto& pc = product_of(c3, one);
  Biset v = transitive_biset(s3, c3, trivial_subgroup(ps.group));  // free both sides
  Biset u = transitive_biset(c3, one, trivial_subgroup(pc.group));
  CHECK(compose(v, u).size() == v.size() * u.size() / 3);
  CHECK_THROWS_AS(compose(u, v), Error);
}

TEST_CASE("transitive decomposition") {
  auto s3 = builtin_group("S3");
  auto id = identity_biset(s3);
  auto pieces = transitive_decomposition(id);
  REQUIRE(pieces.size() == 1);
  const auto& p = product_of(s3, s3);
  // stabilizer of the identity point is the diagonal
  CHECK(pieces[0].stabilizer.order() == 6);
  for (Elt g = 0; g < 6; ++g) CHECK(pieces[0].stabilizer.contains(p.pair(g, g)));

  Hom iota = inclusion_of_order(s3, 3);
  auto tp = transitive_decomposition(elementary_t(iota));
  REQUIRE(tp.size() == 1);
  CHECK(tp[0].stabilizer.order() == 3);

  auto both = disjoint_union(id, elementary_t(Hom::identity(s3)));
  CHECK(transitive_decomposition(both).size() == 2);

  // reassembly
  for (const auto& name : {"C4", "S3"}) {
    auto g = builtin_group(name);
    auto u = disjoint_union(elementary_t(Hom::identity(g)), compose(elementary_r(Hom::trivial(g, g)), identity_biset(g)));
    auto dec = transitive_decomposition(u);
    Biset acc = transitive_biset(g, g, dec[0].stabilizer);
    for (std::size_t i = 1; i < dec.size(); ++i) acc = disjoint_union(acc, transitive_biset(g, g, dec[i].stabilizer));
    CHECK(iso(acc, u));
  }
}

TEST_CASE("biset isomorphism is an equivalence") {
  std::mt19937_64 rng(7);
  auto g = builtin_group("S3");
  auto h = builtin_group("C2");
  const auto& p = product_of(h, g);
  for (const auto& s : subgroups(p.group)) {
    Biset u = transitive_biset(h, g, s);
    auto self = biset_iso(u, u);
    REQUIRE(self);
    std::vector<Point> perm(u.size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    Biset w = relabel(u, perm);
    auto fwd = biset_iso(u, w);
    REQUIRE(fwd);
    CHECK(is_equivariant_bijection(u, w, *fwd));
    auto back = biset_iso(w, u);
    REQUIRE(back);
    std::vector<Point> inv(u.size());
    for (Point x = 0; x < u.size(); ++x) inv[(*fwd)[x]] = x;
    CHECK(is_equivariant_bijection(w, u, inv));
    std::shuffle(perm.begin(), perm.end(), rng);
    Biset z = relabel(w, perm);
    auto wz = biset_iso(w, z);
    REQUIRE(wz);
    std::vector<Point> comp(u.size());
    for (Point x = 0; x < u.size(); ++x) comp[x] = (*wz)[(*fwd)[x]];
    CHECK(is_equivariant_bijection(u, z, comp));
  }
  // conjugate stabilizers give isomorphic bisets; non-conjugate do not
  const auto& classes = subgroup_classes(p.group);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      bool same = iso(transitive_biset(h, g, classes.rep(i)), transitive_biset(h, g, classes.rep(j)));
      CHECK(same == (i == j));
    }
}

TEST_CASE("t(f) and t(conjugate f) are isomorphic") {
  auto s3 = builtin_group("S3");
  auto d4 = builtin_group("D4");
  for (const auto& [k, g] : {std::pair{builtin_group("C2"), s3}, {builtin_group("V4"), d4}, {s3, s3}})
    for (const auto& f : all_homs(k, g))
      for (Elt x = 0; x < g->order(); ++x) {
        CHECK(iso(elementary_t(f), elementary_t(conjugate(x, f))));
        CHECK(iso(elementary_r(f), elementary_r(conjugate(x, f))));
      }
}

TEST_CASE("unions and products of G-sets") {
  auto s3 = builtin_group("S3");
  GSet x = coset_gset(trivial_subgroup(s3));
  GSet empty = trivial_gset(s3, 0);
  CHECK(gset_union(x, empty).size() == x.size());
  GSet xx = gset_product(x, x);
  CHECK(orbits(xx).size() == 6);
  CHECK(oracle::orbit_count(xx) == 6);
  GSet pt = trivial_gset(s3, 1);
  CHECK(orbits(gset_product(x, pt)).size() == 1);
  for (const auto& a : subgroups(s3))
    for (const auto& b : subgroups(s3)) {
      GSet prod = gset_product(coset_gset(a), coset_gset(b));
      CHECK(orbits(prod).size() == oracle::orbit_count(prod));
    }
  auto id = identity_biset(s3);
  auto u = disjoint_union(id, transitive_biset(s3, s3, trivial_subgroup(product_of(s3, s3).group)));
  CHECK(u.size() == 6 + 36);
}

TEST_CASE("composition is associative on small transitive bisets") {
  auto c2 = builtin_group("C2");
  auto s3 = builtin_group("S3");
  auto c3 = builtin_group("C3");
  const auto& a = subgroups(product_of(c2, s3).group);
  const auto& b = subgroups(product_of(s3, c3).group);
  const auto& c = subgroups(product_of(c3, c2).group);
  for (const auto& x : a)
    for (const auto& y : b)
      for (const auto& z : c) {
        Biset w = transitive_biset(c2, s3, x), v = transitive_biset(s3, c3, y), u = transitive_biset(c3, c2, z);
        CHECK(iso(compose(compose(w, v), u), compose(w, compose(v, u))));
      }
}
