#include <random>

#include "bisetkit/error.hpp"
#include "bisetkit/extension.hpp"
#include "bisetkit/group_algorithms.hpp"
#include "bisetkit/library.hpp"
#include "bisetkit/span.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bisetkit;

namespace {

RestrictionFunctorRef constant() { return std::make_shared<ConstantFunctor>(); }
RestrictionFunctorRef signs() { return std::make_shared<SignFunctor>(); }

UniverseRef upto(const char* name) { return builtin_universe(name); }

QVector unit(std::size_t n, std::size_t j) {
  QVector v(n);
  v[j] = 1;
  return v;
}

std::vector<GroupRef> members_up_to(const GroupUniverse& u, std::size_t order) {
  std::vector<GroupRef> out;
  for (const auto& m : u.members())
    if (m->order() <= order) out.push_back(m);
  return out;
}

// The C2-valued rank-2 functor on {1, C2}: P(1) = Q, P(C2) = Q^2.
TableFunctor two_point_functor(bool broken) {
  auto u = universe_of({"C1", "C2"});
  std::size_t one = *u->index_of(builtin_group("C1")), two = *u->index_of(builtin_group("C2"));
  std::vector<std::size_t> dims(2);
  dims[one] = 1;
  dims[two] = 2;
  std::vector<TableFunctor::Entry> e;
  e.push_back({one, one, {0}, QMatrix::identity(1)});
  e.push_back({one, two, {0}, QMatrix::from_rows({{1, 0}})});
  e.push_back({two, one, {0, 0}, QMatrix::from_rows({{1}, {1}})});
  e.push_back({two, two, {0, 0}, QMatrix::from_rows({{1, 0}, {1, 0}})});
  e.push_back({two, two, {0, 1}, broken ? QMatrix::from_rows({{0, 1}, {1, 0}}) : QMatrix::identity(2)});
  return TableFunctor(u, dims, e, "two_point");
}

}  // namespace

TEST_CASE("restriction functors") {
  SUBCASE("constant") {
    ConstantFunctor p;
    auto s3 = builtin_group("S3");
    for (const auto& f : all_homs(s3, s3)) CHECK(p.apply(f) == QMatrix::identity(1));
  }
  SUBCASE("signs: contravariance and inner triviality") {
    SignFunctor p;
    CHECK(p.dim(builtin_group("C2")) == 2);
    CHECK(p.dim(builtin_group("V4")) == 4);
    CHECK(p.dim(builtin_group("C3")) == 1);
    CHECK(p.dim(builtin_group("S3")) == 2);
    CHECK(p.dim(builtin_group("Q8")) == 4);
    std::vector<GroupRef> gs;
    for (const char* n : {"C1", "C2", "C4", "V4", "S3"}) gs.push_back(builtin_group(n));
    for (const auto& a : gs)
      for (const auto& b : gs)
        for (const auto& f : all_homs(a, b)) {
          for (Elt h = 0; h < b->order(); ++h) CHECK(p.apply(conjugate(h, f)) == p.apply(f));
          for (const auto& c : gs)
            for (const auto& g : hom_classes(b, c)) CHECK(p.apply(compose(g, f)) == p.apply(f) * p.apply(g));
        }
  }
  SUBCASE("tables") {
    CHECK_NOTHROW(two_point_functor(false));
    CHECK_THROWS_AS(two_point_functor(true), Error);
    try {
      two_point_functor(true);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::FunctorLawViolation);
    }
    auto u = upto("upto6");
    auto entries = tabulate(ConstantFunctor(), *u);
    TableFunctor t(u, std::vector<std::size_t>(u->size(), 1), entries, "constant");
    CHECK(t.dim(builtin_group("S3")) == 1);
    auto bad = entries;
    bad.front().matrix = QMatrix::from_rows({{1, 1}});
    CHECK_THROWS_AS(TableFunctor(u, std::vector<std::size_t>(u->size(), 1), bad), Error);
  }
}

TEST_CASE("extension spaces: constant functor") {
  SUBCASE("C2 on {1, C2}") {
    ExtensionSpace s(constant(), universe_of({"C1", "C2"}), builtin_group("C2"));
    CHECK(s.n_terms() == 3);
    CHECK(s.rank() == 2);
    CHECK(s.closed());
    auto d = s.delta(unit(1, 0));
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(s.free_label(1) == "[C2->C2:iso0,e0]");
    CHECK(s.free_label(0) == "[C1->C2:inj0,e0]");
  }
  SUBCASE("ranks match subgroup classes") {
    auto u = upto("upto6");
    for (const auto& g : u->members()) {
      ExtensionSpace s(constant(), u, g);
      CHECK_MESSAGE(s.rank() == oracle::subgroup_class_count(g), g->label());
      CHECK(s.closed());
      CHECK(s.status() == "closed universe");
    }
  }
  SUBCASE("trivial group") {
    ExtensionSpace s(constant(), upto("upto8"), builtin_group("C1"));
    CHECK(s.rank() == 1);
  }
  SUBCASE("truncation is labelled") {
    ExtensionSpace s(constant(), universe_of({"C1", "C2"}), builtin_group("C4"));
    CHECK_FALSE(s.closed());
    CHECK(s.status() == "truncated");
  }
  SUBCASE("integer mode") {
    auto u = upto("upto6");
    for (const auto& g : u->members()) {
      ExtensionSpace s(constant(), u, g, ScalarMode::Integer);
      CHECK(s.rank() == oracle::subgroup_class_count(g));
      CHECK(s.torsion().empty());
    }
  }
}

TEST_CASE("extension spaces: signs") {
  auto u = upto("upto12");
  auto c2 = builtin_group("C2");
  for (const auto& g : members_up_to(*u, 6)) {
    ExtensionSpace s(signs(), u, g);
    CHECK_MESSAGE(s.rank() == oracle::subgroup_class_count(product_of(g, c2).group), g->label());
    CHECK(s.closed());
  }
  ExtensionSpace small(signs(), upto("upto6"), builtin_group("S3"));
  CHECK_FALSE(small.closed());
}

TEST_CASE("reduction") {
  auto u = upto("upto6");
  auto s3 = builtin_group("S3");
  auto p = signs();
  ExtensionSpace s(p, upto("upto12"), s3);
  for (const auto& k : members_up_to(*u, 6))
    for (const auto& f : all_homs(k, s3))
      for (std::size_t j = 0; j < p->dim(k); ++j) {
        auto kappa = unit(p->dim(k), j);
        auto base = s.coords({{f, kappa}});
        for (Elt h = 0; h < 6; ++h) CHECK(s.coords({{conjugate(h, f), kappa}}) == base);
        for (const auto& n : normal_subgroups(k)) {
          if (n.order() == 1) continue;
          bool in_kernel = true;
          for (Elt x : n.elems) in_kernel = in_kernel && f(x) == 0;
          if (!in_kernel) continue;
          auto q = quotient(k, n);
          Hom bar{q.group, s3, std::vector<Elt>(q.group->order())};
          for (Elt x = 0; x < k->order(); ++x) bar.map[q.projection(x)] = f(x);
          for (std::size_t i = 0; i < p->dim(q.group); ++i) {
            auto mu = unit(p->dim(q.group), i);
            CHECK(s.coords({{bar, mu}}) == s.coords({{f, p->apply(q.projection) * mu}}));
          }
        }
      }
}

TEST_CASE("elementary actions") {
  auto u = upto("upto6");
  auto objects = members_up_to(*u, 6);
  for (auto p : {constant(), signs()}) {
    ExtensionFunctor e(p, p->name() == "signs" ? upto("upto12") : u);
    for (const auto& g : objects) {
      CHECK(e.apply(identity_biset(g)) == QMatrix::identity(e.dim(g)));
      for (const auto& h : objects)
        for (const auto& f : hom_classes(g, h)) {
          // t(f)[id_G, k] = [f, k]
          const auto& sg = e.space(g);
          const auto& sh = e.space(h);
          auto tf = e.apply(elementary_t(f));
          for (std::size_t j = 0; j < p->dim(g); ++j) {
            auto kappa = unit(p->dim(g), j);
            CHECK(tf * sg.delta(kappa) == sh.coords({{f, kappa}}));
          }
          // r(f)[id_H, eta] = [id_G, P(f) eta]
          auto rf = e.apply(elementary_r(f));
          for (std::size_t j = 0; j < p->dim(h); ++j) {
            auto eta = unit(p->dim(h), j);
            CHECK(rf * sh.delta(eta) == sg.delta(p->apply(f) * eta));
          }
        }
    }
  }
}

TEST_CASE("functoriality on random pairs") {
  auto u = upto("upto6");
  auto objects = members_up_to(*u, 6);
  std::mt19937_64 rng(3);
  for (auto p : {constant(), signs()}) {
    ExtensionFunctor e(p, p->name() == "signs" ? upto("upto12") : u);
    for (int round = 0; round < 15; ++round) {
      auto l = objects[rng() % objects.size()], h = objects[rng() % objects.size()],
           g = objects[rng() % objects.size()];
      const auto& s1 = subgroups(product_of(l, h).group);
      const auto& s2 = subgroups(product_of(h, g).group);
      Biset v = transitive_biset(l, h, s1[rng() % s1.size()]);
      Biset w = transitive_biset(h, g, s2[rng() % s2.size()]);
      CHECK(e.apply(compose(v, w)) == e.apply(v) * e.apply(w));
    }
  }
}

TEST_CASE("representative independence and contractions") {
  auto u = upto("upto6");
  auto objects = members_up_to(*u, 6);
  std::mt19937_64 rng(9);
  ExtensionFunctor e(signs(), upto("upto12"));
  auto p = e.functor();
  for (int round = 0; round < 20; ++round) {
    auto h = objects[rng() % objects.size()], g = objects[rng() % objects.size()];
    const auto& subs = subgroups(product_of(h, g).group);
    Biset b = transitive_biset(h, g, subs[rng() % subs.size()]);
    const auto& sg = e.space(g);
    const auto& sh = e.space(h);
    for (std::size_t i = 0; i < sg.rank(); ++i) {
      auto t = sg.free_term(i);
      auto reps = double_coset_reps(b, t.map);
      auto base = sh.coords(e.act_on_term(b, t, &reps));
      auto moved = reps;
      for (auto& x : moved) {
        Elt a = static_cast<Elt>(rng() % h->order());
        Elt c = static_cast<Elt>(rng() % t.map.source->order());
        Span before = stabilizing_span(b, t.map, x);
        Point y = b.rmul(b.lmul(a, x), t.map(c));
        Span after = stabilizing_span(b, t.map, y);
        CHECK(is_contraction(before, after, representative_contraction(b, t.map, x, a, c)));
        CHECK(sh.coords({{before.q, p->apply(before.p) * t.kappa}}) ==
              sh.coords({{after.q, p->apply(after.p) * t.kappa}}));
        x = y;
      }
      CHECK(sh.coords(e.act_on_term(b, t, &moved)) == base);
    }
  }
}

TEST_CASE("unit naturality") {
  auto u = upto("upto6");
  ExtensionFunctor e(signs(), upto("upto12"));
  auto p = e.functor();
  for (const auto& g : members_up_to(*u, 6))
    for (const auto& h : members_up_to(*u, 6))
      for (const auto& f : hom_classes(g, h))
        CHECK(e.apply(elementary_r(f)) * e.space(h).delta_matrix() == e.space(g).delta_matrix() * p->apply(f));
}

TEST_CASE("table functor extension") {
  auto p = std::make_shared<TableFunctor>(two_point_functor(false));
  ExtensionFunctor e(p, p->universe());
  auto c2 = builtin_group("C2");
  auto c1 = builtin_group("C1");
  CHECK(e.dim(c1) >= 1);
  CHECK(e.apply(identity_biset(c2)) == QMatrix::identity(e.dim(c2)));
  std::vector<Biset> elementary;
  for (const auto& a : {c1, c2})
    for (const auto& b : {c1, c2})
      for (const auto& f : hom_classes(a, b)) {
        elementary.push_back(elementary_t(f));
        elementary.push_back(elementary_r(f));
      }
  std::size_t checked = 0;
  for (const auto& v : elementary)
    for (const auto& w : elementary) {
      if (v.right() != w.left()) continue;
      try {
        auto lhs = e.apply(compose(v, w));
        auto rhs = e.apply(v) * e.apply(w);
        CHECK(lhs == rhs);
        ++checked;
      } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::UniverseOverflow);
      }
    }
  CHECK(checked > 10);
  auto c4 = builtin_group("C4");
  CHECK_FALSE(e.space(c4).closed());
  CHECK_THROWS_AS(e.space(c4).delta_matrix(), Error);
}
