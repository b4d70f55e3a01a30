#include <random>

#include "bisetkit/error.hpp"
#include "bisetkit/group_algorithms.hpp"
#include "bisetkit/library.hpp"
#include "bisetkit/span.hpp"
#include "doctest.h"

using namespace bisetkit;

namespace {

Hom inclusion_c2_s3() {
  auto s3 = builtin_group("S3");
  for (const auto& s : subgroups(s3))
    if (s.order() == 2) {
      const auto& sg = subgroup_as_group(s);
      return sg.inclusion;
    }
  throw std::logic_error("no C2 in S3");
}

const std::vector<GroupRef>& small_groups() {
  static const std::vector<GroupRef> gs = [] {
    std::vector<GroupRef> out;
    for (const char* n : {"C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3"}) out.push_back(builtin_group(n));
    return out;
  }();
  return gs;
}

Biset random_transitive(std::mt19937_64& rng, const GroupRef& h, const GroupRef& g) {
  const auto& subs = subgroups(product_of(h, g).group);
  return transitive_biset(h, g, subs[rng() % subs.size()]);
}

Hom random_hom(std::mt19937_64& rng, const GroupRef& k, const GroupRef& g) {
  auto homs = all_homs(k, g);
  return homs[rng() % homs.size()];
}

}  // namespace

TEST_CASE("double coset representatives") {
  auto s3 = builtin_group("S3");
  CHECK(double_coset_reps(identity_biset(s3), Hom::identity(s3)).size() == 1);
  Hom iota = inclusion_c2_s3();
  auto c2 = iota.source;
  CHECK(double_coset_reps(elementary_t(iota), Hom::identity(c2)).size() == 1);
  Biset r = elementary_r(iota);
  CHECK(double_coset_reps(r, Hom::identity(s3)).size() == 1);
  CHECK(double_coset_reps(r, iota) == std::vector<Point>{0, 1});
}

TEST_CASE("stabilizing spans") {
  auto s3 = builtin_group("S3");
  Hom iota = inclusion_c2_s3();
  auto c2 = iota.source;

  SUBCASE("graph of f") {
    for (const auto& f : all_homs(c2, s3)) {
      Span s = stabilizing_span(elementary_t(f), Hom::identity(c2), 0);
      CHECK(s.grp->order() == 2);
      CHECK(s.q.map == compose(f, s.p).map);
    }
  }
  SUBCASE("diagonal") {
    Span s = stabilizing_span(identity_biset(s3), Hom::identity(s3), 0);
    CHECK(s.grp->order() == 6);
    CHECK(s.p.is_injective());
    CHECK(s.q.is_injective());
  }
  SUBCASE("restriction along an inclusion") {
    Span s = stabilizing_span(elementary_r(iota), Hom::identity(s3), 0);
    CHECK(s.grp->order() == 2);
    CHECK(image(s.p).elems == image(iota).elems);
  }
  CHECK_THROWS_AS(stabilizing_span(identity_biset(s3), Hom::identity(s3), 99), Error);
}

TEST_CASE("representative contractions") {
  std::mt19937_64 rng(11);
  const auto& gs = small_groups();
  for (int round = 0; round < 60; ++round) {
    auto h = gs[rng() % gs.size()], g = gs[rng() % gs.size()], k = gs[rng() % gs.size()];
    Biset u = random_transitive(rng, h, g);
    Hom f = random_hom(rng, k, g);
    for (Point x : double_coset_reps(u, f)) {
      Elt h0 = static_cast<Elt>(rng() % h->order()), k0 = static_cast<Elt>(rng() % k->order());
      CHECK_NOTHROW(representative_contraction(u, f, x, h0, k0));
    }
  }
}

TEST_CASE("span composition") {
  auto s3 = builtin_group("S3");
  SUBCASE("identities") {
    auto c = compose_spans(identity_biset(s3), identity_biset(s3), Hom::identity(s3), 0, 0);
    CHECK(c.contraction.pi.is_injective());
  }
  SUBCASE("inclusions") {
    auto c6 = builtin_group("C6");
    const auto& c3 = subgroup_as_group(subgroups(c6)[2]);
    REQUIRE(c3.group->order() == 3);
    Hom into_c6 = c3.inclusion;
    auto c = compose_spans(elementary_t(Hom::identity(c6)), elementary_t(into_c6), Hom::identity(c3.group), 0, 0);
    CHECK(c.contraction.pi.is_surjective());
    CHECK(c.contraction.pi.is_injective());
  }
  SUBCASE("random pairs") {
    std::mt19937_64 rng(5);
    const auto& gs = small_groups();
    for (int round = 0; round < 60; ++round) {
      auto l = gs[rng() % gs.size()], h = gs[rng() % gs.size()], g = gs[rng() % gs.size()],
           k = gs[rng() % gs.size()];
      Biset v = random_transitive(rng, l, h);
      Biset u = random_transitive(rng, h, g);
      Hom f = random_hom(rng, k, g);
      Point x = static_cast<Point>(rng() % u.size());
      Point y = static_cast<Point>(rng() % v.size());
      CHECK_NOTHROW(compose_spans(v, u, f, y, x));
    }
  }
}

TEST_CASE("decomposition of U x t(f)") {
  auto s3 = builtin_group("S3");
  CHECK_NOTHROW(decomposition_check(identity_biset(s3), Hom::identity(s3)));
  CHECK_NOTHROW(decomposition_check(identity_biset(s3), inclusion_c2_s3()));
  std::mt19937_64 rng(23);
  const auto& gs = small_groups();
  for (int round = 0; round < 40; ++round) {
    auto h = gs[rng() % gs.size()], g = gs[rng() % gs.size()], k = gs[rng() % gs.size()];
    Biset u = random_transitive(rng, h, g);
    Hom f = random_hom(rng, k, g);
    auto phi = decomposition_check(u, f);
    CHECK(phi.size() == compose(u, elementary_t(f)).size());
  }
}
