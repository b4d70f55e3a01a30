#include <set>

#include "bisetkit/error.hpp"
#include "bisetkit/group.hpp"
#include "bisetkit/group_algorithms.hpp"
#include "bisetkit/library.hpp"
#include "bisetkit/universe.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bisetkit;

namespace {

bool is_valid_group(const Group& g) {
  const Elt n = static_cast<Elt>(g.order());
  for (Elt a = 0; a < n; ++a) {
    if (g.mul(g.identity(), a) != a || g.mul(a, g.identity()) != a) return false;
    if (g.mul(a, g.inv(a)) != g.identity()) return false;
    for (Elt b = 0; b < n; ++b)
      for (Elt c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cayley input") {
  auto triv = Group::from_cayley({{0}});
  CHECK(triv->order() == 1);
  auto c2 = Group::from_cayley({{0, 1}, {1, 0}});
  CHECK(c2->order() == 2);
  CHECK(c2->elt_order(1) == 2);

  // Z/6 with one intercalate swapped: a loop with inverses, not associative.
  std::vector<std::vector<Elt>> bad = {
      {0, 1, 2, 3, 4, 5}, {1, 5, 3, 4, 2, 0}, {2, 3, 4, 5, 0, 1},
      {3, 4, 5, 0, 1, 2}, {4, 2, 0, 1, 5, 3}, {5, 0, 1, 2, 3, 4},
  };
  CHECK_THROWS_AS(Group::from_cayley(bad), Error);
  try {
    Group::from_cayley(bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGroup);
  }
  CHECK_THROWS_AS(Group::from_cayley({{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(Group::from_cayley({{0, 1}}), Error);
}

TEST_CASE("permutation groups") {
  auto s3 = group_from_perm_gens(3, {{1, 2, 0}, {1, 0, 2}});
  CHECK(s3->order() == 6);
  CHECK(!s3->is_abelian());
  auto triv = group_from_perm_gens(1, {});
  CHECK(triv->order() == 1);
  auto v4 = group_from_perm_gens(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  CHECK(v4->order() == 4);
  for (Elt x = 0; x < 4; ++x) CHECK(v4->mul(x, x) == v4->identity());
  CHECK_THROWS_AS(group_from_perm_gens(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, "", 10), Error);
}

TEST_CASE("builtin groups are valid and have the expected orders") {
  const std::map<std::string, std::size_t> orders = {
      {"C1", 1},  {"C7", 7},  {"C12", 12}, {"D4", 8},  {"D6", 12},       {"V4", 4},   {"S3", 6},
      {"S4", 24}, {"Q8", 8},  {"A4", 12},  {"C2xC4", 8}, {"C2xC2xC2", 8}, {"C3xC3", 9}, {"C2xC6", 12},
      {"Dic3", 12}};
  for (const auto& [name, n] : orders) {
    auto g = builtin_group(name);
    CHECK(g->order() == n);
    if (n <= 12) CHECK(is_valid_group(*g));
  }
  CHECK(builtin_group("S3") == builtin_group("S3"));
}

TEST_CASE("direct products") {
  auto c2 = builtin_group("C2");
  auto c3 = builtin_group("C3");
  auto p = direct_product(c2, c2);
  CHECK(p.group->order() == 4);
  for (Elt x = 0; x < 4; ++x)
    if (x != p.group->identity()) CHECK(p.group->elt_order(x) == 2);
  // componentwise table oracle
  for (Elt a = 0; a < 4; ++a)
    for (Elt b = 0; b < 4; ++b)
      CHECK(p.group->mul(a, b) == p.pair(c2->mul(p.first_of(a), p.first_of(b)),
                                         c2->mul(p.second_of(a), p.second_of(b))));
  auto q = direct_product(c2, c3);
  bool has6 = false;
  for (Elt x = 0; x < 6; ++x) has6 = has6 || q.group->elt_order(x) == 6;
  CHECK(has6);
  auto s3 = builtin_group("S3");
  CHECK(is_isomorphic(direct_product(s3, builtin_group("C1")).group, s3));
  CHECK(&product_of(c2, c3) == &product_of(c2, c3));
}

TEST_CASE("subgroups match the seed-closure oracle") {
  for (const auto& name : {"C1", "C2", "C4", "V4", "S3", "C6", "D4", "Q8", "A4", "C2xC2xC2", "D6", "Dic3"}) {
    auto g = builtin_group(name);
    const auto& subs = subgroups(g);
    std::set<std::vector<Elt>> mine;
    for (const auto& s : subs) mine.insert(s.elems);
    CHECK_MESSAGE(mine == oracle::subgroups_by_seeds(g), name);
    CHECK(mine.size() == subs.size());
    CHECK(subgroup_classes(g).size() == oracle::subgroup_class_count(g));
  }
  CHECK(subgroups(builtin_group("C2")).size() == 2);
  CHECK(subgroups(builtin_group("S3")).size() == 6);
  CHECK(subgroups(builtin_group("C1")).size() == 1);
  CHECK(subgroup_classes(builtin_group("S3")).size() == 4);
  CHECK(subgroup_classes(builtin_group("C4")).size() == 3);
  CHECK(subgroup_classes(builtin_group("S4")).size() == 11);
}

TEST_CASE("subgroup count is a presentation invariant") {
  auto perm_s3 = builtin_group("S3");
  auto table_s3 = Group::from_cayley(builtin_group("D3")->cayley());
  CHECK(subgroups(perm_s3).size() == subgroups(table_s3).size());
  CHECK(is_isomorphic(perm_s3, table_s3).has_value());
}

TEST_CASE("conjugacy classes partition the subgroups") {
  auto g = builtin_group("D4");
  std::size_t total = 0;
  for (const auto& cls : conjugacy_classes_of_subgroups(g)) {
    total += cls.size();
    for (const auto& s : cls) {
      CHECK(conjugate_subgroup(s, 1).order() == cls.front().order());
    }
  }
  CHECK(total == subgroups(g).size());
  for (const auto& cls : conjugacy_classes_of_subgroups(builtin_group("C2xC4"))) CHECK(cls.size() == 1);
}

TEST_CASE("normal subgroups agree with filtering all subgroups") {
  for (const auto& name : {"S3", "D4", "Q8", "A4", "S4", "C2xC2xC2", "Dic3"}) {
    auto g = builtin_group(name);
    std::set<std::vector<Elt>> expected, got;
    for (const auto& s : subgroups(g))
      if (is_normal(s)) expected.insert(s.elems);
    for (const auto& s : normal_subgroups(g)) got.insert(s.elems);
    CHECK_MESSAGE(expected == got, name);
  }
}

TEST_CASE("kernels, images, quotients") {
  auto c4 = builtin_group("C4");
  auto c2 = builtin_group("C2");
  Hom mod2{c4, c2, {}};
  for (Elt x = 0; x < 4; ++x) {
    // element x of the perm-built C4 is some power of the generator
    Elt k = 0, p = c4->identity();
    while (p != x) p = c4->mul(p, c4->generators()[0]), ++k;
    Elt y = c2->identity();
    if (k % 2) y = c2->generators()[0];
    mod2.map.push_back(y);
  }
  REQUIRE(mod2.is_homomorphism());
  auto ker = kernel(mod2);
  CHECK(ker.order() == 2);
  CHECK(image(mod2).order() == 2);

  auto s3 = builtin_group("S3");
  auto q1 = quotient(s3, trivial_subgroup(s3));
  CHECK(q1.group->order() == 6);
  CHECK(is_isomorphic(q1.group, s3).has_value());
  for (Elt x = 0; x < 6; ++x) CHECK(q1.projection.map[x] == x);

  Subgroup c3;
  for (const auto& s : subgroups(s3))
    if (s.order() == 3) c3 = s;
  auto q = quotient(s3, c3);
  CHECK(q.group->order() == 2);
  CHECK(kernel(q.projection).elems == c3.elems);
  CHECK(q.projection.is_homomorphism());

  Subgroup c2sub;
  for (const auto& s : subgroups(s3))
    if (s.order() == 2) c2sub = s;
  CHECK_THROWS_AS(quotient(s3, c2sub), Error);

  for (const auto& n : normal_subgroups(builtin_group("D4"))) {
    auto qq = quotient(n.parent, n);
    CHECK(kernel(qq.projection).elems == n.elems);
  }
}

TEST_CASE("homomorphism enumeration matches brute force") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"C2", "C2"}, {"C2", "S3"}, {"C3", "C2"}, {"V4", "S3"}, {"S3", "S3"},
      {"C4", "V4"}, {"Q8", "C2"}, {"C6", "S3"}, {"S3", "C6"}, {"V4", "D4"}};
  for (const auto& [a, b] : pairs) {
    auto k = builtin_group(a), g = builtin_group(b);
    auto homs = all_homs(k, g);
    CHECK_MESSAGE(homs.size() == oracle::hom_count_brute(k, g), a << "->" << b);
    for (const auto& f : homs) CHECK(f.is_homomorphism());
  }
  CHECK(all_homs(builtin_group("C2"), builtin_group("C2")).size() == 2);
  CHECK(all_homs(builtin_group("C3"), builtin_group("C2")).size() == 1);
  CHECK(hom_classes(builtin_group("C2"), builtin_group("S3")).size() == 2);
}

TEST_CASE("hom classes partition all homs") {
  auto k = builtin_group("V4");
  auto g = builtin_group("D4");
  const auto& classes = hom_classes(k, g);
  std::set<std::vector<Elt>> reps;
  for (const auto& c : classes) reps.insert(c.map);
  CHECK(reps.size() == classes.size());
  for (const auto& f : all_homs(k, g)) {
    auto r = hom_class_of(f).rep.map;
    CHECK(reps.count(r) == 1);
    for (Elt h = 0; h < g->order(); ++h) CHECK(hom_class_of(conjugate(h, f)).rep.map == r);
  }
}

TEST_CASE("isomorphism testing") {
  CHECK(!is_isomorphic(builtin_group("C4"), builtin_group("V4")));
  auto q8 = builtin_group("Q8");
  CHECK(is_isomorphic(q8, q8));
  CHECK(!is_isomorphic(q8, builtin_group("D4")));
  CHECK(!is_isomorphic(builtin_group("A4"), builtin_group("Dic3")));
  CHECK(!is_isomorphic(builtin_group("D6"), builtin_group("Dic3")));
  auto iso = is_isomorphic(builtin_group("S3"), builtin_group("D3"));
  REQUIRE(iso);
  CHECK(iso->is_homomorphism());
  CHECK(iso->is_injective());
  CHECK(is_isomorphic(builtin_group("C2xC6"), direct_product(builtin_group("C2"), builtin_group("C6")).group));
  CHECK(automorphisms(builtin_group("C2xC2xC2")).size() == 168);
  CHECK(automorphisms(builtin_group("Q8")).size() == 24);
  CHECK(automorphisms(builtin_group("S3")).size() == 6);
}

TEST_CASE("automorphism generators generate") {
  for (const auto& name : {"V4", "C8", "Q8", "C2xC2xC2", "D4"}) {
    auto g = builtin_group(name);
    auto gens = automorphism_generators(g);
    std::set<std::vector<Elt>> closure{Hom::identity(g).map};
    std::vector<std::vector<Elt>> queue(closure.begin(), closure.end());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& s : gens) {
        auto c = compose(s, Hom{g, g, queue[i]}).map;
        if (closure.insert(c).second) queue.push_back(c);
      }
    CHECK(closure.size() == automorphisms(g).size());
  }
}

TEST_CASE("universe registration") {
  GroupUniverse u(12);
  auto c2 = builtin_group("C2");
  auto a = u.register_group(c2);
  auto b = u.register_group(c2);
  CHECK(a.canonical == b.canonical);
  CHECK(a.added);
  CHECK(!b.added);

  // A C2 living inside S3 x C2 as a stabilizer-like subgroup.
  const auto& p = product_of(builtin_group("S3"), c2);
  Subgroup s = generated_subgroup(p.group, {p.pair(builtin_group("S3")->identity(), 1)});
  const auto& sg = subgroup_as_group(s);
  auto r = u.register_group(sg.group);
  CHECK(r.canonical == c2);
  CHECK(!r.added);
  CHECK(r.iso.is_homomorphism());
  CHECK(r.iso.is_injective());

  CHECK_THROWS_AS(u.register_group(builtin_group("S4")), Error);
  auto up8 = builtin_universe("upto8");
  CHECK(up8->size() == 14);
  CHECK(builtin_universe("upto12")->size() == 24);
  CHECK(builtin_universe("upto6")->size() == 8);
}
