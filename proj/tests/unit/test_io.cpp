#include <string>

#include "bisetkit/burnside.hpp"
#include "bisetkit/error.hpp"
#include "bisetkit/extension.hpp"
#include "bisetkit/group_algorithms.hpp"
#include "bisetkit/io.hpp"
#include "bisetkit/library.hpp"
#include "doctest.h"

using namespace bisetkit;

namespace {

std::string data(const std::string& rel) { return std::string(BISETKIT_DATA_DIR) + "/" + rel; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("groups") {
  auto s3 = io::group_from_json(io::load_file(data("groups/s3_perm.json")));
  CHECK(s3->order() == 6);
  CHECK(is_isomorphic(s3, builtin_group("S3")));
  auto c4 = io::group_from_json(io::load_file(data("groups/c4_cayley.json")));
  CHECK(is_isomorphic(c4, builtin_group("C4")));
  auto again = io::group_from_json(io::group_to_json(s3));
  CHECK(again->cayley() == s3->cayley());
  CHECK(io::group_to_json(again) == io::group_to_json(s3));
  CHECK(io::group_from_json("Q8") == builtin_group("Q8"));

  CHECK(kind_of([] { io::group_from_json(io::load_file(data("groups/not_a_group.json"))); }) ==
        ErrorKind::NotAGroup);
  CHECK(kind_of([] { io::group_from_json("C99"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::group_from_json(io::json{{"name", "x"}}); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::load_file(data("missing.json")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::group_from_json(io::json::parse(R"({"degree": 3, "perm_gens": [[0, 1]]})")); }) ==
        ErrorKind::Parse);
}

TEST_CASE("bisets") {
  Biset t = io::biset_from_json(io::load_file(data("bisets/ind_c2_s3.json")));
  CHECK(t.size() == 6);
  CHECK(t.left()->order() == 6);
  CHECK(t.right()->order() == 2);
  Biset back = io::biset_from_json(io::biset_to_json(t));
  CHECK(back.lact() == t.lact());
  CHECK(back.ract() == t.ract());
  CHECK(io::biset_to_json(back) == io::biset_to_json(t));

  auto j = io::biset_to_json(t);
  j["lact"][1][0] = 5;
  CHECK_THROWS_AS(io::biset_from_json(j), Error);
  CHECK(kind_of([] { io::biset_from_json(io::json::parse(R"({"t": {"src": "C2", "dst": "C3", "map": [0, 1]}})")); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("matrices") {
  QMatrix m = QMatrix::from_rows({{Rational(1, 2), 0}, {-3, Rational(-7, 4)}});
  auto j = io::matrix_to_json(m);
  CHECK(j.dump() == R"([["1/2","0"],["-3","-7/4"]])");
  CHECK(io::matrix_from_json(j) == m);
  CHECK(io::matrix_from_json(io::json::parse("[[1, 2], [\"3/6\", 0]]"))(1, 0) == Rational(1, 2));
  CHECK(kind_of([] { io::matrix_from_json(io::json::parse("[[1, 2], [3]]")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::matrix_from_json(io::json::parse("[[\"1/0\"]]")); }) == ErrorKind::Parse);
}

TEST_CASE("universes") {
  CHECK(io::universe_from_spec("upto6")->size() == 8);
  CHECK(io::universe_from_spec("upto8")->size() == 14);
  CHECK(io::universe_from_spec("upto12")->size() == 24);
  auto u = io::universe_from_spec("file:" + data("universes/small.json"));
  CHECK(u->size() == 6);
  CHECK(kind_of([] { io::universe_from_spec("upto7"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::universe_from_spec("upto12", 8); }) == ErrorKind::TooLarge);
}

TEST_CASE("restriction functors") {
  auto p = io::restriction_functor_from_json(io::load_file(data("functors/two_point.json")));
  CHECK(p->name() == "two_point");
  CHECK(p->dims() == std::vector<std::size_t>{1, 2});
  auto broken = io::load_file(data("functors/two_point_broken.json"));
  CHECK(kind_of([&] { io::restriction_functor_from_json(broken); }) == ErrorKind::FunctorLawViolation);

  auto dumped = io::restriction_functor_to_json(*p, *p->universe());
  auto reread = io::restriction_functor_from_json(dumped);
  CHECK(io::restriction_functor_to_json(*reread, *reread->universe()) == dumped);

  auto u = builtin_universe("upto6");
  auto constant = io::restriction_functor_to_json(ConstantFunctor(), *u);
  auto table = io::restriction_functor_from_json(constant);
  ExtensionSpace s(table, table->universe(), table->universe()->find_by_label("S3"));
  CHECK(s.rank() == 4);

  auto missing = constant;
  missing["mats"].erase(missing["mats"].size() - 1);
  CHECK(kind_of([&] { io::restriction_functor_from_json(missing); }) == ErrorKind::FunctorLawViolation);
  auto short_dims = constant;
  short_dims["dims"].erase("S3");
  CHECK(kind_of([&] { io::restriction_functor_from_json(short_dims); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("biset functor tables") {
  std::vector<GroupRef> objects{builtin_group("C1"), builtin_group("C2"), builtin_group("C3")};
  auto t = TableBisetFunctor::tabulate(BurnsideFunctor(), objects, "burnside");
  auto j = io::biset_functor_to_json(t);
  auto back = io::biset_functor_from_json(j);
  CHECK(io::biset_functor_to_json(back) == j);
  auto bad = j;
  bad["blocks"][4]["mats"][0][0][0] = "5";
  CHECK_THROWS_AS(io::biset_functor_from_json(bad), Error);
}
