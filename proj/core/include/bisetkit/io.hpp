#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "bisetkit/biset.hpp"
#include "bisetkit/biset_functor.hpp"
#include "bisetkit/restriction_functor.hpp"
#include "bisetkit/universe.hpp"

namespace bisetkit::io {

using json = nlohmann::json;

// Reads and parses a file; throws Error(Parse).
json load_file(const std::string& path);

// Accepts a builtin name ("S3"), {"name", "cayley"} or {"name", "degree",
// "perm_gens"}.  Permutation generators use 0-based images.
GroupRef group_from_json(const json& j, std::size_t max_order = kDefaultGroupBound);
json group_to_json(const GroupRef& g);

// {"src": group, "dst": group, "map": [...]}.  Named groups are looked up in
// the universe first when one is given.
Hom hom_from_json(const json& j, const GroupUniverse* universe = nullptr);
json hom_to_json(const Hom& f);

// {"left", "right", "size", "lact", "ract"} with lact[h][u], ract[g][u]; or
// {"t": hom} / {"r": hom}.
Biset biset_from_json(const json& j, const GroupUniverse* universe = nullptr);
json biset_to_json(const Biset& u);

json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);
json vector_to_json(const QVector& v);

// "upto6" | "upto8" | "upto12" | "file:PATH" (a JSON list of groups, or an
// object with a "groups" list).
UniverseRef universe_from_spec(const std::string& spec, std::size_t max_order = kDefaultUniverseBound);

// {"universe": [groups], "dims": {name: int}, "mats": [{"hom": {...}, "matrix": [[...]]}]}
std::shared_ptr<TableFunctor> restriction_functor_from_json(const json& j,
                                                            std::size_t max_order = kDefaultUniverseBound);
json restriction_functor_to_json(const RestrictionFunctor& p, const GroupUniverse& universe);

// {"objects": [groups], "dims": {name: int},
//  "blocks": [{"left": name, "right": name, "mats": [matrix per basis element]}]}
TableBisetFunctor biset_functor_from_json(const json& j);
json biset_functor_to_json(const TableBisetFunctor& b);

}  // namespace bisetkit::io
