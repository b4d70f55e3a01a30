#pragma once

#include <string>
#include <vector>

#include "bisetkit/group.hpp"
#include "bisetkit/universe.hpp"

namespace bisetkit {

// Builtin groups: C1..C12, D3..D6, V4, S3, S4, Q8, A4, C2xC4, C2xC2xC2,
// C3xC3, C2xC6, Dic3.  Each name maps to one shared instance.
GroupRef builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

// "upto6", "upto8" or "upto12": every group of order <= n, one per iso class.
UniverseRef builtin_universe(const std::string& name, std::size_t max_order = kDefaultUniverseBound);
std::vector<std::string> builtin_universe_names();

// Fresh universe holding exactly the named builtin groups.
UniverseRef universe_of(const std::vector<std::string>& names, std::size_t max_order = kDefaultUniverseBound);

}  // namespace bisetkit
