#include "bisetkit/universe.hpp"

#include <utility>

#include "bisetkit/error.hpp"
#include "bisetkit/group_algorithms.hpp"

namespace bisetkit {

GroupUniverse::GroupUniverse(std::size_t max_order, std::string name)
    : max_order_(max_order), name_(std::move(name)) {}

std::size_t GroupUniverse::size() const {
  std::lock_guard lock(mu_);
  return members_.size();
}

GroupRef GroupUniverse::member(std::size_t i) const {
  std::lock_guard lock(mu_);
  return members_.at(i);
}

std::vector<GroupRef> GroupUniverse::members() const {
  std::lock_guard lock(mu_);
  return members_;
}

std::optional<std::size_t> GroupUniverse::index_of(const GroupRef& g) const {
  std::lock_guard lock(mu_);
  auto it = by_serial_.find(g->serial());
  if (it == by_serial_.end()) return std::nullopt;
  return it->second;
}

GroupRef GroupUniverse::find_by_label(const std::string& label) const {
  std::lock_guard lock(mu_);
  for (const auto& m : members_)
    if (m->label() == label) return m;
  return nullptr;
}

std::optional<Identification> GroupUniverse::identify(const GroupRef& g) const {
  std::vector<GroupRef> snapshot;
  {
    std::lock_guard lock(mu_);
    auto direct = by_serial_.find(g->serial());
    if (direct != by_serial_.end()) return Identification{direct->second, Hom::identity(g)};
    auto it = cache_.find(g->serial());
    if (it != cache_.end() && (it->second.result || it->second.members_seen == members_.size()))
      return it->second.result;
    snapshot = members_;
  }
  std::optional<Identification> result;
  for (std::size_t i = 0; i < snapshot.size() && !result; ++i)
    if (auto iso = is_isomorphic(g, snapshot[i])) result = Identification{i, *iso};
  std::lock_guard lock(mu_);
  cache_[g->serial()] = CacheEntry{snapshot.size(), result};
  return result;
}

Identification GroupUniverse::require(const GroupRef& g) const {
  auto id = identify(g);
  if (!id)
    throw Error(ErrorKind::UniverseOverflow,
                "group of order " + std::to_string(g->order()) + " is not in universe " + name_);
  return *id;
}

GroupUniverse::Registered GroupUniverse::register_group(const GroupRef& g) {
  if (auto id = identify(g)) return Registered{member(id->index), id->iso, false};
  if (g->order() > max_order_)
    throw Error(ErrorKind::TooLarge, "group of order " + std::to_string(g->order()) +
                                         " exceeds universe bound " + std::to_string(max_order_));
  std::lock_guard lock(mu_);
  // Re-check against members added since the snapshot.
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i]->order() == g->order())
      if (auto iso = is_isomorphic(g, members_[i])) return Registered{members_[i], *iso, false};
  by_serial_.emplace(g->serial(), members_.size());
  members_.push_back(g);
  return Registered{g, Hom::identity(g), true};
}

}  // namespace bisetkit
