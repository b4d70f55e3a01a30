#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bisetkit/group.hpp"

namespace bisetkit {

inline constexpr std::size_t kDefaultUniverseBound = 144;

struct Identification {
  std::size_t index;  // member index
  Hom iso;            // input group -> member
};

/// A finite registry of pairwise non-isomorphic groups.  Stands in for "all
/// finite groups" wherever a construction quantifies over every group.
///
/// Registration is internally serialized; every other member function only
/// reads a snapshot and may be called concurrently.
class GroupUniverse {
 public:
  explicit GroupUniverse(std::size_t max_order = kDefaultUniverseBound, std::string name = "custom");

  struct Registered {
    GroupRef canonical;
    Hom iso;  // input -> canonical
    bool added;
  };
  // Throws TooLarge when the group exceeds max_order.
  Registered register_group(const GroupRef& g);

  std::optional<Identification> identify(const GroupRef& g) const;
  // Like identify, but throws UniverseOverflow when absent.
  Identification require(const GroupRef& g) const;

  std::size_t size() const;
  GroupRef member(std::size_t i) const;
  std::vector<GroupRef> members() const;
  std::optional<std::size_t> index_of(const GroupRef& g) const;
  GroupRef find_by_label(const std::string& label) const;

  std::size_t max_order() const { return max_order_; }
  const std::string& name() const { return name_; }

 private:
  struct CacheEntry {
    std::size_t members_seen;
    std::optional<Identification> result;
  };

  std::size_t max_order_;
  std::string name_;
  mutable std::mutex mu_;
  std::vector<GroupRef> members_;
  std::map<std::uint64_t, std::size_t> by_serial_;
  mutable std::map<std::uint64_t, CacheEntry> cache_;
};

using UniverseRef = std::shared_ptr<GroupUniverse>;

}  // namespace bisetkit
