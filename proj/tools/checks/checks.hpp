#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bisetkit/biset.hpp"
#include "bisetkit/extension.hpp"
#include "bisetkit/linalg.hpp"
#include "bisetkit/universe.hpp"

namespace bisetkit::checks {

struct Result {
  std::string name;
  bool pass = true;
  std::string detail;
  double seconds = 0;
};

using Rng = std::mt19937_64;

std::vector<GroupRef> members_up_to(const GroupUniverse& u, std::size_t order);
// A disjoint union of 1..pieces random transitive (H,G)-bisets.
Biset random_biset(Rng& rng, const GroupRef& h, const GroupRef& g, std::size_t pieces = 2);

Result group_library();
Result subgroup_enumeration(const std::vector<GroupRef>& groups);
Result hom_enumeration(const std::vector<GroupRef>& groups);

// Unit laws up to explicit isomorphism for every transitive biset, every
// composable pair decomposed, associativity of the resulting structure
// constants on every composable triple, and `literal` random triples checked
// by an explicit isomorphism of the composed bisets.
Result biset_category_laws(const std::vector<GroupRef>& groups, std::size_t literal, std::uint64_t seed);
Result decomposition(const std::vector<GroupRef>& groups, std::size_t instances, std::uint64_t seed);
Result span_compositions(const std::vector<GroupRef>& groups, std::size_t instances, std::uint64_t seed);

Result burnside_rings(const std::vector<GroupRef>& groups);
Result bigger_burnside(const std::vector<GroupRef>& groups, const UniverseRef& universe);
// Tilde deflation rank against the subgroup-class oracle, plus the ring
// homomorphism property of the projection.
Result deflation(const std::vector<std::string>& names, const UniverseRef& universe);

// Constant ranks against subgroup classes of G, sign ranks against subgroup
// classes of G x C2.
Result extension_ranks(const std::vector<GroupRef>& groups, ScalarMode mode);
Result shipped_functor(const std::string& path, const std::string& builtin);
Result extension_identities(const ExtensionFunctor& e, const std::vector<GroupRef>& objects, std::uint64_t seed);
Result functoriality(const ExtensionFunctor& e, const std::vector<GroupRef>& objects, bool elementary,
                     std::size_t random_pairs, std::uint64_t seed);
Result adjunction(std::size_t instances, std::uint64_t seed);
// T_H E(U) = Omega(U) T_G for the constant functor, T_G [f : K -> G] = [G/f(K)].
Result burnside_correspondence(const std::vector<GroupRef>& objects, const UniverseRef& universe);

Result smith_forms(std::size_t count, std::size_t max_dim, std::uint64_t seed);
Result module_reduction(std::size_t count, std::uint64_t seed);

struct SuiteConfig {
  std::uint64_t seed = 1;
  ScalarMode scalar = ScalarMode::Rational;
  std::string data_dir;
};

const std::vector<std::string>& suite_names();
// Throws Error(InvalidArgument) for an unknown suite.
std::vector<Result> run_suite(const std::string& suite, const SuiteConfig& cfg);

}  // namespace bisetkit::checks
