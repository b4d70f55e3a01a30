#pragma once

#include <random>
#include <vector>

#include "bisetkit/biset_functor.hpp"
#include "bisetkit/extension.hpp"

namespace bisetkit {

// One matrix per object, in the order of the object list it was built for.
struct Transformation {
  std::vector<QMatrix> mats;

  bool operator==(const Transformation& o) const { return mats == o.mats; }
  bool operator!=(const Transformation& o) const { return !(*this == o); }
};

// Natural families xi_G : P(G) -> B(G) with xi_G P(f) = B(r(f)) xi_H.
std::vector<Transformation> restriction_morphism_basis(const RestrictionFunctor& p, const BisetFunctor& b,
                                                       const std::vector<GroupRef>& objects);
// Families lambda_G : E(G) -> B(G) commuting with every t(f) and r(f).
std::vector<Transformation> biset_morphism_basis(const ExtensionFunctor& e, const BisetFunctor& b,
                                                 const std::vector<GroupRef>& objects);

bool is_restriction_morphism(const RestrictionFunctor& p, const BisetFunctor& b,
                             const std::vector<GroupRef>& objects, const Transformation& xi);
bool is_biset_morphism(const ExtensionFunctor& e, const BisetFunctor& b, const std::vector<GroupRef>& objects,
                       const Transformation& lambda);

// Lambda(xi)_G [f : K -> G, kappa] = B(t(f)) xi_K kappa.  Every universe
// member must be an object.
Transformation adjunction_lambda(const ExtensionFunctor& e, const BisetFunctor& b,
                                 const std::vector<GroupRef>& objects, const Transformation& xi);
// Xi(lambda)_G = lambda_G delta_G.
Transformation adjunction_xi(const ExtensionFunctor& e, const std::vector<GroupRef>& objects,
                             const Transformation& lambda);

// Integer combination of the basis with coefficients in [-3, 3].
Transformation random_combination(const std::vector<Transformation>& basis, std::mt19937_64& rng);

}  // namespace bisetkit
