#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bisetkit/biset_functor.hpp"
#include "bisetkit/restriction_functor.hpp"
#include "bisetkit/universe.hpp"

namespace bisetkit {

// [f : K -> G, kappa in P(K)]
struct ExtensionTerm {
  Hom map;
  QVector kappa;
};

/// The value at G of the biset functor induced by a restriction functor P,
/// truncated to a universe: the span of terms [K -> G, e_j] over member
/// groups K and hom classes, modulo [f, P(pi) l] = [f o pi, l] for every
/// surjection pi between members.  Coordinates live on the free columns of
/// the relation echelon, which favour the smallest members.
class ExtensionSpace {
 public:
  struct BasisTerm {
    std::size_t member;     // universe index
    std::size_t hom_class;  // index into hom_classes(member, G)
    std::size_t component;
  };

  ExtensionSpace(RestrictionFunctorRef p, UniverseRef universe, GroupRef g,
                 ScalarMode mode = ScalarMode::Rational);

  const GroupRef& group() const { return g_; }
  const RestrictionFunctorRef& functor() const { return p_; }
  const UniverseRef& universe() const { return universe_; }
  ScalarMode mode() const { return module_.mode(); }

  std::size_t n_terms() const { return basis_.size(); }
  std::size_t n_relations() const { return n_relations_; }
  std::size_t rank() const { return module_.rank(); }
  const std::vector<Integer>& torsion() const { return module_.torsion(); }
  const PresentedModule& module() const { return module_; }

  const BasisTerm& term(std::size_t i) const { return basis_[i]; }
  std::string label(std::size_t i) const;
  // Basis terms of the free coordinates (rational mode).
  std::vector<std::size_t> free_terms() const { return module_.free_columns(); }
  ExtensionTerm free_term(std::size_t i) const;
  std::string free_label(std::size_t i) const { return label(module_.free_columns().at(i)); }

  // Sum of the terms in the spanning space, before reduction.  Terms whose
  // source is not a member are moved onto members; throws UniverseOverflow
  // when that is impossible.
  QVector embed(const std::vector<ExtensionTerm>& terms) const;
  QVector coords(const std::vector<ExtensionTerm>& terms) const;

  // delta_G : P(G) -> value at G, kappa -> [id_G, kappa].
  QVector delta(const QVector& kappa) const;
  QMatrix delta_matrix() const;

  // True when every group that can occur in the exact value at G is a member.
  bool closed() const;
  std::string status() const { return closed() ? "closed universe" : "truncated"; }

 private:
  std::size_t index(std::size_t member, std::size_t hom_class, std::size_t component) const {
    return offset_.at(member).at(hom_class) + component;
  }
  std::size_t class_index(std::size_t member, const Hom& f) const;
  void add_member_term(std::size_t member, const Hom& f, const QVector& kappa, QVector& out) const;
  void add_term(const Hom& f, const QVector& kappa, QVector& out) const;

  struct PushDown {
    std::vector<std::pair<std::size_t, Hom>> targets;  // (member, hom member -> G)
    std::vector<std::size_t> widths;
    std::shared_ptr<LinearSolver> solver;
  };
  const PushDown& push_down(const Hom& f) const;

  RestrictionFunctorRef p_;
  UniverseRef universe_;
  GroupRef g_;
  std::vector<BasisTerm> basis_;
  std::map<std::size_t, std::vector<std::size_t>> offset_;  // member -> class -> first index
  std::size_t n_relations_ = 0;
  PresentedModule module_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<std::uint64_t, std::vector<Elt>>, PushDown> push_downs_;
};

/// The biset functor of ExtensionSpace values (rational mode).  apply(U)
/// is expressed in free coordinates on both sides.
class ExtensionFunctor final : public BisetFunctor {
 public:
  ExtensionFunctor(RestrictionFunctorRef p, UniverseRef universe);

  std::string name() const override { return p_->name() + "_ext"; }
  std::size_t dim(const GroupRef& g) const override { return space(g).rank(); }
  QMatrix apply(const Biset& u) const override;

  const ExtensionSpace& space(const GroupRef& g) const;
  const RestrictionFunctorRef& functor() const { return p_; }
  const UniverseRef& universe() const { return universe_; }

  // U [f, kappa] = sum over x of [q_x, P(p_x) kappa].  reps defaults to
  // double_coset_reps(u, f).
  std::vector<ExtensionTerm> act_on_term(const Biset& u, const ExtensionTerm& t,
                                         const std::vector<Point>* reps = nullptr) const;
  QVector act(const Biset& u, const QVector& coords) const;

 private:
  RestrictionFunctorRef p_;
  UniverseRef universe_;
  mutable std::mutex mu_;
  mutable std::map<std::uint64_t, std::unique_ptr<ExtensionSpace>> spaces_;
};

}  // namespace bisetkit
