#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bisetkit/group.hpp"
#include "bisetkit/linalg.hpp"
#include "bisetkit/universe.hpp"

namespace bisetkit {

/// A contravariant assignment G -> Q^dim(G), f -> P(f), on which target
/// conjugations act trivially.  For f : A -> B, apply(f) is the
/// dim(A) x dim(B) matrix of P(f) : P(B) -> P(A) acting on column vectors.
class RestrictionFunctor {
 public:
  virtual ~RestrictionFunctor() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dim(const GroupRef& g) const = 0;
  virtual QMatrix apply(const Hom& f) const = 0;
  // Whether dim/apply accept groups outside any universe.
  virtual bool total() const { return true; }
  // Groups whose presence in a universe makes the truncated value at g final.
  virtual std::vector<GroupRef> witnesses(const GroupRef& g) const = 0;
};

using RestrictionFunctorRef = std::shared_ptr<const RestrictionFunctor>;

// dim = 1, every P(f) = [1].
class ConstantFunctor final : public RestrictionFunctor {
 public:
  std::string name() const override { return "constant"; }
  std::size_t dim(const GroupRef&) const override { return 1; }
  QMatrix apply(const Hom& f) const override;
  std::vector<GroupRef> witnesses(const GroupRef& g) const override;
};

// P(K) = Q[Hom(K, C2)], P(f) : chi -> chi o f.  Characters are ordered by
// their maps.  dim(C2) = 2.
class SignFunctor final : public RestrictionFunctor {
 public:
  std::string name() const override { return "signs"; }
  std::size_t dim(const GroupRef& g) const override;
  QMatrix apply(const Hom& f) const override;
  std::vector<GroupRef> witnesses(const GroupRef& g) const override;

  const std::vector<std::vector<Elt>>& characters(const GroupRef& g) const;

 private:
  mutable std::mutex mu_;
  mutable std::map<std::uint64_t, std::vector<std::vector<Elt>>> chars_;
};

/// Restriction functor given by explicit data on a universe: one matrix per
/// hom class between members.  Other groups are handled through the
/// universe's identifying isomorphisms.
class TableFunctor final : public RestrictionFunctor {
 public:
  struct Entry {
    std::size_t src;  // member index
    std::size_t dst;
    std::vector<Elt> map;
    QMatrix matrix;
  };

  // Checks dimensions, well-definedness on classes, P(id) = I and
  // contravariance on every composable pair; throws FunctorLawViolation or
  // DimensionMismatch.
  TableFunctor(UniverseRef universe, std::vector<std::size_t> dims, const std::vector<Entry>& entries,
               std::string name = "table");

  std::string name() const override { return name_; }
  std::size_t dim(const GroupRef& g) const override;
  QMatrix apply(const Hom& f) const override;
  bool total() const override { return false; }
  std::vector<GroupRef> witnesses(const GroupRef& g) const override;

  const UniverseRef& universe() const { return universe_; }
  const std::vector<std::size_t>& dims() const { return dims_; }

 private:
  const QMatrix& lookup(std::size_t src, std::size_t dst, const std::vector<Elt>& map) const;

  UniverseRef universe_;
  std::vector<std::size_t> dims_;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<Elt>>, QMatrix> mats_;
  std::string name_;
};

// Evaluates p on every hom class between members of u.
std::vector<TableFunctor::Entry> tabulate(const RestrictionFunctor& p, const GroupUniverse& u);

}  // namespace bisetkit
