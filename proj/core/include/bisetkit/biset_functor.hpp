#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bisetkit/biset.hpp"
#include "bisetkit/linalg.hpp"

namespace bisetkit {

/// Covariant assignment G -> Q^dim(G), (H,G)-biset U -> dim(H) x dim(G) matrix.
class BisetFunctor {
 public:
  virtual ~BisetFunctor() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dim(const GroupRef& g) const = 0;
  virtual QMatrix apply(const Biset& u) const = 0;
};

using BisetFunctorRef = std::shared_ptr<const BisetFunctor>;

// The rationalized Burnside functor, in the transitive G-set basis of each
// group's Burnside ring.
class BurnsideFunctor final : public BisetFunctor {
 public:
  std::string name() const override { return "burnside"; }
  std::size_t dim(const GroupRef& g) const override;
  QMatrix apply(const Biset& u) const override;
};

// Block-diagonal sum of biset functors.
class DirectSumFunctor final : public BisetFunctor {
 public:
  explicit DirectSumFunctor(std::vector<BisetFunctorRef> parts) : parts_(std::move(parts)) {}

  std::string name() const override;
  std::size_t dim(const GroupRef& g) const override;
  QMatrix apply(const Biset& u) const override;

 private:
  std::vector<BisetFunctorRef> parts_;
};

/// A biset functor on a finite set of objects, stored as one matrix per
/// transitive basis element of each double Burnside group B(H,G).
class TableBisetFunctor final : public BisetFunctor {
 public:
  struct Block {
    std::size_t left;   // object index
    std::size_t right;
    std::vector<QMatrix> mats;  // one per double_burnside(left, right) basis element
  };

  TableBisetFunctor(std::vector<GroupRef> objects, std::vector<std::size_t> dims, std::vector<Block> blocks,
                    std::string name = "table");

  static TableBisetFunctor tabulate(const BisetFunctor& b, const std::vector<GroupRef>& objects,
                                    std::string name = "table");

  std::string name() const override { return name_; }
  std::size_t dim(const GroupRef& g) const override;
  QMatrix apply(const Biset& u) const override;

  // Identity and composition laws on every pair of basis elements; throws
  // FunctorLawViolation naming the first failure.
  void validate() const;

  const std::vector<GroupRef>& objects() const { return objects_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<Block>& blocks() const { return blocks_; }

 private:
  std::size_t object_index(const GroupRef& g) const;
  const Block& block(std::size_t left, std::size_t right) const;

  std::vector<GroupRef> objects_;
  std::vector<std::size_t> dims_;
  std::vector<Block> blocks_;
  std::string name_;
};

}  // namespace bisetkit
