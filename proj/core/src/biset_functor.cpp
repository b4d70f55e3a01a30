#include "bisetkit/biset_functor.hpp"

#include <algorithm>

#include "bisetkit/burnside.hpp"
#include "bisetkit/error.hpp"

namespace bisetkit {

std::size_t BurnsideFunctor::dim(const GroupRef& g) const { return burnside_ring(g).dim(); }

QMatrix BurnsideFunctor::apply(const Biset& u) const {
  const auto& src = burnside_ring(u.right());
  const auto& dst = burnside_ring(u.left());
  QMatrix m(dst.dim(), src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) {
    auto v = dst.vector_of(apply_to_gset(u, src.gset(i)));
    for (std::size_t r = 0; r < v.size(); ++r) m(r, i) = v[r];
  }
  return m;
}

std::string DirectSumFunctor::name() const {
  std::string out;
  for (const auto& p : parts_) out += (out.empty() ? "" : "+") + p->name();
  return out;
}

std::size_t DirectSumFunctor::dim(const GroupRef& g) const {
  std::size_t d = 0;
  for (const auto& p : parts_) d += p->dim(g);
  return d;
}

QMatrix DirectSumFunctor::apply(const Biset& u) const {
  QMatrix m(dim(u.left()), dim(u.right()));
  std::size_t r0 = 0, c0 = 0;
  for (const auto& p : parts_) {
    QMatrix b = p->apply(u);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

TableBisetFunctor::TableBisetFunctor(std::vector<GroupRef> objects, std::vector<std::size_t> dims,
                                     std::vector<Block> blocks, std::string name)
    : objects_(std::move(objects)), dims_(std::move(dims)), blocks_(std::move(blocks)), name_(std::move(name)) {
  if (dims_.size() != objects_.size())
    throw Error(ErrorKind::DimensionMismatch, "biset functor table: one dimension per object required");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return std::tie(a.left, a.right) < std::tie(b.left, b.right); });
  for (std::size_t l = 0; l < objects_.size(); ++l)
    for (std::size_t r = 0; r < objects_.size(); ++r) {
      const auto& blk = block(l, r);
      const auto& db = double_burnside(objects_[l], objects_[r]);
      if (blk.mats.size() != db.dim())
        throw Error(ErrorKind::DimensionMismatch, "biset functor table: wrong number of basis matrices for (" +
                                                      objects_[l]->label() + "," + objects_[r]->label() + ")");
      for (const auto& m : blk.mats)
        if (m.rows() != dims_[l] || m.cols() != dims_[r])
          throw Error(ErrorKind::DimensionMismatch, "biset functor table: matrix shape for (" +
                                                        objects_[l]->label() + "," + objects_[r]->label() + ")");
    }
}

TableBisetFunctor TableBisetFunctor::tabulate(const BisetFunctor& b, const std::vector<GroupRef>& objects,
                                              std::string name) {
  std::vector<std::size_t> dims;
  for (const auto& g : objects) dims.push_back(b.dim(g));
  std::vector<Block> blocks;
  for (std::size_t l = 0; l < objects.size(); ++l)
    for (std::size_t r = 0; r < objects.size(); ++r) {
      Block blk{l, r, {}};
      const auto& db = double_burnside(objects[l], objects[r]);
      for (std::size_t i = 0; i < db.dim(); ++i) blk.mats.push_back(b.apply(db.basis_biset(i)));
      blocks.push_back(std::move(blk));
    }
  return TableBisetFunctor(objects, std::move(dims), std::move(blocks), std::move(name));
}

std::size_t TableBisetFunctor::object_index(const GroupRef& g) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == g) return i;
  throw Error(ErrorKind::UniverseOverflow, "biset functor table: " + g->label() + " is not an object");
}

const TableBisetFunctor::Block& TableBisetFunctor::block(std::size_t left, std::size_t right) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), std::make_pair(left, right),
                             [](const Block& b, const std::pair<std::size_t, std::size_t>& key) {
                               return std::tie(b.left, b.right) < std::tie(key.first, key.second);
                             });
  if (it == blocks_.end() || it->left != left || it->right != right)
    throw Error(ErrorKind::FunctorLawViolation, "biset functor table: missing block (" + objects_[left]->label() +
                                                    "," + objects_[right]->label() + ")");
  return *it;
}

std::size_t TableBisetFunctor::dim(const GroupRef& g) const { return dims_[object_index(g)]; }

QMatrix TableBisetFunctor::apply(const Biset& u) const {
  std::size_t l = object_index(u.left());
  std::size_t r = object_index(u.right());
  const auto& blk = block(l, r);
  auto coeffs = double_burnside(u.left(), u.right()).vector_of(u);
  QMatrix m(dims_[l], dims_[r]);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) m(a, b) += coeffs[i] * blk.mats[i](a, b);
  }
  return m;
}

void TableBisetFunctor::validate() const {
  for (std::size_t g = 0; g < objects_.size(); ++g) {
    const auto& db = double_burnside(objects_[g], objects_[g]);
    if (block(g, g).mats[db.identity_index()] != QMatrix::identity(dims_[g]))
      throw Error(ErrorKind::FunctorLawViolation,
                  "biset functor table: identity biset of " + objects_[g]->label() + " does not act as I");
  }
  for (std::size_t l = 0; l < objects_.size(); ++l)
    for (std::size_t h = 0; h < objects_.size(); ++h)
      for (std::size_t g = 0; g < objects_.size(); ++g) {
        const auto& left = double_burnside(objects_[l], objects_[h]);
        const auto& right = double_burnside(objects_[h], objects_[g]);
        const auto& outer = block(l, g);
        for (std::size_t i = 0; i < left.dim(); ++i)
          for (std::size_t j = 0; j < right.dim(); ++j) {
            auto c = double_burnside_compose_basis(left, i, right, j);
            QMatrix expect(dims_[l], dims_[g]);
            for (std::size_t k = 0; k < c.size(); ++k) {
              if (c[k] == 0) continue;
              for (std::size_t a = 0; a < expect.rows(); ++a)
                for (std::size_t b = 0; b < expect.cols(); ++b) expect(a, b) += c[k] * outer.mats[k](a, b);
            }
            if (expect != block(l, h).mats[i] * block(h, g).mats[j])
              throw Error(ErrorKind::FunctorLawViolation, "biset functor table: composition law fails at " +
                                                              left.label(i) + " x " + right.label(j));
          }
      }
}

}  // namespace bisetkit
