#include "bisetkit/adjunction.hpp"

#include <map>

#include "bisetkit/error.hpp"
#include "bisetkit/group_algorithms.hpp"

namespace bisetkit {

namespace {

struct Shape {
  std::size_t rows;
  std::size_t cols;
};

// Linear system in the entries of a family of matrices.
class FamilySystem {
 public:
  explicit FamilySystem(std::vector<Shape> shapes) : shapes_(std::move(shapes)) {
    for (const auto& s : shapes_) {
      offsets_.push_back(n_);
      n_ += s.rows * s.cols;
    }
  }

  // Y_a m1 - m2 Y_b = 0.
  void add(std::size_t a, const QMatrix& m1, const QMatrix& m2, std::size_t b) {
    const auto& sa = shapes_[a];
    const auto& sb = shapes_[b];
    for (std::size_t r = 0; r < sa.rows; ++r)
      for (std::size_t c = 0; c < sb.cols; ++c) {
        std::map<std::size_t, Rational> acc;
        for (std::size_t k = 0; k < sa.cols; ++k)
          if (m1(k, c) != 0) acc[var(a, r, k)] += m1(k, c);
        for (std::size_t k = 0; k < sb.rows; ++k)
          if (m2(r, k) != 0) acc[var(b, k, c)] -= m2(r, k);
        SparseRow row;
        for (const auto& [col, v] : acc)
          if (v != 0) row.emplace_back(col, v);
        if (!row.empty()) rows_.push_back(std::move(row));
      }
  }

  std::vector<Transformation> solutions() const {
    std::vector<Transformation> out;
    for (const auto& v : sparse_nullspace(n_, rows_)) out.push_back(unpack(v));
    return out;
  }

 private:
  std::size_t var(std::size_t obj, std::size_t r, std::size_t c) const {
    return offsets_[obj] + r * shapes_[obj].cols + c;
  }

  Transformation unpack(const QVector& v) const {
    Transformation t;
    for (std::size_t o = 0; o < shapes_.size(); ++o) {
      QMatrix m(shapes_[o].rows, shapes_[o].cols);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = v[var(o, r, c)];
      t.mats.push_back(std::move(m));
    }
    return t;
  }

  std::vector<Shape> shapes_;
  std::vector<std::size_t> offsets_;
  std::size_t n_ = 0;
  std::vector<SparseRow> rows_;
};

std::size_t position(const std::vector<GroupRef>& objects, const GroupRef& g) {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == g) return i;
  throw Error(ErrorKind::UniverseOverflow, "adjunction: " + g->label() + " is not an object");
}

template <class Visit>
void for_each_hom_class(const std::vector<GroupRef>& objects, Visit visit) {
  for (std::size_t a = 0; a < objects.size(); ++a)
    for (std::size_t b = 0; b < objects.size(); ++b)
      for (const auto& f : hom_classes(objects[a], objects[b])) visit(a, b, f);
}

FamilySystem restriction_system(const RestrictionFunctor& p, const BisetFunctor& b,
                                const std::vector<GroupRef>& objects) {
  std::vector<Shape> shapes;
  for (const auto& g : objects) shapes.push_back({b.dim(g), p.dim(g)});
  FamilySystem sys(shapes);
  for_each_hom_class(objects, [&](std::size_t g, std::size_t h, const Hom& f) {
    sys.add(g, p.apply(f), b.apply(elementary_r(f)), h);
  });
  return sys;
}

FamilySystem biset_system(const ExtensionFunctor& e, const BisetFunctor& b, const std::vector<GroupRef>& objects) {
  std::vector<Shape> shapes;
  for (const auto& g : objects) shapes.push_back({b.dim(g), e.dim(g)});
  FamilySystem sys(shapes);
  for_each_hom_class(objects, [&](std::size_t g, std::size_t h, const Hom& f) {
    Biset t = elementary_t(f);
    Biset r = elementary_r(f);
    sys.add(h, e.apply(t), b.apply(t), g);
    sys.add(g, e.apply(r), b.apply(r), h);
  });
  return sys;
}

}  // namespace

std::vector<Transformation> restriction_morphism_basis(const RestrictionFunctor& p, const BisetFunctor& b,
                                                       const std::vector<GroupRef>& objects) {
  return restriction_system(p, b, objects).solutions();
}

std::vector<Transformation> biset_morphism_basis(const ExtensionFunctor& e, const BisetFunctor& b,
                                                 const std::vector<GroupRef>& objects) {
  return biset_system(e, b, objects).solutions();
}

bool is_restriction_morphism(const RestrictionFunctor& p, const BisetFunctor& b,
                             const std::vector<GroupRef>& objects, const Transformation& xi) {
  bool ok = true;
  for_each_hom_class(objects, [&](std::size_t g, std::size_t h, const Hom& f) {
    ok = ok && xi.mats[g] * p.apply(f) == b.apply(elementary_r(f)) * xi.mats[h];
  });
  return ok;
}

bool is_biset_morphism(const ExtensionFunctor& e, const BisetFunctor& b, const std::vector<GroupRef>& objects,
                       const Transformation& lambda) {
  bool ok = true;
  for_each_hom_class(objects, [&](std::size_t g, std::size_t h, const Hom& f) {
    if (!ok) return;
    Biset t = elementary_t(f);
    Biset r = elementary_r(f);
    ok = lambda.mats[h] * e.apply(t) == b.apply(t) * lambda.mats[g] &&
         lambda.mats[g] * e.apply(r) == b.apply(r) * lambda.mats[h];
  });
  return ok;
}

Transformation adjunction_lambda(const ExtensionFunctor& e, const BisetFunctor& b,
                                 const std::vector<GroupRef>& objects, const Transformation& xi) {
  Transformation out;
  for (const auto& g : objects) {
    const auto& s = e.space(g);
    QMatrix m(b.dim(g), s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i) {
      auto t = s.free_term(i);
      std::size_t k = position(objects, t.map.source);
      m.set_col(i, b.apply(elementary_t(t.map)) * (xi.mats[k] * t.kappa));
    }
    out.mats.push_back(std::move(m));
  }
  return out;
}

Transformation adjunction_xi(const ExtensionFunctor& e, const std::vector<GroupRef>& objects,
                             const Transformation& lambda) {
  Transformation out;
  for (std::size_t i = 0; i < objects.size(); ++i)
    out.mats.push_back(lambda.mats[i] * e.space(objects[i]).delta_matrix());
  return out;
}

Transformation random_combination(const std::vector<Transformation>& basis, std::mt19937_64& rng) {
  if (basis.empty()) return {};
  Transformation out = basis.front();
  for (auto& m : out.mats) m = QMatrix(m.rows(), m.cols());
  for (const auto& t : basis) {
    Rational c = static_cast<long>(rng() % 7) - 3;
    if (c == 0) continue;
    for (std::size_t o = 0; o < t.mats.size(); ++o)
      for (std::size_t r = 0; r < t.mats[o].rows(); ++r)
        for (std::size_t k = 0; k < t.mats[o].cols(); ++k) out.mats[o](r, k) += c * t.mats[o](r, k);
  }
  return out;
}

}  // namespace bisetkit
