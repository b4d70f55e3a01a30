#include "bisetkit/linalg.hpp"

#include <algorithm>
#include <cctype>

#include "bisetkit/error.hpp"

namespace bisetkit {

QMatrix to_rational(const ZMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
  return q;
}

ZMatrix to_integer(const QMatrix& m) {
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw Error(ErrorKind::InvalidArgument, "matrix entry is not an integer");
      z(i, j) = m(i, j).get_num();
    }
  return z;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto valid_int = [](const std::string& x) {
    std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i >= x.size()) return false;
    for (; i < x.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error(ErrorKind::Parse, "bad scalar '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

RrefResult rref(QMatrix m) {
  RrefResult r;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    r.pivots.push_back(c);
    ++row;
  }
  r.rank = row;
  r.echelon = std::move(m);
  return r;
}

namespace {

template <class M>
void swap_rows(M& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

template <class M>
void swap_cols(M& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i += f * row_j
void add_row(ZMatrix& a, std::size_t i, std::size_t j, const Integer& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (a(j, c) != 0) a(i, c) += f * a(j, c);
}

void add_col(ZMatrix& a, std::size_t i, std::size_t j, const Integer& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a(r, j) != 0) a(r, i) += f * a(r, j);
}

}  // namespace

SmithResult smith_normal_form(const ZMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithResult r{m, ZMatrix::identity(rows), ZMatrix::identity(cols), ZMatrix::identity(cols), {}};
  ZMatrix& a = r.s;
  auto move_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
    swap_rows(a, t, i);
    swap_rows(r.u, t, i);
    swap_cols(a, t, j);
    swap_cols(r.v, t, j);
    swap_rows(r.v_inv, t, j);
  };
  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    // Smallest nonzero entry of the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (!best || abs(a(i, j)) < abs(a(best->first, best->second)))) best = {i, j};
    if (!best) break;
    move_pivot(t, best->first, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        add_row(a, i, t, -q);
        add_row(r.u, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        add_col(a, j, t, -q);
        add_col(r.v, j, t, -q);
        add_row(r.v_inv, t, j, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
        move_pivot(t, bi, bj);
        continue;
      }
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < rows && !bad; ++i)
        for (std::size_t j = t + 1; j < cols && !bad; ++j)
          if (a(i, j) % a(t, t) != 0) bad = i;
      if (!bad) break;
      add_row(a, t, *bad, 1);
      add_row(r.u, t, *bad, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) r.u(t, j) = -r.u(t, j);
    }
  }
  for (std::size_t t = 0; t < diag; ++t) r.diagonal.push_back(a(t, t));
  return r;
}

Integer bareiss_determinant(ZMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t bareiss_rank(ZMatrix m) {
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, rank, p);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(i, j) * m(rank, c) - m(i, c) * m(rank, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

LinearSolver::LinearSolver(const QMatrix& a) : a_(a) {
  QMatrix aug(a.rows(), a.cols() + a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols() + i) = 1;
  }
  auto r = rref(std::move(aug));
  rref_ = QMatrix(a.rows(), a.cols());
  transform_ = QMatrix(a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) rref_(i, j) = r.echelon(i, j);
    for (std::size_t j = 0; j < a.rows(); ++j) transform_(i, j) = r.echelon(i, a.cols() + j);
  }
  for (auto p : r.pivots)
    if (p < a.cols()) pivots_.push_back(p);
  rank_ = pivots_.size();
}

std::optional<QVector> LinearSolver::solve(const QVector& b) const {
  if (b.size() != a_.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: right-hand side length");
  QVector tb = transform_ * b;
  for (std::size_t i = rank_; i < tb.size(); ++i)
    if (tb[i] != 0) return std::nullopt;
  QVector x(a_.cols());
  for (std::size_t i = 0; i < rank_; ++i) x[pivots_[i]] = tb[i];
  return x;
}

std::vector<QVector> LinearSolver::nullspace() const {
  std::vector<char> is_pivot(a_.cols(), 0);
  for (auto p : pivots_) is_pivot[p] = 1;
  std::vector<QVector> out;
  for (std::size_t f = 0; f < a_.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(a_.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < rank_; ++i) v[pivots_[i]] = -rref_(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<QVector> nullspace(const QMatrix& a) { return LinearSolver(a).nullspace(); }

namespace {

// Incremental echelon over Q.  The pivot of a row is its nonzero column of
// highest priority; priority(c) is c for Trailing and n-1-c for Leading.
class SparseEchelon {
 public:
  SparseEchelon(std::size_t n, PivotOrder order) : n_(n), order_(order), work_(n), has_pivot_(n, 0) {}

  void insert(const SparseRow& row) {
    for (const auto& [c, v] : row) {
      if (c >= n_) throw Error(ErrorKind::DimensionMismatch, "relation row wider than generator count");
      work_[c] += v;
    }
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t c = col_at(k);
      if (work_[c] == 0) continue;
      if (has_pivot_[c]) {
        Rational f = work_[c];
        for (const auto& [j, v] : rows_.at(c)) work_[j] -= f * v;
        continue;
      }
      Rational inv = 1 / work_[c];
      SparseRow r;
      for (std::size_t k2 = n_; k2-- > k;) {
        std::size_t j = col_at(k2);
        if (work_[j] != 0) r.emplace_back(j, work_[j] * inv);
      }
      for (std::size_t k2 = k; k2 < n_; ++k2) work_[col_at(k2)] = 0;
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows_.emplace(c, std::move(r));
      has_pivot_[c] = 1;
      return;
    }
  }

  // Clears every pivot column from every other pivot row.
  std::map<std::size_t, SparseRow> finish() {
    std::vector<std::size_t> order;
    for (const auto& [c, r] : rows_) order.push_back(c);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return priority(a) < priority(b); });
    for (std::size_t p : order) {
      auto& row = rows_.at(p);
      bool touched = false;
      for (const auto& [c, v] : row)
        if (c != p && has_pivot_[c]) touched = true;
      if (!touched) continue;
      for (const auto& [c, v] : row) work_[c] = v;
      std::vector<std::size_t> cols;
      for (const auto& [c, v] : row) cols.push_back(c);
      std::sort(cols.begin(), cols.end(), [&](auto a, auto b) { return priority(a) > priority(b); });
      for (std::size_t c : cols) {
        if (c == p || !has_pivot_[c] || work_[c] == 0) continue;
        Rational f = work_[c];
        for (const auto& [j, v] : rows_.at(c)) work_[j] -= f * v;
      }
      SparseRow r;
      for (std::size_t k = n_ - 1 - priority(p); k < n_; ++k) {
        std::size_t j = col_at(k);
        if (work_[j] != 0) r.emplace_back(j, work_[j]);
        work_[j] = 0;
      }
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      row = std::move(r);
    }
    return std::move(rows_);
  }

 private:
  std::size_t priority(std::size_t c) const { return order_ == PivotOrder::Trailing ? c : n_ - 1 - c; }
  // Column of the k-th highest priority.
  std::size_t col_at(std::size_t k) const { return order_ == PivotOrder::Trailing ? n_ - 1 - k : k; }

  std::size_t n_;
  PivotOrder order_;
  QVector work_;
  std::vector<char> has_pivot_;
  std::map<std::size_t, SparseRow> rows_;
};

// Integer lattice echelon by unimodular two-row operations.
std::vector<ZVector> lattice_basis(std::size_t n, const std::vector<SparseRow>& rows) {
  std::map<std::size_t, ZVector> piv;  // pivot = highest nonzero column
  for (const auto& sr : rows) {
    ZVector v(n);
    for (const auto& [c, q] : sr) {
      if (c >= n) throw Error(ErrorKind::DimensionMismatch, "relation row wider than generator count");
      if (q.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "integer mode needs integral relations");
      v[c] += q.get_num();
    }
    for (std::size_t c = n; c-- > 0;) {
      if (v[c] == 0) continue;
      auto it = piv.find(c);
      if (it == piv.end()) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        piv.emplace(c, std::move(v));
        break;
      }
      ZVector& w = it->second;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v[c].get_mpz_t(), w[c].get_mpz_t());
      Integer a = w[c] / g, b = v[c] / g;
      ZVector top(n), rest(n);
      for (std::size_t j = 0; j <= c; ++j) {
        top[j] = s * v[j] + t * w[j];
        rest[j] = a * v[j] - b * w[j];
      }
      w = std::move(top);
      v = std::move(rest);
    }
  }
  std::vector<ZVector> out;
  for (auto& [c, v] : piv) out.push_back(std::move(v));
  return out;
}

}  // namespace

std::vector<QVector> sparse_nullspace(std::size_t n, const std::vector<SparseRow>& rows) {
  SparseEchelon e(n, PivotOrder::Leading);
  for (const auto& r : rows) e.insert(r);
  auto pivots = e.finish();
  std::vector<QVector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (pivots.count(f)) continue;
    QVector v(n);
    v[f] = 1;
    for (const auto& [p, row] : pivots)
      for (const auto& [c, x] : row)
        if (c == f) v[p] = -x;
    out.push_back(std::move(v));
  }
  return out;
}

PresentedModule PresentedModule::from_sparse(std::size_t n, const std::vector<SparseRow>& rows, ScalarMode mode,
                                             PivotOrder order) {
  PresentedModule m;
  m.n_ = n;
  m.mode_ = mode;
  if (mode == ScalarMode::Rational) {
    SparseEchelon e(n, order);
    for (const auto& r : rows) e.insert(r);
    m.pivot_rows_ = e.finish();
    m.relation_rank_ = m.pivot_rows_.size();
    for (std::size_t c = 0; c < n; ++c)
      if (!m.pivot_rows_.count(c)) m.free_.push_back(c);
    return m;
  }
  auto basis = lattice_basis(n, rows);
  ZMatrix rel(basis.size(), n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) rel(i, j) = basis[i][j];
  auto snf = smith_normal_form(rel);
  m.v_ = std::move(snf.v);
  m.v_inv_ = std::move(snf.v_inv);
  m.diag_ = std::move(snf.diagonal);
  for (const auto& d : m.diag_) {
    if (d != 0) ++m.relation_rank_;
    if (d > 1) m.torsion_.push_back(d);
  }
  for (std::size_t c = m.relation_rank_; c < n; ++c) m.free_.push_back(c);
  return m;
}

PresentedModule PresentedModule::from_matrix(const QMatrix& relations, ScalarMode mode, PivotOrder order) {
  std::vector<SparseRow> rows(relations.rows());
  for (std::size_t i = 0; i < relations.rows(); ++i)
    for (std::size_t j = 0; j < relations.cols(); ++j)
      if (relations(i, j) != 0) rows[i].emplace_back(j, relations(i, j));
  return from_sparse(relations.cols(), rows, mode, order);
}

QVector PresentedModule::reduce(const QVector& v) const {
  if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "reduce: vector length");
  if (mode_ == ScalarMode::Rational) {
    QVector w = v;
    for (const auto& [p, row] : pivot_rows_) {
      if (w[p] == 0) continue;
      Rational f = w[p];
      for (const auto& [j, x] : row) w[j] -= f * x;
    }
    return w;
  }
  ZVector z(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (v[i].get_den() != 1) throw Error(ErrorKind::InvalidArgument, "integer mode needs integral vectors");
    z[i] = v[i].get_num();
  }
  // w = z V, reduce w_i modulo d_i, map back through V^-1.
  ZVector w(n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i)
      if (z[i] != 0) w[j] += z[i] * v_(i, j);
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (diag_[i] == 0) continue;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), w[i].get_mpz_t(), diag_[i].get_mpz_t());
    w[i] = r;
  }
  QVector out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Integer acc = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (w[i] != 0) acc += w[i] * v_inv_(i, j);
    out[j] = acc;
  }
  return out;
}

QVector PresentedModule::coords_of_reduced(const QVector& reduced) const {
  if (mode_ == ScalarMode::Rational) {
    QVector c;
    c.reserve(free_.size());
    for (auto j : free_) c.push_back(reduced[j]);
    return c;
  }
  // Free coordinates in the Smith basis.
  QVector c;
  for (auto j : free_) {
    Integer acc = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (reduced[i] != 0) acc += reduced[i].get_num() * v_(i, j);
    c.push_back(acc);
  }
  return c;
}

QVector PresentedModule::coords(const QVector& v) const { return coords_of_reduced(reduce(v)); }

}  // namespace bisetkit
