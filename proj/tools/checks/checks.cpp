#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "bisetkit/adjunction.hpp"
#include "bisetkit/burnside.hpp"
#include "bisetkit/error.hpp"
#include "bisetkit/group_algorithms.hpp"
#include "bisetkit/io.hpp"
#include "bisetkit/library.hpp"
#include "bisetkit/span.hpp"
#include "oracles.hpp"

namespace bisetkit::checks {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = describe();
  }

  std::size_t checks() const { return checks_; }

  Result result(const std::string& summary = "") const {
    Result r{name_, failures_ == 0, "", 0};
    std::ostringstream os;
    if (failures_)
      os << first_ << " (" << failures_ << " of " << checks_ << " checks failed)";
    else
      os << (summary.empty() ? "" : summary + ", ") << checks_ << " checks";
    r.detail = os.str();
    return r;
  }

 private:
  std::string name_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

Result timed(const std::string& name, const std::function<Result()>& body) {
  auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = Result{name, false, std::string("error: ") + e.what(), 0};
  }
  r.name = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

QVector unit(std::size_t n, std::size_t j) {
  QVector v(n);
  v[j] = 1;
  return v;
}

std::string show(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::vector<GroupRef> builtins(std::initializer_list<const char*> names) {
  std::vector<GroupRef> out;
  for (const char* n : names) out.push_back(builtin_group(n));
  return out;
}

std::string pair_label(const GroupRef& a, const GroupRef& b) { return "(" + a->label() + "," + b->label() + ")"; }

// Orbit of x under (h, k) . x = h x f(k).
std::vector<Point> double_coset(const Biset& u, const Hom& f, Point x) {
  std::vector<char> seen(u.size(), 0);
  std::vector<Point> out{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elt h = 0; h < u.left()->order(); ++h) {
      Point y = u.lmul(h, out[i]);
      if (!seen[y]) seen[y] = 1, out.push_back(y);
    }
    for (Elt k = 0; k < f.source->order(); ++k) {
      Point y = u.rmul(out[i], f(k));
      if (!seen[y]) seen[y] = 1, out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<GroupRef> members_up_to(const GroupUniverse& u, std::size_t order) {
  std::vector<GroupRef> out;
  for (const auto& m : u.members())
    if (m->order() <= order) out.push_back(m);
  return out;
}

Biset random_biset(Rng& rng, const GroupRef& h, const GroupRef& g, std::size_t pieces) {
  const auto& db = double_burnside(h, g);
  Biset u = db.basis_biset(pick(rng, db.dim()));
  std::size_t extra = pick(rng, pieces);
  for (std::size_t i = 0; i < extra; ++i) u = disjoint_union(u, db.basis_biset(pick(rng, db.dim())));
  return u;
}

Result group_library() {
  return timed("group library", [] {
    Tally t("group library");
    for (const auto& name : builtin_group_names()) {
      auto g = builtin_group(name);
      static const std::map<std::string, std::size_t> named{
          {"S3", 6},      {"V4", 4},       {"S4", 24},        {"A4", 12},    {"Q8", 8},
          {"Dic3", 12},   {"C2xC4", 8},    {"C2xC2xC2", 8},   {"C3xC3", 9},  {"C2xC6", 12}};
      std::size_t expect = 0;
      if (auto it = named.find(name); it != named.end())
        expect = it->second;
      else if (name[0] == 'C')
        expect = std::stoul(name.substr(1));
      else
        expect = 2 * std::stoul(name.substr(1));
      t.expect(g->order() == expect, [&] { return name + " has order " + std::to_string(g->order()); });
      bool valid = true;
      try {
        Group::from_cayley(g->cayley());
      } catch (const Error&) {
        valid = false;
      }
      t.expect(valid, [&] { return name + " fails the group axioms"; });
    }
    // Members of the largest builtin universe are told apart by invariants
    // computed without the isomorphism search.
    auto u = builtin_universe("upto12");
    std::set<std::tuple<std::vector<std::uint32_t>, bool, std::size_t>> seen;
    for (const auto& m : u->members()) {
      auto key = std::make_tuple(order_profile(m), m->is_abelian(), oracle::subgroups_by_seeds(m).size());
      t.expect(seen.insert(key).second, [&] { return "universe member " + m->label() + " duplicates an invariant"; });
    }
    return t.result(std::to_string(builtin_group_names().size()) + " builtins");
  });
}

Result subgroup_enumeration(const std::vector<GroupRef>& groups) {
  return timed("subgroup enumeration", [&] {
    Tally t("subgroup enumeration");
    for (const auto& g : groups) {
      std::set<std::vector<Elt>> found;
      for (const auto& s : subgroups(g)) found.insert(s.elems);
      auto oracle_set = oracle::subgroups_by_seeds(g);
      t.expect(found == oracle_set, [&] { return g->label() + ": subgroup lattice differs from oracle"; });
      t.expect(subgroup_classes(g).size() == oracle::subgroup_class_count(g),
               [&] { return g->label() + ": subgroup class count differs from oracle"; });
      std::set<std::vector<Elt>> normal;
      for (const auto& s : oracle_set) {
        bool ok = true;
        for (Elt x = 0; x < g->order() && ok; ++x)
          for (Elt y : s) ok = ok && std::binary_search(s.begin(), s.end(), g->conj(x, y));
        if (ok) normal.insert(s);
      }
      std::set<std::vector<Elt>> got;
      for (const auto& s : normal_subgroups(g)) got.insert(s.elems);
      t.expect(got == normal, [&] { return g->label() + ": normal subgroups differ from oracle"; });
    }
    return t.result(std::to_string(groups.size()) + " groups");
  });
}

Result hom_enumeration(const std::vector<GroupRef>& groups) {
  return timed("hom enumeration", [&] {
    Tally t("hom enumeration");
    for (const auto& k : groups)
      for (const auto& g : groups) {
        double space = std::pow(double(g->order()), double(k->order()));
        if (space > 2e5) continue;
        auto homs = all_homs(k, g);
        t.expect(homs.size() == oracle::hom_count_brute(k, g),
                 [&] { return pair_label(k, g) + ": hom count differs from brute force"; });
        std::set<std::vector<Elt>> reps;
        for (const auto& f : homs) reps.insert(hom_class_of(f).rep.map);
        std::set<std::vector<Elt>> listed;
        for (const auto& f : hom_classes(k, g)) listed.insert(f.map);
        t.expect(reps == listed, [&] { return pair_label(k, g) + ": hom classes differ"; });
      }
    return t.result();
  });
}

Result biset_category_laws(const std::vector<GroupRef>& groups, std::size_t literal, std::uint64_t seed) {
  return timed("biset category laws", [&] {
    Tally t("biset category laws");
    const std::size_t n = groups.size();
    using Sparse = std::vector<std::pair<std::uint32_t, std::int64_t>>;
    std::vector<const DoubleBurnside*> db(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) db[a * n + b] = &double_burnside(groups[a], groups[b]);
    auto B = [&](std::size_t a, std::size_t b) -> const DoubleBurnside& { return *db[a * n + b]; };

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t i = 0; i < B(a, b).dim(); ++i) {
          const Biset& u = B(a, b).basis_biset(i);
          t.expect(biset_iso(compose(identity_biset(groups[a]), u), u).has_value(),
                   [&] { return "Id o U != U for " + B(a, b).label(i); });
          t.expect(biset_iso(compose(u, identity_biset(groups[b])), u).has_value(),
                   [&] { return "U o Id != U for " + B(a, b).label(i); });
        }

    // Structure constants from explicit compositions of every composable pair.
    std::vector<std::vector<Sparse>> table(n * n * n);
    std::size_t pairs = 0;
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g) {
          auto& tab = table[(l * n + h) * n + g];
          const auto& left = B(l, h);
          const auto& right = B(h, g);
          tab.resize(left.dim() * right.dim());
          for (std::size_t i = 0; i < left.dim(); ++i)
            for (std::size_t j = 0; j < right.dim(); ++j) {
              const auto& c = double_burnside_compose_basis(left, i, right, j);
              Sparse s;
              for (std::size_t k = 0; k < c.size(); ++k)
                if (c[k] != 0) {
                  t.expect(c[k] > 0 && c[k].get_den() == 1, [&] { return "non-integral composition count"; });
                  s.emplace_back(static_cast<std::uint32_t>(k), c[k].get_num().get_si());
                }
              tab[i * right.dim() + j] = std::move(s);
              ++pairs;
            }
        }
    auto constants = [&](std::size_t l, std::size_t h, std::size_t g, std::size_t i, std::size_t j) -> const Sparse& {
      return table[(l * n + h) * n + g][i * B(h, g).dim() + j];
    };

    std::size_t triples = 0;
    std::vector<std::int64_t> lhs, rhs;
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g)
          for (std::size_t k = 0; k < n; ++k) {
            std::size_t dim = B(l, k).dim();
            for (std::size_t i = 0; i < B(l, h).dim(); ++i)
              for (std::size_t j = 0; j < B(h, g).dim(); ++j)
                for (std::size_t m = 0; m < B(g, k).dim(); ++m) {
                  lhs.assign(dim, 0);
                  rhs.assign(dim, 0);
                  for (const auto& [x, cx] : constants(l, h, g, i, j))
                    for (const auto& [y, cy] : constants(l, g, k, x, m)) lhs[y] += cx * cy;
                  for (const auto& [x, cx] : constants(h, g, k, j, m))
                    for (const auto& [y, cy] : constants(l, h, k, i, x)) rhs[y] += cx * cy;
                  ++triples;
                  t.expect(lhs == rhs, [&] {
                    return "(W o V) o U != W o (V o U) for " + B(l, h).label(i) + ", " + B(h, g).label(j) + ", " +
                           B(g, k).label(m);
                  });
                }
          }

    Rng rng(seed);
    for (std::size_t r = 0; r < literal; ++r) {
      std::size_t l = pick(rng, n), h = pick(rng, n), g = pick(rng, n), k = pick(rng, n);
      Biset w = random_biset(rng, groups[l], groups[h], 1);
      Biset v = random_biset(rng, groups[h], groups[g], 1);
      Biset u = random_biset(rng, groups[g], groups[k], 1);
      t.expect(biset_iso(compose(compose(w, v), u), compose(w, compose(v, u))).has_value(),
               [&] { return "no isomorphism (W o V) o U -> W o (V o U) over " + groups[l]->label() + "," +
                            groups[h]->label() + "," + groups[g]->label() + "," + groups[k]->label(); });
    }
    std::ostringstream os;
    os << pairs << " pairs, " << triples << " triples, " << literal << " literal triples";
    return t.result(os.str());
  });
}

Result decomposition(const std::vector<GroupRef>& groups, std::size_t instances, std::uint64_t seed) {
  return timed("decomposition", [&] {
    Tally t("decomposition");
    Rng rng(seed);
    for (std::size_t r = 0; r < instances; ++r) {
      auto h = groups[pick(rng, groups.size())], g = groups[pick(rng, groups.size())],
           k = groups[pick(rng, groups.size())];
      Biset u = random_biset(rng, h, g);
      auto homs = all_homs(k, g);
      const Hom& f = homs[pick(rng, homs.size())];
      bool ok = true;
      try {
        decomposition_check(u, f);
      } catch (const Error&) {
        ok = false;
      }
      t.expect(ok, [&] { return "no decomposition isomorphism for " + pair_label(h, g) + " with K = " + k->label(); });
    }
    return t.result(std::to_string(instances) + " instances");
  });
}

Result span_compositions(const std::vector<GroupRef>& groups, std::size_t instances, std::uint64_t seed) {
  return timed("span composition", [&] {
    Tally t("span composition");
    Rng rng(seed);
    for (std::size_t r = 0; r < instances; ++r) {
      auto l = groups[pick(rng, groups.size())], h = groups[pick(rng, groups.size())],
           g = groups[pick(rng, groups.size())], k = groups[pick(rng, groups.size())];
      Biset v = random_biset(rng, l, h, 1);
      Biset u = random_biset(rng, h, g, 1);
      auto homs = all_homs(k, g);
      const Hom& f = homs[pick(rng, homs.size())];
      Point x = static_cast<Point>(pick(rng, u.size())), y = static_cast<Point>(pick(rng, v.size()));
      bool ok = true;
      try {
        compose_spans(v, u, f, y, x);
        Elt h0 = static_cast<Elt>(pick(rng, h->order())), k0 = static_cast<Elt>(pick(rng, k->order()));
        representative_contraction(u, f, x, h0, k0);
      } catch (const Error&) {
        ok = false;
      }
      t.expect(ok, [&] { return "contraction failed over " + l->label() + "," + h->label() + "," + g->label(); });
    }
    return t.result(std::to_string(instances) + " instances");
  });
}

Result burnside_rings(const std::vector<GroupRef>& groups) {
  return timed("burnside rings", [&] {
    Tally t("burnside rings");
    for (const auto& g : groups) {
      const auto& r = burnside_ring(g);
      std::size_t d = r.dim();
      // Marks: fixed points of each subgroup representative on each basis G-set.
      std::vector<std::vector<Rational>> marks(d, std::vector<Rational>(d));
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t i = 0; i < d; ++i) {
          const GSet& x = r.gset(i);
          std::size_t fixed = 0;
          for (Point p = 0; p < x.size(); ++p) {
            bool all = true;
            for (Elt y : r.subgroup(s).elems) all = all && x.act(y, p) == p;
            fixed += all;
          }
          marks[s][i] = fixed;
        }
      auto mark = [&](std::size_t s, const QVector& v) {
        Rational m = 0;
        for (std::size_t i = 0; i < d; ++i) m += v[i] * marks[s][i];
        return m;
      };
      for (std::size_t i = 0; i < d; ++i) {
        t.expect(r.multiply(r.one(), r.basis(i)) == r.basis(i), [&] { return g->label() + ": unit law"; });
        for (std::size_t j = 0; j < d; ++j) {
          auto ij = r.product_of_basis(i, j);
          t.expect(ij == r.product_of_basis(j, i), [&] { return g->label() + ": not commutative"; });
          for (std::size_t s = 0; s < d; ++s)
            t.expect(mark(s, ij) == marks[s][i] * marks[s][j],
                     [&] { return g->label() + ": marks are not multiplicative on " + r.label(i) + r.label(j); });
          for (std::size_t k = 0; k < d; ++k)
            t.expect(r.multiply(ij, r.basis(k)) == r.multiply(r.basis(i), r.product_of_basis(j, k)),
                     [&] { return g->label() + ": not associative"; });
        }
      }
    }
    return t.result(std::to_string(groups.size()) + " groups");
  });
}

Result bigger_burnside(const std::vector<GroupRef>& groups, const UniverseRef& universe) {
  return timed("bigger burnside", [&] {
    Tally t("bigger burnside");
    std::size_t outside = 0;
    for (const auto& g : groups) {
      BiggerBurnside b(g, universe);
      std::size_t d = b.dim();
      // Products whose pullbacks leave the universe are not representable.
      std::vector<std::vector<std::optional<QVector>>> prod(d, std::vector<std::optional<QVector>>(d));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          try {
            prod[i][j] = b.multiply_basis(i, j);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::UniverseOverflow) throw;
            ++outside;
          }
        }
      for (std::size_t i = 0; i < d; ++i) {
        t.expect(b.multiply(b.one(), unit(d, i)) == unit(d, i), [&] { return g->label() + ": unit law"; });
        for (std::size_t j = 0; j < d; ++j) {
          if (!prod[i][j]) continue;
          t.expect(prod[j][i] && *prod[i][j] == *prod[j][i], [&] { return g->label() + ": not commutative"; });
          for (std::size_t k = 0; k < d; ++k) {
            if (!prod[j][k]) continue;
            std::optional<QVector> lhs, rhs;
            try {
              lhs = b.multiply(*prod[i][j], unit(d, k));
              rhs = b.multiply(unit(d, i), *prod[j][k]);
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::UniverseOverflow) throw;
              continue;
            }
            t.expect(*lhs == *rhs,
                     [&] { return g->label() + ": not associative at " + b.label(i) + b.label(j) + b.label(k); });
          }
        }
      }
    }
    return t.result(std::to_string(outside) + " products leave the universe");
  });
}

Result deflation(const std::vector<std::string>& names, const UniverseRef& universe) {
  return timed("tilde deflation", [&] {
    Tally t("tilde deflation");
    std::string ranks;
    for (const auto& name : names) {
      auto g = universe->require(builtin_group(name));
      const auto& m = universe->member(g.index);
      BiggerBurnside b(m, universe);
      auto td = tilde_deflation(b);
      std::size_t expect = oracle::subgroup_class_count(m);
      ranks += (ranks.empty() ? "" : " ") + name + "=" + std::to_string(td.rank());
      t.expect(td.subquotient_closed, [&] { return name + ": universe is not subquotient-closed"; });
      t.expect(td.rank() == expect, [&] {
        return name + ": rank " + std::to_string(td.rank()) + ", oracle " + std::to_string(expect);
      });
      t.expect(rref(td.projection).rank == expect, [&] { return name + ": projection is not onto"; });
      // The projection of e_i e_j only needs the images of the pullback
      // terms, so it is evaluated even when a pullback is not a member.
      const auto& r = burnside_ring(m);
      const auto& classes = subgroup_classes(m);
      for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) {
          QVector projected(r.dim());
          for (const auto& term : b.product_terms(i, j)) projected[classes.classify(image(term))] += 1;
          t.expect(projected == r.multiply(td.projection * unit(b.dim(), i), td.projection * unit(b.dim(), j)),
                   [&] { return name + ": projection not multiplicative on " + b.label(i) + b.label(j); });
          std::optional<QVector> inside;
          try {
            inside = b.multiply_basis(i, j);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::UniverseOverflow) throw;
          }
          if (inside)
            t.expect(td.projection * *inside == projected,
                     [&] { return name + ": product disagrees with its pullback terms"; });
        }
    }
    return t.result(ranks);
  });
}

Result extension_ranks(const std::vector<GroupRef>& groups, ScalarMode mode) {
  return timed("extension ranks", [&] {
    Tally t("extension ranks");
    auto small = builtin_universe("upto6");
    auto large = builtin_universe("upto12");
    auto c2 = builtin_group("C2");
    std::string out;
    for (const auto& g : groups) {
      ExtensionSpace constant(std::make_shared<ConstantFunctor>(), small, g, mode);
      std::size_t expect = oracle::subgroup_class_count(g);
      t.expect(constant.rank() == expect && constant.closed() && constant.torsion().empty(),
               [&] { return g->label() + ": constant rank " + std::to_string(constant.rank()); });
      ExtensionSpace signs(std::make_shared<SignFunctor>(), large, g, mode);
      std::size_t expect2 = oracle::subgroup_class_count(product_of(g, c2).group);
      t.expect(signs.rank() == expect2 && signs.closed() && signs.torsion().empty(),
               [&] { return g->label() + ": sign rank " + std::to_string(signs.rank()); });
      out += (out.empty() ? "" : " ") + g->label() + "=" + std::to_string(constant.rank()) + "/" +
             std::to_string(signs.rank());
    }
    return t.result(out);
  });
}

Result shipped_functor(const std::string& path, const std::string& builtin) {
  return timed("shipped functor " + builtin, [&] {
    Tally t("shipped functor");
    auto table = io::restriction_functor_from_json(io::load_file(path));
    RestrictionFunctorRef ref;
    if (builtin == "signs")
      ref = std::make_shared<SignFunctor>();
    else
      ref = std::make_shared<ConstantFunctor>();
    const auto& u = *table->universe();
    for (const auto& a : u.members()) {
      t.expect(table->dim(a) == ref->dim(a), [&] { return a->label() + ": dimension differs"; });
      for (const auto& b : u.members())
        for (const auto& f : hom_classes(a, b))
          t.expect(table->apply(f) == ref->apply(f), [&] { return pair_label(a, b) + ": matrix differs"; });
    }
    return t.result(std::to_string(u.size()) + " groups");
  });
}

Result extension_identities(const ExtensionFunctor& e, const std::vector<GroupRef>& objects, std::uint64_t seed) {
  return timed("identities " + e.name(), [&] {
    Tally t("identities");
    const auto& p = *e.functor();
    Rng rng(seed);
    for (const auto& g : objects)
      t.expect(e.apply(identity_biset(g)) == QMatrix::identity(e.dim(g)), [&] { return g->label() + ": E(Id) != I"; });

    for (const auto& g : objects)
      for (const auto& h : objects)
        for (const auto& f : hom_classes(g, h)) {
          const auto& sg = e.space(g);
          const auto& sh = e.space(h);
          QMatrix tf = e.apply(elementary_t(f));
          for (std::size_t j = 0; j < p.dim(g); ++j) {
            auto kappa = unit(p.dim(g), j);
            t.expect(tf * sg.delta(kappa) == sh.coords({{f, kappa}}),
                     [&] { return pair_label(g, h) + ": t(f)[id, k] != [f, k]"; });
          }
          QMatrix rf = e.apply(elementary_r(f));
          for (std::size_t j = 0; j < p.dim(h); ++j) {
            auto eta = unit(p.dim(h), j);
            t.expect(rf * sh.delta(eta) == sg.delta(p.apply(f) * eta),
                     [&] { return pair_label(g, h) + ": r(f)[id, n] != [id, P(f) n]"; });
          }
        }

    for (const auto& h : objects)
      for (const auto& g : objects) {
        const auto& db = double_burnside(h, g);
        std::vector<QMatrix> mats;
        for (std::size_t i = 0; i < db.dim(); ++i) mats.push_back(e.apply(db.basis_biset(i)));
        for (std::size_t i = 0; i < db.dim(); ++i) {
          const Biset& u = db.basis_biset(i);
          for (std::size_t j = i; j < db.dim(); ++j)
            t.expect(e.apply(disjoint_union(u, db.basis_biset(j))) == mats[i] + mats[j],
                     [&] { return "not additive on " + db.label(i) + " + " + db.label(j); });
          std::vector<Point> perm(u.size());
          std::iota(perm.begin(), perm.end(), 0);
          std::shuffle(perm.begin(), perm.end(), rng);
          t.expect(e.apply(relabel(u, perm)) == mats[i], [&] { return "not iso-invariant on " + db.label(i); });

          const auto& sg = e.space(g);
          const auto& sh = e.space(h);
          for (std::size_t c = 0; c < sg.rank(); ++c) {
            auto term = sg.free_term(c);
            auto reps = double_coset_reps(u, term.map);
            std::vector<std::vector<Point>> orbits;
            double combos = 1;
            for (Point x : reps) {
              orbits.push_back(double_coset(u, term.map, x));
              combos *= double(orbits.back().size());
            }
            auto base = sh.coords(e.act_on_term(u, term, &reps));
            auto check = [&](const std::vector<Point>& choice) {
              t.expect(sh.coords(e.act_on_term(u, term, &choice)) == base,
                       [&] { return "representative choice changes " + db.label(i) + " on " + sg.free_label(c); });
            };
            std::vector<Point> choice(reps.size());
            if (combos <= 64) {
              std::vector<std::size_t> idx(reps.size(), 0);
              for (;;) {
                for (std::size_t a = 0; a < idx.size(); ++a) choice[a] = orbits[a][idx[a]];
                check(choice);
                std::size_t a = 0;
                while (a < idx.size() && ++idx[a] == orbits[a].size()) idx[a++] = 0;
                if (a == idx.size()) break;
              }
            } else {
              for (int r = 0; r < 20; ++r) {
                for (std::size_t a = 0; a < orbits.size(); ++a) choice[a] = orbits[a][pick(rng, orbits[a].size())];
                check(choice);
              }
            }
          }
        }
      }
    return t.result(std::to_string(objects.size()) + " groups");
  });
}

Result functoriality(const ExtensionFunctor& e, const std::vector<GroupRef>& objects, bool elementary,
                     std::size_t random_pairs, std::uint64_t seed) {
  return timed("functoriality " + e.name(), [&] {
    Tally t("functoriality");
    std::size_t pairs = 0;
    if (elementary) {
      std::vector<Biset> gens;
      for (const auto& g : objects) gens.push_back(identity_biset(g));
      for (const auto& a : objects)
        for (const auto& b : objects)
          for (const auto& f : hom_classes(a, b)) {
            gens.push_back(elementary_t(f));
            gens.push_back(elementary_r(f));
          }
      std::vector<QMatrix> mats;
      for (const auto& u : gens) mats.push_back(e.apply(u));
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
          if (gens[i].right() != gens[j].left()) continue;
          ++pairs;
          t.expect(e.apply(compose(gens[i], gens[j])) == mats[i] * mats[j], [&] {
            return "E(V o U) != E(V) E(U) for elementary pair over " + gens[i].left()->label() + "," +
                   gens[i].right()->label() + "," + gens[j].right()->label();
          });
        }
    }
    Rng rng(seed);
    for (std::size_t r = 0; r < random_pairs; ++r) {
      auto l = objects[pick(rng, objects.size())], h = objects[pick(rng, objects.size())],
           g = objects[pick(rng, objects.size())];
      Biset v = random_biset(rng, l, h);
      Biset u = random_biset(rng, h, g);
      t.expect(e.apply(compose(v, u)) == e.apply(v) * e.apply(u),
               [&] { return "E(V o U) != E(V) E(U) for random pair over " + l->label() + "," + h->label() + "," +
                            g->label(); });
    }
    return t.result(std::to_string(pairs) + " elementary pairs, " + std::to_string(random_pairs) + " random pairs");
  });
}

Result adjunction(std::size_t instances, std::uint64_t seed) {
  return timed("adjunction", [&] {
    Tally t("adjunction");
    auto universe = universe_of({"C1", "C2", "C3", "C4", "V4", "S3"});
    auto objects = universe->members();
    auto p = std::make_shared<ConstantFunctor>();
    ExtensionFunctor e(p, universe);
    ExtensionFunctor signs(std::make_shared<SignFunctor>(), builtin_universe("upto12"));

    auto ext_table = std::make_shared<TableBisetFunctor>(TableBisetFunctor::tabulate(e, objects, "constant_ext"));
    auto sign_table = std::make_shared<TableBisetFunctor>(TableBisetFunctor::tabulate(signs, objects, "signs_ext"));
    ext_table->validate();
    sign_table->validate();
    auto burnside = std::make_shared<BurnsideFunctor>();
    std::vector<BisetFunctorRef> targets{
        burnside, ext_table, sign_table,
        std::make_shared<DirectSumFunctor>(std::vector<BisetFunctorRef>{burnside, sign_table, ext_table})};

    Transformation delta;
    for (const auto& g : objects) delta.mats.push_back(e.space(g).delta_matrix());
    auto id = adjunction_lambda(e, *ext_table, objects, delta);
    for (std::size_t i = 0; i < objects.size(); ++i)
      t.expect(id.mats[i] == QMatrix::identity(e.dim(objects[i])),
               [&] { return "Lambda(delta) is not the identity at " + objects[i]->label(); });

    std::vector<std::vector<Transformation>> xis, lambdas;
    for (const auto& b : targets) {
      xis.push_back(restriction_morphism_basis(*p, *b, objects));
      lambdas.push_back(biset_morphism_basis(e, *b, objects));
      t.expect(xis.back().size() == lambdas.back().size() && !xis.back().empty(),
               [&] { return b->name() + ": morphism spaces differ in dimension"; });
    }
    Rng rng(seed);
    for (std::size_t r = 0; r < instances; ++r) {
      std::size_t w = r % targets.size();
      const auto& b = *targets[w];
      auto xi = random_combination(xis[w], rng);
      t.expect(is_restriction_morphism(*p, b, objects, xi), [&] { return b.name() + ": xi not natural"; });
      auto lambda = adjunction_lambda(e, b, objects, xi);
      t.expect(is_biset_morphism(e, b, objects, lambda), [&] { return b.name() + ": Lambda(xi) not natural"; });
      t.expect(adjunction_xi(e, objects, lambda) == xi, [&] { return b.name() + ": Xi(Lambda(xi)) != xi"; });
      auto mu = random_combination(lambdas[w], rng);
      t.expect(is_biset_morphism(e, b, objects, mu), [&] { return b.name() + ": lambda not natural"; });
      t.expect(adjunction_lambda(e, b, objects, adjunction_xi(e, objects, mu)) == mu,
               [&] { return b.name() + ": Lambda(Xi(lambda)) != lambda"; });
    }
    return t.result(std::to_string(instances) + " instances");
  });
}

Result burnside_correspondence(const std::vector<GroupRef>& objects, const UniverseRef& universe) {
  return timed("burnside correspondence", [&] {
    Tally t("burnside correspondence");
    ExtensionFunctor e(std::make_shared<ConstantFunctor>(), universe);
    BurnsideFunctor omega;
    std::map<std::uint64_t, QMatrix> T;
    for (const auto& g : objects) {
      const auto& s = e.space(g);
      const auto& r = burnside_ring(g);
      QMatrix m(r.dim(), s.rank());
      for (std::size_t i = 0; i < s.rank(); ++i) m.set_col(i, r.vector_of(coset_gset(image(s.free_term(i).map))));
      t.expect(m.rows() == m.cols() && rref(m).rank == m.rows(),
               [&] { return g->label() + ": correspondence is not bijective"; });
      T.emplace(g->serial(), std::move(m));
    }
    std::size_t bisets = 0;
    for (const auto& h : objects)
      for (const auto& g : objects) {
        const auto& db = double_burnside(h, g);
        for (std::size_t i = 0; i < db.dim(); ++i) {
          const Biset& u = db.basis_biset(i);
          ++bisets;
          t.expect(T.at(h->serial()) * e.apply(u) == omega.apply(u) * T.at(g->serial()),
                   [&] { return "actions differ on " + db.label(i) + " over " + pair_label(h, g); });
        }
      }
    return t.result(std::to_string(bisets) + " bisets");
  });
}

Result smith_forms(std::size_t count, std::size_t max_dim, std::uint64_t seed) {
  return timed("smith normal form", [&] {
    Tally t("smith normal form");
    Rng rng(seed);
    for (std::size_t r = 0; r < count; ++r) {
      std::size_t rows = 1 + pick(rng, max_dim), cols = 1 + pick(rng, max_dim);
      ZMatrix m(rows, cols);
      if (r % 3 == 2) {
        // Rank-deficient: product of two thin factors.
        std::size_t k = 1 + pick(rng, std::min(rows, cols));
        ZMatrix a(rows, k), b(k, cols);
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < k; ++j) a(i, j) = static_cast<long>(pick(rng, 7)) - 3;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < cols; ++j) b(i, j) = static_cast<long>(pick(rng, 7)) - 3;
        m = a * b;
      } else {
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < cols; ++j)
            if (pick(rng, 3)) m(i, j) = static_cast<long>(pick(rng, 19)) - 9;
      }
      auto s = smith_normal_form(m);
      t.expect(s.u * m * s.v == s.s, [&] { return "U M V != S"; });
      t.expect(s.v * s.v_inv == ZMatrix::identity(cols), [&] { return "V V^-1 != I"; });
      auto du = bareiss_determinant(s.u), dv = bareiss_determinant(s.v);
      t.expect((du == 1 || du == -1) && (dv == 1 || dv == -1), [&] { return "transform is not unimodular"; });
      bool diagonal = true;
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if (i != j && s.s(i, j) != 0) diagonal = false;
      t.expect(diagonal, [&] { return "S is not diagonal"; });
      for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        const auto& a = s.diagonal[i];
        const auto& b = s.diagonal[i + 1];
        t.expect(a >= 0 && (b == 0 || (a != 0 && b % a == 0)), [&] { return "invariant factors do not divide"; });
      }
      t.expect(s.diagonal.size() == std::min(rows, cols), [&] { return "wrong diagonal length"; });
      std::size_t nonzero = 0;
      for (const auto& d : s.diagonal) nonzero += d != 0;
      t.expect(nonzero == bareiss_rank(m), [&] { return "rank disagrees with Bareiss"; });
    }
    return t.result(std::to_string(count) + " matrices");
  });
}

Result module_reduction(std::size_t count, std::uint64_t seed) {
  return timed("module reduction", [&] {
    Tally t("module reduction");
    Rng rng(seed);
    std::size_t vectors = 0;
    while (vectors < count) {
      std::size_t n = 2 + pick(rng, 11), k = 1 + pick(rng, n);
      std::vector<SparseRow> rows;
      for (std::size_t i = 0; i < k; ++i) {
        SparseRow row;
        for (std::size_t j = 0; j < n; ++j)
          if (pick(rng, 3) == 0) row.emplace_back(j, Rational(static_cast<long>(pick(rng, 9)) - 4));
        rows.push_back(std::move(row));
      }
      for (auto mode : {ScalarMode::Rational, ScalarMode::Integer}) {
        auto order = pick(rng, 2) ? PivotOrder::Leading : PivotOrder::Trailing;
        auto m = PresentedModule::from_sparse(n, rows, mode, order);
        for (const auto& row : rows) {
          QVector v(n);
          for (const auto& [c, x] : row) v[c] += x;
          t.expect(m.reduce(v) == QVector(n), [&] { return "a relation does not reduce to zero"; });
        }
        for (int s = 0; s < 10 && vectors < count; ++s, ++vectors) {
          QVector v(n);
          for (auto& x : v) x = static_cast<long>(pick(rng, 11)) - 5;
          auto red = m.reduce(v);
          t.expect(m.reduce(red) == red, [&] { return "reduce is not idempotent"; });
          QVector w = v;
          for (const auto& row : rows) {
            Rational c = static_cast<long>(pick(rng, 7)) - 3;
            for (const auto& [j, x] : row) w[j] += c * x;
          }
          t.expect(m.reduce(w) == red, [&] { return "reduce changes under adding relations: " + show(v); });
        }
      }
    }
    return t.result(std::to_string(count) + " vectors");
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"groups",        "bisets",     "burnside",  "maru-core",
                                              "functoriality", "adjunction", "deflation", "all"};
  return names;
}

std::vector<Result> run_suite(const std::string& suite, const SuiteConfig& cfg) {
  auto upto6 = builtin_universe("upto6");
  auto upto8 = builtin_universe("upto8");
  auto upto12 = builtin_universe("upto12");
  auto small = members_up_to(*upto6, 6);
  std::vector<Result> out;
  auto run = [&](const std::string& name) {
    if (name == "groups") {
      out.push_back(group_library());
      out.push_back(subgroup_enumeration(upto8->members()));
      out.push_back(hom_enumeration(small));
    } else if (name == "bisets") {
      out.push_back(biset_category_laws(builtins({"C1", "C2", "C3", "C4", "V4", "S3"}), 100, cfg.seed + 1));
      out.push_back(decomposition(small, 50, cfg.seed + 2));
      out.push_back(span_compositions(small, 50, cfg.seed + 3));
    } else if (name == "burnside") {
      out.push_back(burnside_rings(upto8->members()));
      out.push_back(bigger_burnside(builtins({"C1", "C2", "C3", "C4", "V4", "S3"}), upto6));
      out.push_back(burnside_correspondence(small, upto6));
    } else if (name == "maru-core") {
      out.push_back(extension_ranks(small, cfg.scalar));
      out.push_back(shipped_functor(cfg.data_dir + "/functors/signs_upto6.json", "signs"));
      ExtensionFunctor constant(std::make_shared<ConstantFunctor>(), upto6);
      out.push_back(extension_identities(constant, builtins({"C1", "C2", "C3", "C4", "V4", "S3"}), cfg.seed + 4));
      out.push_back(smith_forms(100, 12, cfg.seed + 5));
      out.push_back(module_reduction(200, cfg.seed + 6));
    } else if (name == "functoriality") {
      ExtensionFunctor constant(std::make_shared<ConstantFunctor>(), upto6);
      ExtensionFunctor signs(std::make_shared<SignFunctor>(), upto12);
      auto objects = builtins({"C1", "C2", "C3", "C4", "V4", "S3"});
      out.push_back(functoriality(constant, objects, true, 20, cfg.seed + 7));
      out.push_back(functoriality(signs, objects, true, 20, cfg.seed + 8));
    } else if (name == "adjunction") {
      out.push_back(adjunction(12, cfg.seed + 9));
    } else if (name == "deflation") {
      out.push_back(deflation({"C2", "C3", "C4", "V4", "C6", "S3", "D4", "Q8"}, upto8));
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown suite \"" + name + "\"");
    }
  };
  if (suite == "all") {
    for (const auto& s : suite_names())
      if (s != "all") run(s);
  } else {
    run(suite);
  }
  return out;
}

}  // namespace bisetkit::checks
