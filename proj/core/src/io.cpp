#include "bisetkit/io.hpp"

#include <fstream>
#include <sstream>

#include "bisetkit/error.hpp"
#include "bisetkit/group_algorithms.hpp"
#include "bisetkit/library.hpp"

namespace bisetkit::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(std::string("field \"") + key + "\": " + e.what());
  }
}

GroupRef resolve_group(const json& j, const GroupUniverse* universe) {
  if (j.is_string() && universe) {
    if (auto g = universe->find_by_label(j.get<std::string>())) return g;
  }
  return group_from_json(j);
}

Rational scalar_from_json(const json& x) {
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_integer()) return Rational(Integer(x.get<long>()));
  fail("scalars must be strings or integers");
}

std::vector<std::vector<Point>> table_from_json(const json& j, const char* key) {
  return get<std::vector<std::vector<Point>>>(j, key);
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
}

GroupRef group_from_json(const json& j, std::size_t max_order) {
  if (j.is_string()) {
    try {
      return builtin_group(j.get<std::string>());
    } catch (const Error&) {
      fail("unknown builtin group \"" + j.get<std::string>() + "\"");
    }
  }
  if (!j.is_object()) fail("group must be a builtin name or an object");
  auto name = j.contains("name") ? get<std::string>(j, "name") : std::string();
  if (j.contains("cayley")) {
    auto table = get<std::vector<std::vector<Elt>>>(j, "cayley");
    if (table.size() > max_order)
      throw Error(ErrorKind::TooLarge, "group order " + std::to_string(table.size()) + " exceeds bound");
    return Group::from_cayley(table, name);
  }
  if (j.contains("perm_gens")) {
    auto degree = get<std::size_t>(j, "degree");
    auto gens = get<std::vector<Perm>>(j, "perm_gens");
    for (const auto& p : gens)
      if (p.size() != degree) fail("permutation length differs from degree");
    return group_from_perm_gens(degree, gens, name, max_order);
  }
  fail("group object needs \"cayley\" or \"perm_gens\"");
}

json group_to_json(const GroupRef& g) { return json{{"name", g->label()}, {"cayley", g->cayley()}}; }

Hom hom_from_json(const json& j, const GroupUniverse* universe) {
  if (!j.is_object()) fail("hom must be an object");
  if (!j.contains("src") || !j.contains("dst")) fail("hom needs \"src\" and \"dst\"");
  Hom f{resolve_group(j.at("src"), universe), resolve_group(j.at("dst"), universe), get<std::vector<Elt>>(j, "map")};
  if (f.map.size() != f.source->order()) fail("hom map length differs from source order");
  for (Elt y : f.map)
    if (y >= f.target->order()) fail("hom map value out of range");
  if (!f.is_homomorphism()) throw Error(ErrorKind::InvalidArgument, "map is not a homomorphism");
  return f;
}

json hom_to_json(const Hom& f) {
  return json{{"src", f.source->label()}, {"dst", f.target->label()}, {"map", f.map}};
}

Biset biset_from_json(const json& j, const GroupUniverse* universe) {
  if (!j.is_object()) fail("biset must be an object");
  if (j.contains("t")) return elementary_t(hom_from_json(j.at("t"), universe));
  if (j.contains("r")) return elementary_r(hom_from_json(j.at("r"), universe));
  if (!j.contains("left") || !j.contains("right")) fail("biset needs \"left\" and \"right\"");
  auto h = resolve_group(j.at("left"), universe);
  auto g = resolve_group(j.at("right"), universe);
  auto size = get<std::size_t>(j, "size");
  auto l = table_from_json(j, "lact");
  auto r = table_from_json(j, "ract");
  if (l.size() != h->order() || r.size() != g->order()) fail("action tables need one row per group element");
  std::vector<Point> lact, ract;
  for (const auto& row : l) {
    if (row.size() != size) fail("lact row length differs from size");
    lact.insert(lact.end(), row.begin(), row.end());
  }
  for (const auto& row : r) {
    if (row.size() != size) fail("ract row length differs from size");
    ract.insert(ract.end(), row.begin(), row.end());
  }
  return Biset::make(h, g, size, std::move(lact), std::move(ract));
}

json biset_to_json(const Biset& u) {
  json l = json::array(), r = json::array();
  for (Elt h = 0; h < u.left()->order(); ++h) {
    json row = json::array();
    for (Point x = 0; x < u.size(); ++x) row.push_back(u.lmul(h, x));
    l.push_back(std::move(row));
  }
  for (Elt g = 0; g < u.right()->order(); ++g) {
    json row = json::array();
    for (Point x = 0; x < u.size(); ++x) row.push_back(u.rmul(x, g));
    r.push_back(std::move(row));
  }
  return json{{"left", group_to_json(u.left())},
              {"right", group_to_json(u.right())},
              {"size", u.size()},
              {"lact", std::move(l)},
              {"ract", std::move(r)}};
}

json matrix_to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

QMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) fail("matrix must be a list of rows");
  std::size_t cols = j.empty() ? 0 : j.front().size();
  QMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) fail("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

json vector_to_json(const QVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

UniverseRef universe_from_spec(const std::string& spec, std::size_t max_order) {
  if (spec.rfind("file:", 0) == 0) {
    auto j = load_file(spec.substr(5));
    const json& list = j.is_object() ? j.at("groups") : j;
    if (!list.is_array()) fail("universe file must hold a list of groups");
    auto u = std::make_shared<GroupUniverse>(max_order, spec.substr(5));
    for (const auto& g : list) u->register_group(group_from_json(g, max_order));
    return u;
  }
  try {
    return builtin_universe(spec, max_order);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TooLarge) throw;
    fail("unknown universe \"" + spec + "\"");
  }
}

std::shared_ptr<TableFunctor> restriction_functor_from_json(const json& j, std::size_t max_order) {
  if (!j.is_object() || !j.contains("universe") || !j.contains("dims") || !j.contains("mats"))
    fail("restriction functor needs \"universe\", \"dims\" and \"mats\"");
  auto u = std::make_shared<GroupUniverse>(max_order, j.value("name", std::string("table")));
  for (const auto& gj : j.at("universe")) {
    auto reg = u->register_group(group_from_json(gj, max_order));
    if (!reg.added) fail("universe lists two isomorphic groups");
  }
  std::vector<std::size_t> dims(u->size());
  std::vector<char> seen(u->size(), 0);
  for (const auto& [name, d] : j.at("dims").items()) {
    auto g = u->find_by_label(name);
    if (!g) fail("dims names unknown group \"" + name + "\"");
    std::size_t i = *u->index_of(g);
    dims[i] = d.get<std::size_t>();
    seen[i] = 1;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw Error(ErrorKind::DimensionMismatch, "no dimension for " + u->member(i)->label());
  std::vector<TableFunctor::Entry> entries;
  for (const auto& m : j.at("mats")) {
    if (!m.contains("hom") || !m.contains("matrix")) fail("each mats entry needs \"hom\" and \"matrix\"");
    Hom f = hom_from_json(m.at("hom"), u.get());
    auto src = u->index_of(f.source), dst = u->index_of(f.target);
    if (!src || !dst) fail("functor homs must be between universe groups");
    QMatrix mat = matrix_from_json(m.at("matrix"));
    if (mat.rows() == 0) mat = QMatrix(dims[*src], 0);
    entries.push_back({*src, *dst, f.map, std::move(mat)});
  }
  return std::make_shared<TableFunctor>(u, dims, entries, j.value("name", std::string("table")));
}

json restriction_functor_to_json(const RestrictionFunctor& p, const GroupUniverse& universe) {
  json out{{"name", p.name()}, {"universe", json::array()}, {"dims", json::object()}, {"mats", json::array()}};
  for (const auto& g : universe.members()) {
    out["universe"].push_back(group_to_json(g));
    out["dims"][g->label()] = p.dim(g);
  }
  for (const auto& e : tabulate(p, universe))
    out["mats"].push_back(json{{"hom", hom_to_json(Hom{universe.member(e.src), universe.member(e.dst), e.map})},
                               {"matrix", matrix_to_json(e.matrix)}});
  return out;
}

TableBisetFunctor biset_functor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("objects") || !j.contains("dims") || !j.contains("blocks"))
    fail("biset functor needs \"objects\", \"dims\" and \"blocks\"");
  std::vector<GroupRef> objects;
  for (const auto& gj : j.at("objects")) objects.push_back(group_from_json(gj));
  auto index = [&](const std::string& name) {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i]->label() == name) return i;
    fail("unknown object \"" + name + "\"");
  };
  std::vector<std::size_t> dims(objects.size());
  for (const auto& [name, d] : j.at("dims").items()) dims[index(name)] = d.get<std::size_t>();
  std::vector<TableBisetFunctor::Block> blocks;
  for (const auto& bj : j.at("blocks")) {
    TableBisetFunctor::Block b{index(get<std::string>(bj, "left")), index(get<std::string>(bj, "right")), {}};
    if (!bj.contains("mats")) fail("block needs \"mats\"");
    for (const auto& mj : bj.at("mats")) {
      QMatrix m = matrix_from_json(mj);
      if (m.rows() == 0) m = QMatrix(dims[b.left], dims[b.right]);
      b.mats.push_back(std::move(m));
    }
    blocks.push_back(std::move(b));
  }
  TableBisetFunctor out(objects, dims, std::move(blocks), j.value("name", std::string("table")));
  out.validate();
  return out;
}

json biset_functor_to_json(const TableBisetFunctor& b) {
  json out{{"name", b.name()}, {"objects", json::array()}, {"dims", json::object()}, {"blocks", json::array()}};
  for (std::size_t i = 0; i < b.objects().size(); ++i) {
    out["objects"].push_back(group_to_json(b.objects()[i]));
    out["dims"][b.objects()[i]->label()] = b.dims()[i];
  }
  for (const auto& blk : b.blocks()) {
    json mats = json::array();
    for (const auto& m : blk.mats) mats.push_back(matrix_to_json(m));
    out["blocks"].push_back(json{{"left", b.objects()[blk.left]->label()},
                                 {"right", b.objects()[blk.right]->label()},
                                 {"mats", std::move(mats)}});
  }
  return out;
}

}  // namespace bisetkit::io
