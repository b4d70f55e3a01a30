#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "bisetkit/burnside.hpp"
#include "bisetkit/error.hpp"
#include "bisetkit/extension.hpp"
#include "bisetkit/group_algorithms.hpp"
#include "bisetkit/io.hpp"
#include "bisetkit/library.hpp"
#include "checks.hpp"

using namespace bisetkit;
using json = nlohmann::json;

namespace {

enum class Format { Tsv, Json };

struct RunConfig {
  std::string scalar = "rat";
  std::size_t max_order = kDefaultUniverseBound;
  std::uint64_t seed = 1;
  std::string format = "tsv";
  std::string universe = "upto6";

  ScalarMode mode() const { return scalar == "int" ? ScalarMode::Integer : ScalarMode::Rational; }
  Format output() const { return format == "json" ? Format::Json : Format::Tsv; }
};

GroupRef load_group(const std::string& arg, const RunConfig& cfg) {
  GroupRef g;
  if (std::filesystem::exists(arg))
    g = io::group_from_json(io::load_file(arg), cfg.max_order);
  else
    g = io::group_from_json(json(arg), cfg.max_order);
  if (g->order() > cfg.max_order)
    throw Error(ErrorKind::TooLarge, g->label() + " has order " + std::to_string(g->order()) + " > --max-order");
  return g;
}

struct LoadedFunctor {
  RestrictionFunctorRef p;
  UniverseRef universe;
};

LoadedFunctor load_functor(const std::string& arg, const RunConfig& cfg) {
  if (arg == "constant") return {std::make_shared<ConstantFunctor>(), io::universe_from_spec(cfg.universe, cfg.max_order)};
  if (arg == "signs") return {std::make_shared<SignFunctor>(), io::universe_from_spec(cfg.universe, cfg.max_order)};
  auto table = io::restriction_functor_from_json(io::load_file(arg), cfg.max_order);
  return {table, table->universe()};
}

std::string combination(const QVector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += v[i] > 0 ? " + " : " - ";
    else if (v[i] < 0) out += "-";
    Rational a = abs(v[i]);
    if (a != 1) out += to_string(a) + "*";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

json strings(const std::vector<std::string>& v) { return json(v); }

// Multiplication table of a commutative algebra given by its basis products.
void emit_product_table(const std::string& kind, const std::string& group, const std::vector<std::string>& labels,
                        const std::function<std::optional<QVector>(std::size_t, std::size_t)>& product, json extra, Format fmt) {
  const std::size_t d = labels.size();
  if (fmt == Format::Json) {
    json table = json::array();
    for (std::size_t i = 0; i < d; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < d; ++j) {
        auto p = product(i, j);
        row.push_back(p ? io::vector_to_json(*p) : json(nullptr));
      }
      table.push_back(row);
    }
    json out = {{"kind", kind}, {"group", group}, {"basis", strings(labels)}, {"table", table}};
    for (auto& [k, v] : extra.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "# " << kind << " " << group << ", dim " << d << "\n";
  for (auto& [k, v] : extra.items()) std::cout << "# " << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (std::size_t j = 0; j < d; ++j) std::cout << "\t" << labels[j];
  std::cout << "\n";
  for (std::size_t i = 0; i < d; ++i) {
    std::cout << labels[i];
    for (std::size_t j = 0; j < d; ++j) {
      auto p = product(i, j);
      std::cout << "\t" << (p ? combination(*p, labels) : "outside universe");
    }
    std::cout << "\n";
  }
}

int cmd_group_info(const std::string& arg, const RunConfig& cfg) {
  auto g = load_group(arg, cfg);
  const auto& classes = subgroup_classes(g);
  std::vector<std::uint32_t> orders;
  for (Elt x = 0; x < g->order(); ++x) orders.push_back(g->elt_order(x));
  auto names = subgroup_class_names(g);
  json subs = json::array();
  for (std::size_t i = 0; i < classes.size(); ++i)
    subs.push_back({{"label", names[i]},
                    {"order", classes.rep(i).order()},
                    {"conjugates", classes.members(i).size()},
                    {"normal", is_normal(classes.rep(i))},
                    {"elements", classes.rep(i).elems}});
  json out = {{"name", g->label()},
              {"order", g->order()},
              {"abelian", g->is_abelian()},
              {"element_orders", orders},
              {"generators", g->generators()},
              {"subgroup_classes", subs},
              {"automorphisms", automorphisms(g).size()},
              {"cayley", g->cayley()}};
  if (cfg.output() == Format::Json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "name\t" << g->label() << "\norder\t" << g->order() << "\nabelian\t" << (g->is_abelian() ? "yes" : "no")
            << "\nautomorphisms\t" << automorphisms(g).size() << "\nelement_orders";
  for (auto o : orders) std::cout << "\t" << o;
  std::cout << "\ngenerators";
  for (auto x : g->generators()) std::cout << "\t" << x;
  std::cout << "\nsubgroup_classes\t" << classes.size() << "\n";
  std::cout << "label\torder\tconjugates\tnormal\telements\n";
  for (const auto& s : subs) {
    std::string elems;
    for (auto x : s["elements"]) elems += (elems.empty() ? "" : " ") + x.dump();
    std::cout << s["label"].get<std::string>() << "\t" << s["order"] << "\t" << s["conjugates"] << "\t"
              << (s["normal"].get<bool>() ? "yes" : "no") << "\t" << elems << "\n";
  }
  return 0;
}

int cmd_burnside(const std::string& arg, const RunConfig& cfg) {
  auto g = load_group(arg, cfg);
  const auto& r = burnside_ring(g);
  emit_product_table("burnside", g->label(), r.labels(),
                     [&](std::size_t i, std::size_t j) { return std::optional<QVector>(r.product_of_basis(i, j)); }, json::object(),
                     cfg.output());
  return 0;
}

int cmd_bigger_burnside(const std::string& arg, const RunConfig& cfg) {
  auto g = load_group(arg, cfg);
  auto universe = io::universe_from_spec(cfg.universe, cfg.max_order);
  BiggerBurnside b(g, universe);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < b.dim(); ++i) labels.push_back(b.label(i));
  auto td = tilde_deflation(b);
  json extra = {{"universe", universe->name()},
                {"deflation_rank", td.rank()},
                {"deflation_status", td.subquotient_closed ? "closed universe" : "truncated"}};
  emit_product_table("bigger-burnside", g->label(), labels,
                     [&](std::size_t i, std::size_t j) -> std::optional<QVector> {
                       try {
                         return b.multiply_basis(i, j);
                       } catch (const Error& e) {
                         if (e.kind() != ErrorKind::UniverseOverflow) throw;
                         return std::nullopt;
                       }
                     },
                     extra, cfg.output());
  return 0;
}

// Basis of B(G,H) and the composition B(G,H) x B(H,G) -> B(G,G).
int cmd_double_burnside(const std::string& ga, const std::string& ha, const RunConfig& cfg) {
  auto g = load_group(ga, cfg);
  auto h = load_group(ha, cfg);
  const auto& gh = double_burnside(g, h);
  const auto& hg = double_burnside(h, g);
  const auto& gg = double_burnside(g, g);
  if (cfg.output() == Format::Json) {
    json rows = json::array();
    for (std::size_t i = 0; i < gh.dim(); ++i)
      for (std::size_t j = 0; j < hg.dim(); ++j)
        rows.push_back({{"left", gh.label(i)},
                        {"right", hg.label(j)},
                        {"product", io::vector_to_json(double_burnside_compose_basis(gh, i, hg, j))}});
    json out = {{"kind", "double-burnside"},
                {"left", g->label()},
                {"right", h->label()},
                {"basis", strings(gh.labels())},
                {"dual_basis", strings(hg.labels())},
                {"target_basis", strings(gg.labels())},
                {"compositions", rows}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "# double-burnside B(" << g->label() << "," << h->label() << "), dim " << gh.dim() << "\n";
  for (std::size_t i = 0; i < gh.dim(); ++i) std::cout << "basis\t" << i << "\t" << gh.label(i) << "\n";
  std::cout << "# compositions B(" << g->label() << "," << h->label() << ") x B(" << h->label() << ","
            << g->label() << ") -> B(" << g->label() << "," << g->label() << ")\n";
  std::cout << "left\tright";
  for (const auto& l : gg.labels()) std::cout << "\t" << l;
  std::cout << "\n";
  for (std::size_t i = 0; i < gh.dim(); ++i)
    for (std::size_t j = 0; j < hg.dim(); ++j) {
      std::cout << gh.label(i) << "\t" << hg.label(j);
      for (const auto& c : double_burnside_compose_basis(gh, i, hg, j)) std::cout << "\t" << to_string(c);
      std::cout << "\n";
    }
  return 0;
}

int cmd_maru(const std::string& parg, const std::string& garg, const RunConfig& cfg) {
  auto [p, universe] = load_functor(parg, cfg);
  auto g = load_group(garg, cfg);
  ExtensionSpace s(p, universe, g, cfg.mode());
  json out = {{"kind", "maru"},
              {"functor", p->name()},
              {"group", g->label()},
              {"universe", universe->name()},
              {"scalar", cfg.scalar},
              {"status", s.status()},
              {"terms", s.n_terms()},
              {"relations", s.n_relations()},
              {"rank", s.rank()}};
  json torsion = json::array();
  for (const auto& t : s.torsion()) torsion.push_back(t.get_str());
  out["torsion"] = torsion;
  std::vector<std::string> basis;
  if (cfg.mode() == ScalarMode::Rational) {
    for (std::size_t i = 0; i < s.rank(); ++i) basis.push_back(s.free_label(i));
    out["basis"] = basis;
    // delta is only defined on the exact value.
    if (s.closed()) out["delta"] = io::matrix_to_json(s.delta_matrix());
  }
  if (cfg.output() == Format::Json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "functor\t" << p->name() << "\ngroup\t" << g->label() << "\nuniverse\t" << universe->name()
            << "\nscalar\t" << cfg.scalar << "\nstatus\t" << s.status() << "\nterms\t" << s.n_terms()
            << "\nrelations\t" << s.n_relations() << "\nrank\t" << s.rank() << "\ntorsion";
  for (const auto& t : out["torsion"]) std::cout << "\t" << t.get<std::string>();
  std::cout << "\n";
  for (std::size_t i = 0; i < basis.size(); ++i) std::cout << "basis\t" << i << "\t" << basis[i] << "\n";
  if (out.contains("delta")) {
    QMatrix d = s.delta_matrix();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      std::cout << "delta\t" << basis[r];
      for (std::size_t c = 0; c < d.cols(); ++c) std::cout << "\t" << to_string(d(r, c));
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_maru_action(const std::string& parg, const std::string& uarg, const RunConfig& cfg) {
  auto [p, universe] = load_functor(parg, cfg);
  Biset u = io::biset_from_json(io::load_file(uarg), universe.get());
  for (const auto& g : {u.left(), u.right()})
    if (g->order() > cfg.max_order) throw Error(ErrorKind::TooLarge, g->label() + " exceeds --max-order");
  ExtensionFunctor e(p, universe);
  const auto& sh = e.space(u.left());
  const auto& sg = e.space(u.right());
  QMatrix m = e.apply(u);
  std::vector<std::string> rows, cols;
  for (std::size_t i = 0; i < sh.rank(); ++i) rows.push_back(sh.free_label(i));
  for (std::size_t i = 0; i < sg.rank(); ++i) cols.push_back(sg.free_label(i));
  std::string status = sh.closed() && sg.closed() ? "closed universe" : "truncated";
  if (cfg.output() == Format::Json) {
    json out = {{"kind", "maru-action"},
                {"functor", p->name()},
                {"left", u.left()->label()},
                {"right", u.right()->label()},
                {"universe", universe->name()},
                {"status", status},
                {"rows", rows},
                {"cols", cols},
                {"matrix", io::matrix_to_json(m)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "# maru-action " << p->name() << " (" << u.left()->label() << "," << u.right()->label() << "), "
            << universe->name() << ", " << status << "\n";
  for (const auto& c : cols) std::cout << "\t" << c;
  std::cout << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::cout << rows[r];
    for (std::size_t c = 0; c < m.cols(); ++c) std::cout << "\t" << to_string(m(r, c));
    std::cout << "\n";
  }
  return 0;
}

int cmd_functor_dump(const std::string& parg, const RunConfig& cfg) {
  auto [p, universe] = load_functor(parg, cfg);
  std::cout << io::restriction_functor_to_json(*p, *universe).dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
  checks::SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.scalar = cfg.mode();
  sc.data_dir = BISETKIT_DATA_DIR;
  if (const char* dir = std::getenv("BISETKIT_DATA_DIR")) sc.data_dir = dir;
  auto results = checks::run_suite(suite, sc);
  bool all = true;
  json list = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    std::cerr << r.name << "\t" << std::fixed << std::setprecision(2) << r.seconds << " s\n";
    if (cfg.output() == Format::Tsv)
      std::cout << (r.pass ? "PASS" : "FAIL") << "\t" << r.name << "\t" << r.detail << std::endl;
    list.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  if (cfg.output() == Format::Json)
    std::cout << json{{"suite", suite}, {"seed", cfg.seed}, {"results", list}, {"pass", all}}.dump(2) << "\n";
  return all ? 0 : 2;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::TooLarge:
    case ErrorKind::UniverseOverflow:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biset functors over finite groups: tables, extensions and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--scalar", cfg.scalar, "Scalars for quotient modules (int: rank and torsion via Smith form)")
      ->check(CLI::IsMember({"int", "rat"}))
      ->capture_default_str();
  app.add_option("--max-order", cfg.max_order, "Largest group order accepted in inputs and universes")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for the randomized cases of verification suites")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  app.add_option("--universe", cfg.universe, "Group universe: upto6, upto8, upto12 or file:PATH")
      ->capture_default_str();

  std::string a, b;
  std::function<int()> run;
  auto group_help = "builtin group name or JSON group file";
  auto functor_help = "restriction functor: constant, signs or a JSON functor file";

  auto* info = app.add_subcommand("group-info", "Order, element orders and subgroup classes of a group");
  info->add_option("group", a, group_help)->required();
  info->callback([&] { run = [&] { return cmd_group_info(a, cfg); }; });

  auto* burn = app.add_subcommand("burnside", "Multiplication table of the Burnside ring");
  burn->add_option("group", a, group_help)->required();
  burn->callback([&] { run = [&] { return cmd_burnside(a, cfg); }; });

  auto* dbl = app.add_subcommand("double-burnside", "Basis of B(G,H) and its composition with B(H,G)");
  dbl->add_option("G", a, group_help)->required();
  dbl->add_option("H", b, group_help)->required();
  dbl->callback([&] { run = [&] { return cmd_double_burnside(a, b, cfg); }; });

  auto* big = app.add_subcommand("bigger-burnside", "Bigger Burnside ring over --universe and its deflation rank");
  big->add_option("group", a, group_help)->required();
  big->callback([&] { run = [&] { return cmd_bigger_burnside(a, cfg); }; });

  auto* maru = app.add_subcommand("maru", "Extension of a restriction functor evaluated at a group");
  maru->add_option("functor", a, functor_help)->required();
  maru->add_option("group", b, group_help)->required();
  maru->callback([&] { run = [&] { return cmd_maru(a, b, cfg); }; });

  auto* action = app.add_subcommand("maru-action", "Matrix of a biset acting on the extension");
  action->add_option("functor", a, functor_help)->required();
  action->add_option("biset", b, "JSON biset file")->required();
  action->callback([&] { run = [&] { return cmd_maru_action(a, b, cfg); }; });

  auto* dump = app.add_subcommand("functor-dump", "Tabulate a restriction functor on --universe as JSON");
  dump->add_option("functor", a, functor_help)->required();
  dump->callback([&] { run = [&] { return cmd_functor_dump(a, cfg); }; });

  std::string suites;
  for (const auto& s : checks::suite_names()) suites += (suites.empty() ? "" : ", ") + s;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 2 if any property fails");
  verify->add_option("suite", a, "one of " + suites)->required()->check(CLI::IsMember(checks::suite_names()));
  verify->callback([&] { run = [&] { return cmd_verify(a, cfg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    code = run();
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    code = exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error (Parse): " << e.what() << "\n";
    code = 1;
  } catch (const std::bad_alloc&) {
    std::cerr << "error (TooLarge): out of memory\n";
    code = 3;
  }
  std::cout.flush();
  std::cerr << "elapsed\t" << std::fixed << std::setprecision(2)
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return code;
}
