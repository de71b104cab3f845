#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "hallcx/complexcat/cxhom.hpp"
#include "hallcx/io/json_io.hpp"
#include "hallcx/quiverrep/ext.hpp"
#include "hallcx/suites/suites.hpp"

using namespace hallcx;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kConfig = 2, kBudget = 3 };

struct Options {
  std::string quiver;
  std::uint32_t p = 2;
  std::string max_dim;
  std::size_t m = 2;
  std::string levels = "-2..3";
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::size_t samples = 50;
  std::size_t summands = 1;
  std::string out;
  std::string format = "json";
};

PathAlgebra algebra_of(const Options& o) {
  Quiver Q = o.quiver.empty() ? Quiver::acyclic(2, {{0, 1}}) : load_quiver(o.quiver);
  return PathAlgebra(std::move(Q), PrimeField(o.p));
}

DimVec dims_of(const Options& o, std::size_t n) {
  if (o.max_dim.empty()) return DimVec(n, 1);
  DimVec d;
  std::stringstream ss(o.max_dim);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("--max-dim expects a comma separated list of non-negative integers");
    d.push_back(std::stoul(part));
  }
  if (d.size() != n) throw ParseError("--max-dim needs one entry per vertex");
  return d;
}

LevelRange levels_of(const Options& o) {
  static const std::regex re(R"(^(-?\d+)\.\.(-?\d+)$)");
  std::smatch m;
  if (!std::regex_match(o.levels, m, re)) throw ParseError("--levels expects LO..HI");
  LevelRange r{std::stoll(m[1]), std::stoll(m[2])};
  if (r.lo > r.hi) throw ParseError("--levels needs LO <= HI");
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Options& o, const json& doc, const std::vector<std::string>& columns, const json& rows) {
  std::ostringstream text;
  if (o.format == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i) text << (i ? "," : "") << columns[i];
    text << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        const auto& v = r.at(columns[i]);
        text << (i ? "," : "") << csv_field(v.is_string() ? v.get<std::string>() : v.dump());
      }
      text << "\n";
    }
  } else {
    text << doc.dump(2) << "\n";
  }
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw ParseError("cannot write " + o.out);
    f << text.str();
  }
}

json config_json(const Options& o, const PathAlgebra& A, const DimVec& dmax) {
  return {{"quiver", json::parse(quiver_to_json(A.quiver()))}, {"p", o.p}, {"max_dim", dmax}, {"m", o.m},
          {"levels", o.levels}, {"budget", o.budget}, {"seed", o.seed}};
}

int cmd_enumerate(const Options& o, const std::string& kind) {
  const PathAlgebra A = algebra_of(o);
  const DimVec dmax = dims_of(o, A.n());
  CxContext ctx(A, o.budget);
  json rows = json::array();
  if (kind == "modules") {
    for (const auto& id : ctx.catalog().classes_up_to(dmax))
      rows.push_back({{"key", to_string(id)}, {"dims", json(id.dims).dump()}, {"aut", ctx.catalog().aut(id).get_str()}});
  } else {
    const CxKind k = kind == "cyclic" ? CxKind::cyclic : kind == "window" ? CxKind::window : CxKind::bounded;
    const LevelRange lv = levels_of(o);
    ComplexCategory C(ctx, k, k == CxKind::bounded ? 0 : o.m);
    for (const auto& key : key_grid(ctx, k, o.m, dmax, o.summands, lv.lo, lv.hi))
      rows.push_back({{"key", to_string(key)}, {"dims", json(key_profile(ctx, key)).dump()}, {"aut", C.aut(key).get_str()}});
  }
  json doc{{"command", "enumerate"}, {"kind", kind}, {"config", config_json(o, A, dmax)}, {"rows", rows}};
  emit(o, doc, {"key", "dims", "aut"}, rows);
  return kPass;
}

template <class Cat>
json product_rows(HallAlgebra<Cat>& H, const typename Cat::Key& a, const typename Cat::Key& b, const Rational& twist) {
  json rows = json::array();
  for (const auto& [L, c] : H.basis_product(a, b)) {
    const Rational v = c * twist;
    rows.push_back({{"lhs", H.category().name(a)},
                    {"rhs", H.category().name(b)},
                    {"term", H.category().name(L)},
                    {"numerator", v.get_num().get_str()},
                    {"denominator", v.get_den().get_str()}});
  }
  return rows;
}

int cmd_product(const Options& o, const std::string& lhs, const std::string& rhs, bool twisted) {
  const PathAlgebra A = algebra_of(o);
  CxContext ctx(A, o.budget);
  json rows;
  if (lhs.front() == '(') {
    const RepClassId a = parse_class_id(lhs), b = parse_class_id(rhs);
    for (const auto& id : {a, b}) {
      if (id.dims.size() != A.n()) throw ParseError("class " + lhs + " has the wrong number of vertices");
      ctx.catalog().rep(id);
    }
    ModuleCategory C(ctx.catalog());
    HallAlgebra H(C);
    const Rational tw = twisted ? power_of(A.p(), euler_form(A.quiver(), a.dims, b.dims)) : Rational(1);
    rows = product_rows(H, a, b, tw);
  } else {
    const CxKey a = parse_cx_key(lhs), b = parse_cx_key(rhs);
    if (a.kind != b.kind || a.m != b.m) throw ParseError("both keys must live in the same category");
    for (const auto& k : {a, b})
      for (const auto& l : k.labels) ctx.catalog().rep(l.cls);
    ComplexCategory C(ctx, a.kind, a.m);
    HallAlgebra H(C);
    Rational tw = 1;
    if (twisted) {
      if (a.kind == CxKind::cyclic) throw std::domain_error("the twisted product is defined for window and bounded complexes");
      tw = power_of(A.p(), euler_form_components(ctx, realize(ctx, a), realize(ctx, b)));
    }
    rows = product_rows(H, a, b, tw);
  }
  json doc{{"command", "product"}, {"twisted", twisted}, {"config", config_json(o, A, DimVec(A.n(), 0))}, {"rows", rows}};
  emit(o, doc, {"lhs", "rhs", "term", "numerator", "denominator"}, rows);
  return kPass;
}

int cmd_verify(const Options& o, const std::string& suite) {
  const PathAlgebra A = algebra_of(o);
  SuiteConfig cfg{A, dims_of(o, A.n())};
  cfg.ms = {o.m};
  cfg.levels = levels_of(o);
  cfg.budget = o.budget;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.max_summands = o.summands;
  if (o.m == 0) throw std::domain_error("--m must be at least 1");
  const Report rep = run_suite(suite, cfg);
  json rows = json::array();
  for (const auto& c : rep.checks)
    rows.push_back({{"relation", c.relation}, {"params", c.params}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  json doc{{"command", "verify"},     {"suite", suite},          {"config", config_json(o, A, cfg.dmax)},
           {"passed", rep.passed()}, {"failed", rep.failed()}, {"checks", rows}};
  emit(o, doc, {"relation", "params", "pass", "lhs", "rhs"}, rows);
  if (rep.checks.empty()) std::cerr << "warning: " << suite << " has no instances on this grid\n";
  std::cerr << suite << ": " << rep.passed() << " passed, " << rep.failed() << " failed\n";
  return rep.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall algebras of quiver representations and complexes of projectives over F_p"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--quiver", o.quiver, "quiver JSON file (default: A2)")->check(CLI::ExistingFile);
  app.add_option("--p", o.p, "field size (prime)");
  app.add_option("--max-dim", o.max_dim, "dimension bound, e.g. 1,1");
  app.add_option("--m", o.m, "complex length or period");
  app.add_option("--levels", o.levels, "level window LO..HI");
  app.add_option("--budget", o.budget, "enumeration budget")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--samples", o.samples, "random samples per ambient");
  app.add_option("--summands", o.summands, "summands per complex in grids");
  app.add_option("--out", o.out, "output file (default: stdout)");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string kind = "modules";
  auto* en = app.add_subcommand("enumerate", "list iso classes");
  en->add_option("--kind", kind, "modules, cyclic, window or bounded")
      ->check(CLI::IsMember({"modules", "cyclic", "window", "bounded"}));

  std::string lhs, rhs;
  bool twisted = false;
  auto* pr = app.add_subcommand("product", "Hall product of two classes");
  pr->add_option("lhs", lhs, "class id such as (1,0)#0 or key such as window(2):T(1,0)#0[0]")->required();
  pr->add_option("rhs", rhs, "second class id or key")->required();
  pr->add_flag("--twisted", twisted, "multiply by q^<lhs, rhs>");

  std::string suite;
  std::vector<std::string> names;
  for (const auto& s : suite_registry()) names.push_back(s.name);
  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(names));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfig;
  }
  try {
    if (*en) return cmd_enumerate(o, kind);
    if (*pr) return cmd_product(o, lhs, rhs, twisted);
    return cmd_verify(o, suite);
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
}
