// Command-line front end over the C API. Every verb prints one JSON report.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "prelie/prelie.h"

namespace {

using json = nlohmann::json;

struct Failure {
  int status;
  std::string message;
};

struct AlgebraDeleter {
  void operator()(prelie_algebra* a) const { prelie_algebra_free(a); }
};
using AlgebraHandle = std::unique_ptr<prelie_algebra, AlgebraDeleter>;

void check(prelie_status s) {
  if (s != PRELIE_OK)
    throw Failure{s, std::string(prelie_last_error_code()) + ": " + prelie_last_error()};
}

json take(char* text) {
  std::unique_ptr<char, void (*)(char*)> owned(text, prelie_string_free);
  return json::parse(owned.get());
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Failure{PRELIE_ERR_INVALID, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text))
    throw Failure{PRELIE_ERR_INVALID, "cannot write '" + path + "'"};
}

std::string fieldString(const json& f) {
  return f.at("kind") == "prime" ? "gf:" + std::to_string(f.at("p").get<unsigned>()) : "rational";
}

// Shared option values; CLI11 binds into these.
struct Options {
  std::string field = "rational";
  std::string output;
  std::uint64_t budget = 0;
  std::string algebra, ideal, ideal2, identity = "pre-lie", kind, property;
  std::string domain, codomain, map, actor, acted, action, module, left, right, gallery;
  unsigned n = 0, truncate = 5, size = 0;
  bool lattice = false;
};

class Runner {
public:
  explicit Runner(Options& o) : o_(o) {}

  AlgebraHandle load(const std::string& path) {
    prelie_algebra* a = nullptr;
    check(prelie_algebra_parse(readFile(path).c_str(), o_.field.c_str(), &a));
    return AlgebraHandle(a);
  }

  json algebraJson(const prelie_algebra* a) {
    char* out = nullptr;
    check(prelie_algebra_to_json(a, &out));
    return take(out);
  }

  void setField(const prelie_algebra* a) { field_ = fieldString(algebraJson(a).at("field")); }

  // Emitted algebras go to -o when given; the report always carries them.
  json emitAlgebra(const prelie_algebra* a) {
    json doc = algebraJson(a);
    if (!o_.output.empty()) {
      writeFile(o_.output, doc.dump(2) + "\n");
      inputs_["output"] = o_.output;
    }
    field_ = fieldString(doc.at("field"));
    return doc;
  }

  json run(const std::string& verb);

  json inputs_ = json::object();
  std::string field_;

private:
  std::uint64_t budget(std::uint64_t fallback) const { return o_.budget ? o_.budget : fallback; }

  AlgebraHandle primary() {
    inputs_["algebra"] = o_.algebra;
    auto a = load(o_.algebra);
    setField(a.get());
    return a;
  }

  Options& o_;
};

json Runner::run(const std::string& verb) {
  char* out = nullptr;
  field_ = o_.field;

  if (verb == "check") {
    auto a = primary();
    inputs_["identity"] = o_.identity;
    check(prelie_check_identity(a.get(), o_.identity.c_str(), &out));
    return take(out);
  }
  if (verb == "classify") {
    auto a = primary();
    inputs_["lattice"] = o_.lattice;
    check(prelie_classify(a.get(), o_.lattice ? 1 : 0, budget(1u << 16), &out));
    return take(out);
  }
  if (verb == "series") {
    auto a = primary();
    json r = json::object();
    for (const char* k : {"derived", "lower-central"}) {
      if (!o_.kind.empty() && o_.kind != k)
        continue;
      check(prelie_series(a.get(), k, &out));
      r[k] = take(out);
    }
    if (r.empty())
      throw Failure{PRELIE_ERR_USAGE, "--kind must be derived or lower-central"};
    inputs_["kind"] = o_.kind.empty() ? json("all") : json(o_.kind);
    return r;
  }
  if (verb == "closure" || verb == "centralizer") {
    auto a = primary();
    inputs_["I"] = o_.ideal;
    std::string i = readFile(o_.ideal);
    check(verb == "closure" ? prelie_ideal_closure(a.get(), i.c_str(), &out)
                            : prelie_centralizer(a.get(), i.c_str(), &out));
    return take(out);
  }
  if (verb == "commutator" || verb == "product") {
    auto a = primary();
    inputs_["I"] = o_.ideal;
    inputs_["J"] = o_.ideal2;
    std::string i = readFile(o_.ideal), j = readFile(o_.ideal2);
    check(verb == "commutator" ? prelie_commutator(a.get(), i.c_str(), j.c_str(), &out)
                               : prelie_submodule_product(a.get(), i.c_str(), j.c_str(), &out));
    return take(out);
  }
  if (verb == "center") {
    auto a = primary();
    check(prelie_center(a.get(), &out));
    return take(out);
  }
  if (verb == "ideals" || verb == "primes" || verb == "idempotents") {
    auto a = primary();
    std::uint64_t b = budget(1u << 16);
    inputs_["budget"] = b;
    check(verb == "ideals"   ? prelie_ideals(a.get(), b, &out)
          : verb == "primes" ? prelie_primes(a.get(), b, &out)
                             : prelie_idempotents(a.get(), b, &out));
    return take(out);
  }
  if (verb == "subadjacent" || verb == "opposite" || verb == "dorroh") {
    auto a = primary();
    prelie_algebra* raw = nullptr;
    char* report = nullptr;
    check(verb == "subadjacent" ? prelie_algebra_subadjacent(a.get(), &raw)
          : verb == "opposite"  ? prelie_algebra_opposite(a.get(), &raw)
                                : prelie_algebra_dorroh(a.get(), &raw, &report));
    AlgebraHandle b(raw);
    json r{{"algebra", emitAlgebra(b.get())}};
    if (report)
      r.update(take(report));
    return r;
  }
  if (verb == "map-check") {
    inputs_["map"] = o_.map;
    inputs_["domain"] = o_.domain;
    inputs_["property"] = o_.property;
    auto d = load(o_.domain);
    setField(d.get());
    AlgebraHandle c;
    if (!o_.codomain.empty()) {
      inputs_["codomain"] = o_.codomain;
      c = load(o_.codomain);
    }
    check(prelie_map_check(d.get(), c ? c.get() : d.get(), readFile(o_.map).c_str(),
                           o_.property.c_str(), &out));
    return take(out);
  }
  if (verb == "semidirect" || verb == "bimodule-check" || verb == "action-check") {
    inputs_["actor"] = o_.actor;
    inputs_["acted"] = o_.acted;
    inputs_["action"] = o_.action;
    auto b = load(o_.actor);
    auto i = load(o_.acted);
    setField(i.get());
    std::string act = readFile(o_.action);
    if (verb == "semidirect") {
      prelie_algebra* raw = nullptr;
      check(prelie_algebra_semidirect(b.get(), i.get(), act.c_str(), &raw));
      AlgebraHandle s(raw);
      return json{{"algebra", emitAlgebra(s.get())}};
    }
    check(verb == "bimodule-check" ? prelie_bimodule_check(b.get(), i.get(), act.c_str(), &out)
                                   : prelie_action_check(b.get(), i.get(), act.c_str(), &out));
    return take(out);
  }
  if (verb == "module-check") {
    auto a = primary();
    inputs_["module"] = o_.module;
    check(prelie_module_check(a.get(), readFile(o_.module).c_str(), &out));
    return take(out);
  }
  if (verb == "gallery") {
    inputs_["id"] = o_.gallery;
    inputs_["n"] = o_.size;
    prelie_algebra* raw = nullptr;
    check(prelie_algebra_gallery(o_.gallery.c_str(), o_.size, o_.field.c_str(), &raw));
    AlgebraHandle g(raw);
    return json{{"algebra", emitAlgebra(g.get())}};
  }
  if (verb == "trees enumerate") {
    inputs_["n"] = o_.n;
    check(prelie_trees_enumerate(o_.n, static_cast<unsigned>(budget(12)), &out));
    return take(out);
  }
  if (verb == "trees product") {
    inputs_["left"] = o_.left;
    inputs_["right"] = o_.right;
    auto operand = [](const std::string& s) {
      return !s.empty() && s.front() != '(' && s.front() != '{' ? readFile(s) : s;
    };
    std::string l = operand(o_.left), r = operand(o_.right);
    check(prelie_trees_product(l.c_str(), r.c_str(), o_.field.c_str(), &out));
    json result = take(out);
    field_ = fieldString(result.at("field"));
    return result;
  }
  if (verb == "trees algebra") {
    inputs_["truncate"] = o_.truncate;
    prelie_algebra* raw = nullptr;
    check(prelie_algebra_truncated_trees(o_.truncate, o_.field.c_str(), &raw));
    AlgebraHandle t(raw);
    return json{{"algebra", emitAlgebra(t.get())}};
  }
  throw Failure{PRELIE_ERR_USAGE, "unknown verb '" + verb + "'"};
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact computations with pre-Lie and other non-associative algebras"};
  app.require_subcommand(1);
  app.add_option("--field", o.field, "rational or gf:<p>, for inputs without a field");
  app.add_option("-o,--output", o.output, "write the emitted algebra here");
  app.add_option("--budget", o.budget, "override enumeration budgets");
  app.set_version_flag("--version", std::string(prelie_version()));
  app.fallthrough();

  auto withAlgebra = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("algebra", o.algebra, "algebra JSON file")->required();
    return sub;
  };

  withAlgebra("check", "verify an identity on basis triples")
      ->add_option("--identity", o.identity,
                   "pre-lie, right-symmetric, lie-admissible, associative, anticommutative, jacobi");
  withAlgebra("classify", "abelian, perfect, nilpotent, solvable, metabelian")
      ->add_flag("--lattice", o.lattice, "enumerate ideals to decide hyperabelian");
  withAlgebra("series", "derived and lower central series")
      ->add_option("--kind", o.kind, "derived or lower-central");
  withAlgebra("closure", "ideal generated by a set")->add_option("-I", o.ideal)->required();
  withAlgebra("centralizer", "largest ideal commuting with I")
      ->add_option("-I", o.ideal)
      ->required();
  for (const char* v : {"commutator", "product"}) {
    auto* sub = withAlgebra(v, std::string(v) == "commutator" ? "commutator [I, J]"
                                                              : "span of the products IJ");
    sub->add_option("-I", o.ideal)->required();
    sub->add_option("-J", o.ideal2)->required();
  }
  withAlgebra("center", "centralizer of the whole algebra");
  withAlgebra("ideals", "all ideals over a prime field");
  withAlgebra("primes", "prime and semiprime ideals over a prime field");
  withAlgebra("idempotents", "all idempotent elements over a prime field");
  withAlgebra("subadjacent", "commutator bracket algebra");
  withAlgebra("opposite", "algebra with reversed product");
  withAlgebra("dorroh", "adjoin a unit, with augmentation");
  withAlgebra("module-check", "verify a left module")->add_option("--module", o.module)->required();

  auto* mc = app.add_subcommand("map-check", "verify a property of a linear map");
  mc->add_option("map", o.map, "map JSON file")->required();
  mc->add_option("--domain", o.domain)->required();
  mc->add_option("--codomain", o.codomain, "defaults to the domain");
  mc->add_option("--property", o.property,
                 "hom, antihom, pre-morphism, derivation, pre-derivation")
      ->required();

  for (const char* v : {"semidirect", "bimodule-check", "action-check"}) {
    auto* sub = app.add_subcommand(v, std::string(v) == "semidirect"
                                          ? "semidirect product from an action"
                                          : "verify an action pair");
    sub->add_option("--actor", o.actor)->required();
    sub->add_option("--acted", o.acted)->required();
    sub->add_option("--action", o.action)->required();
  }

  auto* gal = app.add_subcommand("gallery", "built-in algebras");
  gal->add_option("id", o.gallery,
                  "rank2, triangular, matrix, abelian, field, a8, complex, split")
      ->required();
  gal->add_option("-n", o.size, "size parameter");

  auto* trees = app.add_subcommand("trees", "rooted trees");
  trees->require_subcommand(1);
  trees->add_subcommand("enumerate", "trees with n vertices")
      ->add_option("-n", o.n)
      ->required();
  auto* tp = trees->add_subcommand("product", "grafting product of two trees or tree sums");
  tp->add_option("left", o.left)->required();
  tp->add_option("right", o.right)->required();
  trees->add_subcommand("algebra", "truncated free algebra")
      ->add_option("--truncate", o.truncate, "kill trees with at least this many vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : PRELIE_ERR_USAGE;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  if (verb == "trees")
    verb += " " + trees->get_subcommands().front()->get_name();

  Runner runner(o);
  try {
    json result = runner.run(verb);
    json report{{"verb", verb},
                {"inputs", runner.inputs_},
                {"result", result},
                {"version", prelie_version()},
                {"field", runner.field_}};
    std::cout << report.dump(2) << "\n";
    std::cout.flush();
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.status;
  } catch (const json::exception& e) {
    std::cerr << "error: Parse: " << e.what() << "\n";
    return PRELIE_ERR_INVALID;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return PRELIE_ERR_INTERNAL;
  }
}
