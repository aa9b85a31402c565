#include "prelie/prelie.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json_io.hpp"
#include "prelie/error.hpp"

struct prelie_algebra {
  prelie::AlgebraPtr ptr;
};

namespace {

using prelie::ErrorCode;
using prelie::json_io::json;
namespace jio = prelie::json_io;

thread_local std::string lastError;
thread_local std::string lastCode;

prelie_status record(prelie_status s, std::string code, std::string message) {
  lastCode = std::move(code);
  lastError = std::move(message);
  return s;
}

prelie_status statusOf(ErrorCode c) {
  switch (c) {
  case ErrorCode::BudgetExceeded: return PRELIE_ERR_BUDGET;
  case ErrorCode::Internal: return PRELIE_ERR_INTERNAL;
  default: return PRELIE_ERR_INVALID;
  }
}

// Runs body, translating exceptions into status codes at the C boundary.
template <class F>
prelie_status guarded(F&& body) {
  try {
    lastError.clear();
    lastCode.clear();
    body();
    return PRELIE_OK;
  } catch (const prelie::Error& e) {
    return record(statusOf(e.code()), prelie::errorCodeName(e.code()), e.what());
  } catch (const json::exception& e) {
    return record(PRELIE_ERR_INVALID, "Parse", e.what());
  } catch (const std::bad_alloc&) {
    return record(PRELIE_ERR_INTERNAL, "Internal", "out of memory");
  } catch (const std::exception& e) {
    return record(PRELIE_ERR_INTERNAL, "Internal", e.what());
  }
}

char* copyOut(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const json& j) { *out = copyOut(j.dump()); }

json parseText(const char* text) {
  return json::parse(text);
}

prelie::FieldSpec fieldOr(const char* text) {
  return text ? prelie::FieldSpec::parse(text) : prelie::FieldSpec::rationals();
}

prelie_algebra* wrap(prelie::Algebra a) { return new prelie_algebra{prelie::share(std::move(a))}; }

#define REQUIRE(cond)                                                                              \
  do {                                                                                             \
    if (!(cond))                                                                                   \
      return record(PRELIE_ERR_USAGE, "Usage", "null argument: " #cond);                           \
  } while (0)

} // namespace

extern "C" {

const char* prelie_version(void) { return PRELIE_VERSION; }

const char* prelie_last_error(void) { return lastError.c_str(); }

const char* prelie_last_error_code(void) { return lastCode.c_str(); }

void prelie_string_free(char* s) { std::free(s); }

prelie_status prelie_algebra_parse(const char* text, const char* default_field,
                                   prelie_algebra** out) {
  REQUIRE(text && out);
  return guarded([&] { *out = wrap(jio::algebraFromJson(parseText(text), fieldOr(default_field))); });
}

prelie_status prelie_algebra_gallery(const char* id, unsigned n, const char* field,
                                     prelie_algebra** out) {
  REQUIRE(id && out);
  return guarded([&] { *out = wrap(prelie::galleryAlgebra(id, n, fieldOr(field))); });
}

prelie_status prelie_algebra_truncated_trees(unsigned max_vertices, const char* field,
                                             prelie_algebra** out) {
  REQUIRE(out);
  return guarded([&] { *out = wrap(prelie::truncatedFreeAlgebra(max_vertices, fieldOr(field))); });
}

prelie_status prelie_algebra_subadjacent(const prelie_algebra* a, prelie_algebra** out) {
  REQUIRE(a && out);
  return guarded([&] { *out = wrap(prelie::subAdjacent(*a->ptr)); });
}

prelie_status prelie_algebra_opposite(const prelie_algebra* a, prelie_algebra** out) {
  REQUIRE(a && out);
  return guarded([&] { *out = wrap(prelie::opposite(*a->ptr)); });
}

prelie_status prelie_algebra_dorroh(const prelie_algebra* a, prelie_algebra** out,
                                    char** out_report) {
  REQUIRE(a && out);
  return guarded([&] {
    prelie::AugmentedAlgebra aug = prelie::dorrohExtend(*a->ptr);
    json report{{"unit", jio::elementToJson(*aug.algebra, aug.unit)},
                {"augmentation", jio::toJson(aug.augmentation)},
                {"roundTrip", prelie::dorrohRoundTrip(aug).sameStructure(*a->ptr)}};
    if (out_report)
      emit(out_report, report);
    *out = new prelie_algebra{aug.algebra};
  });
}

prelie_status prelie_algebra_semidirect(const prelie_algebra* actor, const prelie_algebra* acted,
                                        const char* action_json, prelie_algebra** out) {
  REQUIRE(actor && acted && action_json && out);
  return guarded([&] {
    auto pair = jio::actionFromJson(parseText(action_json), actor->ptr, acted->ptr);
    *out = wrap(prelie::semidirectProduct(pair));
  });
}

prelie_status prelie_algebra_to_json(const prelie_algebra* a, char** out) {
  REQUIRE(a && out);
  return guarded([&] { emit(out, jio::toJson(*a->ptr)); });
}

size_t prelie_algebra_dim(const prelie_algebra* a) { return a ? a->ptr->dim() : 0; }

int prelie_algebra_equal(const prelie_algebra* a, const prelie_algebra* b) {
  return a && b && *a->ptr == *b->ptr ? 1 : 0;
}

void prelie_algebra_free(prelie_algebra* a) { delete a; }

prelie_status prelie_check_identity(const prelie_algebra* a, const char* identity, char** out) {
  REQUIRE(a && identity && out);
  return guarded([&] {
    auto kind = prelie::parseIdentityKind(identity);
    json r = jio::verdictToJson(prelie::checkIdentity(*a->ptr, kind), a->ptr->basisNames());
    r["identity"] = prelie::identityName(kind);
    emit(out, r);
  });
}

prelie_status prelie_classify(const prelie_algebra* a, int with_lattice, uint64_t budget,
                              char** out) {
  REQUIRE(a && out);
  return guarded([&] {
    if (with_lattice) {
      if (!a->ptr->field().isPrimeField())
        prelie::fail(ErrorCode::IncompleteLattice,
                     "hyperabelian needs the complete ideal lattice of a prime-field algebra");
      auto lattice = prelie::enumerateIdeals(*a->ptr, budget);
      emit(out, jio::toJson(prelie::classify(*a->ptr, &lattice)));
    } else {
      emit(out, jio::toJson(prelie::classify(*a->ptr)));
    }
  });
}

prelie_status prelie_series(const prelie_algebra* a, const char* kind, char** out) {
  REQUIRE(a && kind && out);
  return guarded([&] {
    auto report = prelie::series(*a->ptr, prelie::parseSeriesKind(kind));
    json r = jio::toJson(report);
    json terms = json::array();
    for (const auto& t : report.terms)
      terms.push_back(jio::subspaceToJson(*a->ptr, t));
    r["terms"] = terms;
    emit(out, r);
  });
}

prelie_status prelie_ideal_closure(const prelie_algebra* a, const char* ideal_json, char** out) {
  REQUIRE(a && ideal_json && out);
  return guarded([&] {
    auto span = jio::spanFromJson(*a->ptr, parseText(ideal_json));
    emit(out, jio::subspaceToJson(*a->ptr, prelie::idealClosure(*a->ptr, span)));
  });
}

prelie_status prelie_submodule_product(const prelie_algebra* a, const char* i_json,
                                       const char* j_json, char** out) {
  REQUIRE(a && i_json && j_json && out);
  return guarded([&] {
    auto i = jio::spanFromJson(*a->ptr, parseText(i_json));
    auto j = jio::spanFromJson(*a->ptr, parseText(j_json));
    emit(out, jio::subspaceToJson(*a->ptr, prelie::submoduleProduct(*a->ptr, i, j)));
  });
}

prelie_status prelie_commutator(const prelie_algebra* a, const char* i_json, const char* j_json,
                                char** out) {
  REQUIRE(a && i_json && j_json && out);
  return guarded([&] {
    auto i = jio::spanFromJson(*a->ptr, parseText(i_json));
    auto j = jio::spanFromJson(*a->ptr, parseText(j_json));
    emit(out, jio::subspaceToJson(*a->ptr, prelie::commutator(*a->ptr, i, j)));
  });
}

prelie_status prelie_center(const prelie_algebra* a, char** out) {
  REQUIRE(a && out);
  return guarded([&] { emit(out, jio::subspaceToJson(*a->ptr, prelie::center(*a->ptr))); });
}

prelie_status prelie_centralizer(const prelie_algebra* a, const char* i_json, char** out) {
  REQUIRE(a && i_json && out);
  return guarded([&] {
    auto i = jio::spanFromJson(*a->ptr, parseText(i_json));
    emit(out, jio::subspaceToJson(*a->ptr, prelie::centralizer(*a->ptr, i)));
  });
}

prelie_status prelie_ideals(const prelie_algebra* a, uint64_t budget, char** out) {
  REQUIRE(a && out);
  return guarded([&] {
    auto lattice = prelie::enumerateIdeals(*a->ptr, budget);
    json list = json::array();
    for (const auto& s : lattice.ideals)
      list.push_back(jio::subspaceToJson(*a->ptr, s));
    emit(out, json{{"complete", lattice.complete}, {"count", lattice.ideals.size()},
                   {"ideals", list}});
  });
}

prelie_status prelie_primes(const prelie_algebra* a, uint64_t budget, char** out) {
  REQUIRE(a && out);
  return guarded([&] {
    auto lattice = prelie::enumerateIdeals(*a->ptr, budget);
    prelie::PrimalityOracle oracle(*a->ptr, lattice);
    auto primes = oracle.primeIdeals(prelie::PrimeNotion::Commutator);
    bool agree = oracle.primeIdeals(prelie::PrimeNotion::Product) == primes &&
                 oracle.primeIdeals(prelie::PrimeNotion::GeneratedProduct) == primes;
    if (!agree)
      prelie::fail(ErrorCode::Internal, "the three prime notions select different ideals");
    json p = json::array(), s = json::array();
    for (const auto& x : primes)
      p.push_back(jio::subspaceToJson(*a->ptr, x));
    for (const auto& x : oracle.semiprimeIdeals())
      s.push_back(jio::subspaceToJson(*a->ptr, x));
    emit(out, json{{"latticeSize", lattice.ideals.size()},
                   {"primes", p},
                   {"primeCount", p.size()},
                   {"semiprimes", s},
                   {"semiprimeCount", s.size()},
                   {"hyperabelian", primes.empty()}});
  });
}

prelie_status prelie_idempotents(const prelie_algebra* a, uint64_t budget, char** out) {
  REQUIRE(a && out);
  return guarded([&] {
    auto list = prelie::idempotentElements(*a->ptr, budget);
    json elems = json::array();
    for (const auto& e : list)
      elems.push_back(jio::elementToJson(*a->ptr, e));
    emit(out, json{{"count", list.size()}, {"elements", elems}});
  });
}

prelie_status prelie_map_check(const prelie_algebra* domain, const prelie_algebra* codomain,
                               const char* map_json, const char* property, char** out) {
  REQUIRE(domain && codomain && map_json && property && out);
  return guarded([&] {
    auto f = jio::mapFromJson(parseText(map_json), domain->ptr, codomain->ptr);
    auto prop = prelie::parseMapProperty(property);
    json r = jio::verdictToJson(prelie::checkMapProperty(f, prop), domain->ptr->basisNames());
    r["property"] = prelie::mapPropertyName(prop);
    emit(out, r);
  });
}

prelie_status prelie_trees_enumerate(unsigned n, unsigned budget, char** out) {
  REQUIRE(out);
  return guarded([&] {
    json trees = json::array();
    for (const auto& t : prelie::enumerateTrees(n, budget))
      trees.push_back(t.str());
    emit(out, json{{"count", trees.size()}, {"n", n}, {"trees", trees}});
  });
}

prelie_status prelie_trees_product(const char* left, const char* right, const char* field,
                                   char** out) {
  REQUIRE(left && right && out);
  return guarded([&] {
    auto operand = [&](const char* text) {
      std::string s(text);
      json j = !s.empty() && s.front() == '(' ? json(s) : parseText(text);
      return jio::treeSumFromJson(j, fieldOr(field));
    };
    emit(out, jio::toJson(prelie::treeProduct(operand(left), operand(right))));
  });
}

prelie_status prelie_module_check(const prelie_algebra* a, const char* module_json, char** out) {
  REQUIRE(a && module_json && out);
  return guarded([&] {
    auto m = jio::moduleFromJson(parseText(module_json), a->ptr);
    std::vector<std::string> names = a->ptr->basisNames();
    auto v = prelie::checkModule(m);
    json r{{"holds", v.holds}};
    if (v.witness) {
      const auto& w = v.witness->basis;
      r["witness"] = json{{"basis", {names[w[0]], names[w[1]], "m" + std::to_string(w[2] + 1)}},
                          {"residual", jio::toJson(v.witness->residual)}};
    }
    emit(out, r);
  });
}

prelie_status prelie_action_check(const prelie_algebra* actor, const prelie_algebra* acted,
                                  const char* action_json, char** out) {
  REQUIRE(actor && acted && action_json && out);
  return guarded([&] {
    auto pair = jio::actionFromJson(parseText(action_json), actor->ptr, acted->ptr);
    emit(out, jio::actionVerdictToJson(prelie::checkAction(pair), *actor->ptr, *acted->ptr));
  });
}

prelie_status prelie_bimodule_check(const prelie_algebra* actor, const prelie_algebra* acted,
                                    const char* action_json, char** out) {
  REQUIRE(actor && acted && action_json && out);
  return guarded([&] {
    auto pair = jio::actionFromJson(parseText(action_json), actor->ptr, acted->ptr);
    emit(out, jio::actionVerdictToJson(prelie::checkBimodule(pair), *actor->ptr, *acted->ptr));
  });
}

} // extern "C"
