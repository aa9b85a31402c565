#include "json_io.hpp"

#include <string>

#include "prelie/error.hpp"

namespace prelie::json_io {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::Parse, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t indexFromJson(const Algebra& a, const json& j) {
  if (!j.is_string())
    fail(ErrorCode::Parse, "basis references must be names");
  auto idx = a.indexOf(j.get<std::string>());
  if (!idx)
    fail(ErrorCode::Parse, "unknown basis name '" + j.get<std::string>() + "' in '" + a.name() +
                               "'");
  return *idx;
}

void checkAlgebraName(const json& j, const char* key, const Algebra& a) {
  if (j.contains(key) && j.at(key).is_string() && j.at(key).get<std::string>() != a.name())
    fail(ErrorCode::AlgebraMismatch, std::string("'") + key + "' names '" +
                                         j.at(key).get<std::string>() + "', expected '" +
                                         a.name() + "'");
}

std::vector<Matrix> matricesFromJson(const FieldSpec& f, const json& j, std::size_t count,
                                     std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != count)
    fail(ErrorCode::ShapeMismatch, std::string(what) + " must list " + std::to_string(count) +
                                       " matrices");
  std::vector<Matrix> out;
  for (const auto& m : j)
    out.push_back(matrixFromJson(f, m, size, size));
  return out;
}

} // namespace

json toJson(const FieldSpec& f) {
  if (f.isPrimeField())
    return json{{"kind", "prime"}, {"p", f.p}};
  return json{{"kind", "rational"}};
}

FieldSpec fieldFromJson(const json& j) {
  if (j.is_string())
    return FieldSpec::parse(j.get<std::string>());
  const json& kind = member(j, "kind");
  if (!kind.is_string())
    fail(ErrorCode::Parse, "field kind must be a string");
  std::string k = kind.get<std::string>();
  if (k == "rational")
    return FieldSpec::rationals();
  if (k == "prime") {
    const json& p = member(j, "p");
    if (!p.is_number_unsigned())
      fail(ErrorCode::Parse, "field p must be a positive integer");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  fail(ErrorCode::Parse, "unknown field kind '" + k + "'");
}

json toJson(const Scalar& s) { return s.toString(); }

Scalar scalarFromJson(const FieldSpec& f, const json& j) {
  if (j.is_string())
    return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer())
    return Scalar::parse(f, std::to_string(j.get<long long>()));
  fail(ErrorCode::Parse, "scalars must be strings or integers, got " + j.dump());
}

json toJson(const Vector& v) {
  json out = json::array();
  for (const auto& s : v.entries())
    out.push_back(toJson(s));
  return out;
}

Vector vectorFromJson(const FieldSpec& f, const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected)
    fail(ErrorCode::ShapeMismatch, "expected a vector of length " + std::to_string(expected));
  std::vector<Scalar> e;
  for (const auto& s : j)
    e.push_back(scalarFromJson(f, s));
  return Vector(f, std::move(e));
}

json toJson(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    out.push_back(toJson(m.row(r)));
  return out;
}

Matrix matrixFromJson(const FieldSpec& f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    fail(ErrorCode::ShapeMismatch, "expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = vectorFromJson(f, j[r], cols);
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = row[c];
  }
  return m;
}

json toJson(const Algebra& a) {
  json products = json::array();
  for (const auto& e : a.entries()) {
    json value = json::object();
    for (const auto& t : e.terms)
      value[a.basisNames()[t.index]] = toJson(t.coeff);
    products.push_back(json{{"left", a.basisNames()[e.left]},
                            {"right", a.basisNames()[e.right]},
                            {"value", value}});
  }
  return json{{"name", a.name()},
              {"field", toJson(a.field())},
              {"dim", a.dim()},
              {"basis", a.basisNames()},
              {"products", products}};
}

Algebra algebraFromJson(const json& j, const FieldSpec& fallback) {
  if (!j.is_object())
    fail(ErrorCode::Parse, "an algebra document must be a JSON object");
  FieldSpec f = j.contains("field") ? fieldFromJson(j.at("field")) : fallback;
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : "A";
  const json& basis = member(j, "basis");
  if (!basis.is_array())
    fail(ErrorCode::Parse, "basis must be an array of names");
  std::vector<std::string> names;
  for (const auto& b : basis) {
    if (!b.is_string())
      fail(ErrorCode::Parse, "basis names must be strings");
    names.push_back(b.get<std::string>());
  }
  if (j.contains("dim") && (!j.at("dim").is_number_unsigned() ||
                            j.at("dim").get<std::size_t>() != names.size()))
    fail(ErrorCode::Parse, "dim disagrees with the basis length");

  Algebra bare(name, f, names);
  Algebra::Table table;
  if (j.contains("products")) {
    const json& prods = j.at("products");
    if (!prods.is_array())
      fail(ErrorCode::Parse, "products must be an array");
    for (const auto& p : prods) {
      std::size_t l = indexFromJson(bare, member(p, "left"));
      std::size_t r = indexFromJson(bare, member(p, "right"));
      Vector v = elementFromJson(bare, member(p, "value"));
      if (!table.emplace(std::pair{l, r}, std::move(v)).second)
        fail(ErrorCode::Parse, "product " + names[l] + "*" + names[r] + " given twice");
    }
  }
  return Algebra(std::move(name), f, std::move(names), table);
}

json elementToJson(const Algebra& a, const Vector& v) {
  json out = json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].isZero())
      out[a.basisNames()[k]] = toJson(v[k]);
  return out;
}

Vector elementFromJson(const Algebra& a, const json& j) {
  if (!j.is_object())
    fail(ErrorCode::Parse, "elements are objects {basis name: scalar}");
  Vector v = a.zero();
  for (const auto& [key, value] : j.items())
    v[indexFromJson(a, json(key))] += scalarFromJson(a.field(), value);
  return v;
}

json subspaceToJson(const Algebra& a, const Subspace& s) {
  json basis = json::array();
  json elements = json::array();
  for (const auto& b : s.basis()) {
    basis.push_back(toJson(b));
    elements.push_back(elementToJson(a, b));
  }
  return json{{"ambientDim", s.ambientDim()}, {"basis", basis}, {"dim", s.dim()},
              {"elements", elements}};
}

Subspace spanFromJson(const Algebra& a, const json& j) {
  checkAlgebraName(j, "algebra", a);
  const json& gens = member(j, "generators");
  if (!gens.is_array())
    fail(ErrorCode::Parse, "generators must be an array");
  std::vector<Vector> vs;
  for (const auto& g : gens)
    vs.push_back(elementFromJson(a, g));
  return Subspace::echelonize(a.field(), a.dim(), vs);
}

json verdictToJson(const Verdict& v, const std::vector<std::string>& names) {
  json out{{"holds", v.holds}};
  if (v.witness) {
    json basis = json::array();
    for (std::size_t i : v.witness->basis)
      basis.push_back(i < names.size() ? json(names[i]) : json(i));
    out["witness"] = json{{"basis", basis}, {"residual", toJson(v.witness->residual)}};
  }
  return out;
}

json actionVerdictToJson(const ActionVerdict& v, const Algebra& actor, const Algebra& acted) {
  json out{{"holds", v.holds}};
  if (v.failedCondition)
    out["failedCondition"] = std::string(1, *v.failedCondition);
  if (v.witness) {
    json basis = json::array();
    const auto& idx = v.witness->basis;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Algebra& owner = k == 0 || *v.failedCondition <= 'b' ? actor : acted;
      basis.push_back(owner.basisNames().at(idx[k]));
    }
    out["witness"] = json{{"basis", basis}, {"residual", toJson(v.witness->residual)}};
  }
  return out;
}

LinearMap mapFromJson(const json& j, const AlgebraPtr& domain, const AlgebraPtr& codomain) {
  checkAlgebraName(j, "domain", *domain);
  checkAlgebraName(j, "codomain", *codomain);
  return LinearMap(domain, codomain,
                   matrixFromJson(domain->field(), member(j, "matrix"), codomain->dim(),
                                  domain->dim()));
}

json toJson(const LinearMap& f) {
  return json{{"domain", f.domain().name()},
              {"codomain", f.codomain().name()},
              {"matrix", toJson(f.matrix())}};
}

ActionPair actionFromJson(const json& j, const AlgebraPtr& actor, const AlgebraPtr& acted) {
  checkAlgebraName(j, "actor", *actor);
  checkAlgebraName(j, "acted", *acted);
  if (!(actor->field() == acted->field()))
    fail(ErrorCode::FieldMismatch, "actor and acted algebras over different fields");
  const FieldSpec& f = actor->field();
  ActionPair p{actor, acted,
               matricesFromJson(f, member(j, "lambda"), actor->dim(), acted->dim(), "lambda"),
               matricesFromJson(f, member(j, "rho"), actor->dim(), acted->dim(), "rho")};
  validateAction(p);
  return p;
}

json toJson(const ActionPair& p) {
  json lam = json::array(), rho = json::array();
  for (const auto& m : p.lambda)
    lam.push_back(toJson(m));
  for (const auto& m : p.rho)
    rho.push_back(toJson(m));
  return json{{"actor", p.actor->name()}, {"acted", p.acted->name()}, {"lambda", lam},
              {"rho", rho}};
}

ModuleStructure moduleFromJson(const json& j, const AlgebraPtr& a) {
  checkAlgebraName(j, "algebra", *a);
  const json& md = member(j, "moduleDim");
  if (!md.is_number_unsigned())
    fail(ErrorCode::Parse, "moduleDim must be a nonnegative integer");
  std::size_t m = md.get<std::size_t>();
  return ModuleStructure{a, m, matricesFromJson(a->field(), member(j, "lambda"), a->dim(), m,
                                                "lambda")};
}

json toJson(const TreeSum& t) {
  json terms = json::object();
  for (const auto& [tree, c] : t.terms())
    terms[tree] = toJson(c);
  return json{{"field", toJson(t.field())}, {"terms", terms}};
}

TreeSum treeSumFromJson(const json& j, const FieldSpec& fallback) {
  if (j.is_string())
    return TreeSum::single(fallback, RootedTree::parse(j.get<std::string>()));
  FieldSpec f = j.contains("field") ? fieldFromJson(j.at("field")) : fallback;
  const json& terms = member(j, "terms");
  if (!terms.is_object())
    fail(ErrorCode::Parse, "terms must be an object {tree: scalar}");
  TreeSum out(f);
  for (const auto& [tree, c] : terms.items())
    out.add(RootedTree::parse(tree), scalarFromJson(f, c));
  return out;
}

json toJson(const SeriesReport& r) {
  return json{{"kind", seriesName(r.kind)},
              {"dims", r.dims()},
              {"stabilized", r.stabilized},
              {"terminatesAtZero", r.terminatesAtZero}};
}

json toJson(const ClassificationReport& r) {
  json out{{"abelian", r.abelian},
           {"perfect", r.perfect},
           {"nilpotent", r.nilpotent},
           {"solvable", r.solvable},
           {"metabelian", r.metabelian},
           {"lowerCentralDims", r.lowerCentralDims},
           {"derivedDims", r.derivedDims}};
  out["nilpotencyClass"] = r.nilpotencyClass ? json(*r.nilpotencyClass) : json(nullptr);
  out["derivedLength"] = r.derivedLength ? json(*r.derivedLength) : json(nullptr);
  out["hyperabelian"] = r.hyperabelian ? json(*r.hyperabelian) : json(nullptr);
  return out;
}

} // namespace prelie::json_io
