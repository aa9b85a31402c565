#include "prelie/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "prelie/error.hpp"
#include "prelie/trees.hpp"

namespace prelie {

namespace {

std::string dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void requireSquareFamily(const std::vector<Matrix>& maps, std::size_t count, std::size_t size,
                         const FieldSpec& f, const char* what) {
  if (maps.size() != count)
    fail(ErrorCode::ShapeMismatch, std::string(what) + " has " + std::to_string(maps.size()) +
                                       " matrices, expected " + std::to_string(count));
  for (const auto& m : maps) {
    if (m.rows() != size || m.cols() != size)
      fail(ErrorCode::ShapeMismatch, std::string(what) + " matrix is " + dims(m) +
                                         ", expected " + std::to_string(size) + "x" +
                                         std::to_string(size));
    if (!(m.field() == f))
      fail(ErrorCode::FieldMismatch, std::string(what) + " matrix over the wrong field");
  }
}

// Names of b that collide with names of a get primes appended.
std::vector<std::string> joinNames(const Algebra& a, const Algebra& b) {
  std::set<std::string> used(a.basisNames().begin(), a.basisNames().end());
  std::vector<std::string> names = a.basisNames();
  for (std::string n : b.basisNames()) {
    while (used.count(n))
      n += "'";
    used.insert(n);
    names.push_back(std::move(n));
  }
  return names;
}

Vector concat(const Vector& x, const Vector& y) {
  std::vector<Scalar> e(x.entries().begin(), x.entries().end());
  e.insert(e.end(), y.entries().begin(), y.entries().end());
  return Vector(x.field(), std::move(e));
}

Vector slice(const Vector& v, std::size_t from, std::size_t count) {
  return Vector(v.field(), std::vector<Scalar>(v.entries().begin() + from,
                                               v.entries().begin() + from + count));
}

ActionVerdict failed(char condition, std::vector<std::size_t> basis, Vector residual) {
  return {false, condition, Witness{std::move(basis), std::move(residual)}};
}

std::optional<ActionVerdict> checkAB(const ActionPair& pair) {
  const Algebra& b = *pair.actor;
  const auto& lam = pair.lambda;
  const auto& rho = pair.rho;
  for (std::size_t x = 0; x < b.dim(); ++x)
    for (std::size_t y = x + 1; y < b.dim(); ++y) {
      Matrix r = actionOf(lam, b.basisProduct(x, y)) - lam[x] * lam[y] -
                 (actionOf(lam, b.basisProduct(y, x)) - lam[y] * lam[x]);
      if (!r.isZero())
        return failed('a', {x, y}, r.flatten());
    }
  for (std::size_t x = 0; x < b.dim(); ++x)
    for (std::size_t y = 0; y < b.dim(); ++y) {
      Matrix r = rho[x] * lam[y] - lam[y] * rho[x] - rho[x] * rho[y] +
                 actionOf(rho, b.basisProduct(y, x));
      if (!r.isZero())
        return failed('b', {x, y}, r.flatten());
    }
  return std::nullopt;
}

} // namespace

void validateAction(const ActionPair& pair) {
  if (!pair.actor || !pair.acted)
    fail(ErrorCode::ShapeMismatch, "action without actor or acted algebra");
  const FieldSpec& f = pair.actor->field();
  if (!(pair.acted->field() == f))
    fail(ErrorCode::FieldMismatch, "actor and acted algebras over different fields");
  requireSquareFamily(pair.lambda, pair.actor->dim(), pair.acted->dim(), f, "lambda");
  requireSquareFamily(pair.rho, pair.actor->dim(), pair.acted->dim(), f, "rho");
}

Matrix actionOf(const std::vector<Matrix>& maps, const Vector& b) {
  if (maps.size() != b.size())
    fail(ErrorCode::ShapeMismatch, "element does not match the action");
  if (maps.empty())
    fail(ErrorCode::ShapeMismatch, "empty action");
  Matrix out(b.field(), maps[0].rows(), maps[0].cols());
  for (std::size_t k = 0; k < b.size(); ++k)
    if (!b[k].isZero())
      out += b[k] * maps[k];
  return out;
}

ActionVerdict checkAction(const ActionPair& pair) {
  validateAction(pair);
  if (auto v = checkAB(pair))
    return *v;
  const Algebra& b = *pair.actor;
  const Algebra& i = *pair.acted;
  for (std::size_t a = 0; a < b.dim(); ++a) {
    const Matrix& la = pair.lambda[a];
    const Matrix& ra = pair.rho[a];
    for (std::size_t x = 0; x < i.dim(); ++x)
      for (std::size_t y = 0; y < i.dim(); ++y) {
        Vector ex = i.basisVector(x), ey = i.basisVector(y);
        Vector r = i.multiply(la.column(x), ey) - la.apply(i.basisProduct(x, y)) -
                   i.multiply(ra.column(x), ey) + i.multiply(ex, la.column(y));
        if (!r.isZero())
          return failed('c', {a, x, y}, std::move(r));
      }
  }
  for (std::size_t a = 0; a < b.dim(); ++a) {
    const Matrix& ra = pair.rho[a];
    for (std::size_t x = 0; x < i.dim(); ++x)
      for (std::size_t y = x + 1; y < i.dim(); ++y) {
        Vector ex = i.basisVector(x), ey = i.basisVector(y);
        Vector r = ra.apply(i.basisProduct(x, y)) - i.multiply(ex, ra.column(y)) -
                   ra.apply(i.basisProduct(y, x)) + i.multiply(ey, ra.column(x));
        if (!r.isZero())
          return failed('d', {a, x, y}, std::move(r));
      }
  }
  return {};
}

ActionVerdict checkBimodule(const ActionPair& pair) {
  validateAction(pair);
  if (!pair.acted->isAbelian())
    fail(ErrorCode::NotAbelian, "a bimodule needs an acted space with zero multiplication");
  if (auto v = checkAB(pair))
    return *v;
  return {};
}

Algebra semidirectProduct(const ActionPair& pair) {
  ActionVerdict v = checkAction(pair);
  if (!v.holds)
    fail(ErrorCode::ActionInvalid, std::string("action violates condition (") +
                                       *v.failedCondition + ")");
  const Algebra& i = *pair.acted;
  const Algebra& b = *pair.actor;
  if (!checkIdentity(i, IdentityKind::PreLie).holds || !checkIdentity(b, IdentityKind::PreLie).holds)
    fail(ErrorCode::NotPreLie, "semidirect product needs pre-Lie factors");
  const std::size_t n = i.dim();
  return Algebra::fromProduct(
      i.name() + "><" + b.name(), i.field(), joinNames(i, b), [&](std::size_t x, std::size_t y) {
        // (i, b) * (j, c) on basis vectors
        Vector top = i.zero();
        Vector bottom = b.zero();
        if (x < n && y < n)
          top = i.basisProduct(x, y);
        else if (x >= n && y < n)
          top = pair.lambda[x - n].column(y);
        else if (x < n && y >= n)
          top = pair.rho[y - n].column(x);
        else
          bottom = b.basisProduct(x - n, y - n);
        return concat(top, bottom);
      });
}

Algebra directProduct(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field()))
    fail(ErrorCode::FieldMismatch, "direct product of algebras over different fields");
  const std::size_t n = a.dim();
  return Algebra::fromProduct(a.name() + "x" + b.name(), a.field(), joinNames(a, b),
                              [&](std::size_t x, std::size_t y) {
                                if (x < n && y < n)
                                  return concat(a.basisProduct(x, y), b.zero());
                                if (x >= n && y >= n)
                                  return concat(a.zero(), b.basisProduct(x - n, y - n));
                                return concat(a.zero(), b.zero());
                              });
}

ActionPair extractAction(const Algebra& c, std::size_t actedDim) {
  const std::size_t n = actedDim;
  if (n > c.dim())
    fail(ErrorCode::ShapeMismatch, "acted part larger than the algebra");
  std::vector<Vector> iBasis, bBasis;
  for (std::size_t k = 0; k < c.dim(); ++k)
    (k < n ? iBasis : bBasis).push_back(c.basisVector(k));
  Subspace iSpace = Subspace::echelonize(c.field(), c.dim(), iBasis);
  Subspace bSpace = Subspace::echelonize(c.field(), c.dim(), bBasis);
  if (!isIdealSubspace(c, iSpace))
    fail(ErrorCode::NotAnIdeal, "leading coordinates do not span an ideal");
  if (!isSubalgebraSubspace(c, bSpace))
    fail(ErrorCode::NotSubalgebra, "trailing coordinates do not span a subalgebra");

  std::vector<std::string> iNames(c.basisNames().begin(), c.basisNames().begin() + n);
  std::vector<std::string> bNames(c.basisNames().begin() + n, c.basisNames().end());
  auto acted = share(Algebra::fromProduct(c.name() + ".ideal", c.field(), iNames,
                                          [&](std::size_t x, std::size_t y) {
                                            return slice(c.basisProduct(x, y), 0, n);
                                          }));
  auto actor = share(Algebra::fromProduct(c.name() + ".complement", c.field(), bNames,
                                          [&](std::size_t x, std::size_t y) {
                                            return slice(c.basisProduct(n + x, n + y), n,
                                                         c.dim() - n);
                                          }));
  ActionPair pair{actor, acted, {}, {}};
  for (std::size_t b = 0; b < actor->dim(); ++b) {
    Matrix lam(c.field(), n, n), rho(c.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vector l = c.basisProduct(n + b, j);
      Vector r = c.basisProduct(j, n + b);
      for (std::size_t k = 0; k < n; ++k) {
        lam(k, j) = l[k];
        rho(k, j) = r[k];
      }
    }
    pair.lambda.push_back(std::move(lam));
    pair.rho.push_back(std::move(rho));
  }
  return pair;
}

LinearMap complementProjection(const AlgebraPtr& c, std::size_t actedDim) {
  Matrix m(c->field(), c->dim(), c->dim());
  for (std::size_t k = actedDim; k < c->dim(); ++k)
    m(k, k) = Scalar::one(c->field());
  return LinearMap(c, c, std::move(m));
}

Verdict checkModule(const ModuleStructure& m) {
  if (!m.algebra)
    fail(ErrorCode::ShapeMismatch, "module without an algebra");
  const Algebra& a = *m.algebra;
  requireSquareFamily(m.lambda, a.dim(), m.moduleDim, a.field(), "lambda");

  Verdict direct = Verdict::pass();
  for (std::size_t x = 0; x < a.dim() && direct.holds; ++x)
    for (std::size_t y = x + 1; y < a.dim() && direct.holds; ++y)
      for (std::size_t k = 0; k < m.moduleDim; ++k) {
        Vector e = Vector::unit(a.field(), m.moduleDim, k);
        Vector r = actionOf(m.lambda, a.basisProduct(x, y)).apply(e) -
                   m.lambda[x].apply(m.lambda[y].apply(e)) -
                   actionOf(m.lambda, a.basisProduct(y, x)).apply(e) +
                   m.lambda[y].apply(m.lambda[x].apply(e));
        if (!r.isZero()) {
          direct = Verdict::failAt({x, y, k}, std::move(r));
          break;
        }
      }

  auto end = share(endomorphismAlgebra(m.moduleDim, a.field()));
  std::vector<Vector> cols;
  for (const auto& l : m.lambda)
    cols.push_back(matrixAsElement(l));
  LinearMap rep(m.algebra, end, Matrix::fromColumns(a.field(), end->dim(), cols));
  if (checkMapProperty(rep, MapProperty::PreMorphism).holds != direct.holds)
    fail(ErrorCode::Internal, "module identity and pre-morphism test disagree");
  return direct;
}

Algebra groundFieldAlgebra(const FieldSpec& field) {
  Algebra::Table t;
  t.emplace(std::pair{std::size_t{0}, std::size_t{0}}, Vector::unit(field, 1, 0));
  return Algebra("k", field, {"1"}, t);
}

void validateAugmented(const AugmentedAlgebra& aug) {
  if (!aug.algebra)
    fail(ErrorCode::AugmentationInvalid, "augmented algebra without an algebra");
  const Algebra& a = *aug.algebra;
  if (aug.unit.size() != a.dim() || !(aug.unit.field() == a.field()))
    fail(ErrorCode::AugmentationInvalid, "unit is not an element of the algebra");
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Vector e = a.basisVector(k);
    if (!(a.multiply(aug.unit, e) == e) || !(a.multiply(e, aug.unit) == e))
      fail(ErrorCode::AugmentationInvalid, "unit law fails on " + a.basisNames()[k]);
  }
  const LinearMap& eps = aug.augmentation;
  if (!eps.domain().sameStructure(a) || eps.codomain().dim() != 1 ||
      !eps.codomain().sameStructure(groundFieldAlgebra(a.field())))
    fail(ErrorCode::AugmentationInvalid, "augmentation must map the algebra to k");
  if (!checkMapProperty(eps, MapProperty::Homomorphism).holds)
    fail(ErrorCode::AugmentationInvalid, "augmentation is not a homomorphism");
  if (!eps.apply(aug.unit)[0].isOne())
    fail(ErrorCode::AugmentationInvalid, "augmentation does not send the unit to 1");
}

AugmentedAlgebra dorrohExtend(const Algebra& a) {
  if (!checkIdentity(a, IdentityKind::PreLie).holds)
    fail(ErrorCode::NotPreLie, "'" + a.name() + "' is not pre-Lie");
  auto k = share(groundFieldAlgebra(a.field()));
  auto acted = share(a);
  std::vector<Matrix> scalar{Matrix::identity(a.field(), a.dim())};
  Algebra ext = semidirectProduct(ActionPair{k, acted, scalar, scalar}).renamed(a.name() + "#k");
  auto extPtr = share(std::move(ext));
  Vector unit = Vector::unit(a.field(), a.dim() + 1, a.dim());
  Matrix eps(a.field(), 1, a.dim() + 1);
  eps(0, a.dim()) = Scalar::one(a.field());
  AugmentedAlgebra aug{extPtr, unit, LinearMap(extPtr, k, std::move(eps))};
  validateAugmented(aug);
  return aug;
}

Algebra dorrohRoundTrip(const AugmentedAlgebra& aug) {
  validateAugmented(aug);
  Subspace ker = kernel(aug.augmentation.matrix());
  std::string name = aug.algebra->name();
  if (name.size() > 2 && name.ends_with("#k"))
    name.resize(name.size() - 2);
  else
    name += ".ker";
  if (ker.isZero())
    return Algebra(name, aug.algebra->field(), {});
  return restrictToSubalgebra(*aug.algebra, ker, name);
}

bool checkIdempotent(const Algebra& a, const Vector& e) { return a.multiply(e, e) == e; }

LinearMap elementMorphism(const AlgebraPtr& a, const Vector& e) {
  a->requireElement(e);
  return LinearMap(share(groundFieldAlgebra(a->field())), a,
                   Matrix::fromColumns(a->field(), a->dim(), std::span<const Vector>(&e, 1)));
}

std::vector<Vector> idempotentElements(const Algebra& a, std::uint64_t budget) {
  const FieldSpec& f = a.field();
  if (!f.isPrimeField())
    fail(ErrorCode::FieldNotFinite, "idempotent listing needs a prime field");
  const std::uint64_t p = f.p;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (count > budget / p)
      fail(ErrorCode::BudgetExceeded, "idempotent search exceeds the budget of " +
                                          std::to_string(budget));
    count *= p;
  }
  std::vector<Vector> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    Vector v = a.zero();
    // Most significant coordinate first, so the list is in coordinate order.
    for (std::size_t i = a.dim(); i-- > 0;) {
      v[i] = Scalar::fromInt(f, static_cast<long>(c % p));
      c /= p;
    }
    if (checkIdempotent(a, v))
      out.push_back(std::move(v));
  }
  return out;
}

Algebra triangularAlgebra(std::size_t n, const FieldSpec& field) {
  if (n == 0)
    fail(ErrorCode::ShapeMismatch, "triangular algebra needs n >= 1");
  if (field.isPrimeField() && field.p == 2)
    fail(ErrorCode::TwoNotInvertible, "2 is not invertible in GF(2)");
  const Scalar half = Scalar::fromInt(field, 2).inv();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::vector<std::string> names;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      cells.emplace_back(r, c);
      names.push_back("E" + std::to_string(r + 1) + "_" + std::to_string(c + 1));
    }
  auto unitMatrix = [&](std::size_t k) {
    Matrix m(field, n, n);
    m(cells[k].first, cells[k].second) = Scalar::one(field);
    return m;
  };
  return Algebra::fromProduct("triangular" + std::to_string(n), field, names,
                              [&](std::size_t i, std::size_t j) {
                                Matrix x = unitMatrix(i), y = unitMatrix(j);
                                Matrix sym = x * y.transpose() + y * x.transpose();
                                Matrix prod = x * y;
                                Vector out(field, cells.size());
                                for (std::size_t k = 0; k < cells.size(); ++k) {
                                  auto [r, c] = cells[k];
                                  Scalar phi = r == c ? sym(r, c) * half : sym(r, c);
                                  out[k] = prod(r, c) + phi;
                                }
                                return out;
                              });
}

std::vector<std::string> galleryIds() {
  return {"rank2", "triangular", "matrix", "abelian", "field", "a8", "complex", "split"};
}

Algebra galleryAlgebra(std::string_view id, std::size_t n, const FieldSpec& f) {
  auto s = [&](long v) { return Scalar::fromInt(f, v); };
  auto vec = [&](std::initializer_list<long> xs) {
    std::vector<Scalar> e;
    for (long x : xs)
      e.push_back(s(x));
    return Vector(f, std::move(e));
  };
  if (id == "rank2") {
    Algebra::Table t;
    t.emplace(std::pair<std::size_t, std::size_t>{0, 0}, vec({2, 0}));
    t.emplace(std::pair<std::size_t, std::size_t>{0, 1}, vec({0, 1}));
    t.emplace(std::pair<std::size_t, std::size_t>{1, 1}, vec({1, 0}));
    return Algebra("rank2", f, {"e1", "e2"}, t);
  }
  if (id == "triangular")
    return triangularAlgebra(n, f);
  if (id == "matrix") {
    if (n == 0)
      fail(ErrorCode::ShapeMismatch, "matrix algebra needs n >= 1");
    return endomorphismAlgebra(n, f).renamed("matrix" + std::to_string(n));
  }
  if (id == "abelian") {
    if (n == 0)
      fail(ErrorCode::ShapeMismatch, "abelian algebra needs n >= 1");
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k)
      names.push_back("x" + std::to_string(k));
    return Algebra("abelian" + std::to_string(n), f, std::move(names));
  }
  if (id == "field")
    return groundFieldAlgebra(f);
  if (id == "a8")
    return truncatedFreeAlgebra(5, f).renamed("A8");
  if (id == "complex") {
    Algebra::Table t;
    t.emplace(std::pair<std::size_t, std::size_t>{0, 0}, vec({1, 0}));
    t.emplace(std::pair<std::size_t, std::size_t>{0, 1}, vec({0, 1}));
    t.emplace(std::pair<std::size_t, std::size_t>{1, 0}, vec({0, 1}));
    t.emplace(std::pair<std::size_t, std::size_t>{1, 1}, vec({-1, 0}));
    return Algebra("complex", f, {"1", "i"}, t);
  }
  if (id == "split") {
    Algebra::Table t;
    t.emplace(std::pair<std::size_t, std::size_t>{0, 0}, vec({1, 0}));
    t.emplace(std::pair<std::size_t, std::size_t>{1, 1}, vec({0, 1}));
    return Algebra("split", f, {"p1", "p2"}, t);
  }
  fail(ErrorCode::UnknownGallery, "unknown gallery algebra '" + std::string(id) + "'");
}

PolyVector::PolyVector(const FieldSpec& f, std::size_t n) : field_(f), comps_(n) {}

void PolyVector::addTerm(std::size_t k, std::vector<std::uint32_t> exps, const Scalar& c) {
  if (k >= comps_.size() || exps.size() != comps_.size())
    fail(ErrorCode::ArityMismatch, "term does not fit a vector of arity " +
                                       std::to_string(comps_.size()));
  if (!(c.field() == field_))
    fail(ErrorCode::FieldMismatch, "coefficient over the wrong field");
  if (c.isZero())
    return;
  auto [it, inserted] = comps_[k].try_emplace(std::move(exps), c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero())
      comps_[k].erase(it);
  }
}

bool PolyVector::isZero() const noexcept {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.empty(); });
}

void PolyVector::requireCompatible(const PolyVector& o) const {
  if (o.arity() != arity())
    fail(ErrorCode::ArityMismatch, "polynomial vectors of arity " + std::to_string(arity()) +
                                       " and " + std::to_string(o.arity()));
  if (!(o.field_ == field_))
    fail(ErrorCode::FieldMismatch, "polynomial vectors over different fields");
}

PolyVector& PolyVector::operator+=(const PolyVector& o) {
  requireCompatible(o);
  for (std::size_t k = 0; k < arity(); ++k)
    for (const auto& [e, c] : o.comps_[k])
      addTerm(k, e, c);
  return *this;
}

PolyVector& PolyVector::operator-=(const PolyVector& o) {
  requireCompatible(o);
  for (std::size_t k = 0; k < arity(); ++k)
    for (const auto& [e, c] : o.comps_[k])
      addTerm(k, e, -c);
  return *this;
}

bool operator==(const PolyVector& a, const PolyVector& b) {
  return a.field_ == b.field_ && a.comps_ == b.comps_;
}

PolyVector polyDerivationProduct(const PolyVector& v, const PolyVector& u) {
  if (v.arity() != u.arity())
    fail(ErrorCode::ArityMismatch, "polynomial vectors of arity " + std::to_string(v.arity()) +
                                       " and " + std::to_string(u.arity()));
  if (!(v.field() == u.field()))
    fail(ErrorCode::FieldMismatch, "polynomial vectors over different fields");
  const std::size_t n = v.arity();
  const FieldSpec& f = v.field();
  PolyVector out(f, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [ue, uc] : u.component(k))
      for (std::size_t j = 0; j < n; ++j) {
        if (ue[j] == 0)
          continue;
        // d/dx_j of uc x^ue
        std::vector<std::uint32_t> de = ue;
        --de[j];
        Scalar dc = uc * Scalar::fromInt(f, static_cast<long>(ue[j]));
        for (const auto& [ve, vc] : v.component(j)) {
          std::vector<std::uint32_t> e = de;
          for (std::size_t t = 0; t < n; ++t)
            e[t] += ve[t];
          out.addTerm(k, std::move(e), dc * vc);
        }
      }
  return out;
}

} // namespace prelie
