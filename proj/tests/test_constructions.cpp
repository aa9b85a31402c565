#include "doctest.h"

#include "json_io.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ActionPair zeroAction(const Algebra& actor, const Algebra& acted) {
  ActionPair p{share(actor), share(acted), {}, {}};
  for (std::size_t b = 0; b < actor.dim(); ++b) {
    p.lambda.emplace_back(acted.field(), acted.dim(), acted.dim());
    p.rho.emplace_back(acted.field(), acted.dim(), acted.dim());
  }
  return p;
}

ActionPair scalarAction(const Algebra& acted) {
  const FieldSpec& f = acted.field();
  return {share(groundFieldAlgebra(f)), share(acted), {Matrix::identity(f, acted.dim())},
          {Matrix::identity(f, acted.dim())}};
}

ModuleStructure regularModule(const Algebra& a) {
  ModuleStructure m{share(a), a.dim(), {}};
  for (std::size_t x = 0; x < a.dim(); ++x)
    m.lambda.push_back(a.leftMultiplication(a.basisVector(x)));
  return m;
}

} // namespace

TEST_CASE("action checks: worked examples") {
  Algebra a8 = galleryAlgebra("a8", 0, Q), rank2 = galleryAlgebra("rank2", 0, Q);
  CHECK(checkAction(zeroAction(rank2, a8)).holds);
  CHECK(checkAction(scalarAction(a8)).holds);
  CHECK(checkAction(scalarAction(rank2)).holds);

  ActionPair bad = scalarAction(a8);
  bad.rho[0](0, 0) += Scalar::one(Q);
  ActionVerdict v = checkAction(bad);
  CHECK_FALSE(v.holds);
  CHECK(v.failedCondition == 'b');
  REQUIRE(v.witness);
  CHECK(v.witness->basis == std::vector<std::size_t>{0, 0});

  CHECK(errorOf([&] {
          ActionPair p = scalarAction(a8);
          p.lambda.clear();
          checkAction(p);
        }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("semidirect products: worked examples") {
  Algebra a8 = galleryAlgebra("a8", 0, Q), rank2 = galleryAlgebra("rank2", 0, Q);
  Algebra zero = semidirectProduct(zeroAction(rank2, a8));
  CHECK(zero.table() == directProduct(a8, rank2).table());
  CHECK(checkIdentity(zero, IdentityKind::PreLie).holds);

  Algebra scalar = semidirectProduct(scalarAction(a8));
  CHECK(scalar.table() == dorrohExtend(a8).algebra->table());

  ActionPair bad = scalarAction(a8);
  bad.rho[0](0, 0) += Scalar::one(Q);
  CHECK(errorOf([&] { semidirectProduct(bad); }) == ErrorCode::ActionInvalid);

  Algebra::Table t;
  t[{0, 1}] = Vector(Q, {Scalar::one(Q), Scalar::zero(Q)});
  Algebra notPreLie("one-product", Q, {"e1", "e2"}, t);
  CHECK(errorOf([&] { semidirectProduct(zeroAction(notPreLie, a8)); }) == ErrorCode::NotPreLie);
}

TEST_CASE("abelian acted algebras: bimodule conditions suffice") {
  Rng rng(61);
  for (int k = 0; k < 40; ++k) {
    const FieldSpec& f = k % 2 ? Q : GF3;
    Algebra b = randomPreLie(rng, f, 4);
    std::size_t m = 1 + rng.index(3);
    Algebra i = galleryAlgebra("abelian", m, f);
    ActionPair p = zeroAction(b, i);
    for (std::size_t x = 0; x < b.dim(); ++x) {
      p.lambda[x] = rng.matrix(f, m, m, 0.3);
      if (rng.coin())
        p.rho[x] = rng.matrix(f, m, m, 0.3);
    }
    ActionVerdict bi = checkBimodule(p), full = checkAction(p);
    CHECK(bi.holds == full.holds);
    if (!full.holds)
      CHECK(full.failedCondition.value() <= 'b');
    if (full.holds)
      CHECK(checkIdentity(semidirectProduct(p), IdentityKind::PreLie).holds);
  }
  CHECK(errorOf([] { checkBimodule(scalarAction(galleryAlgebra("rank2", 0, Q))); }) ==
        ErrorCode::NotAbelian);
}

TEST_CASE("classical bimodule of a matrix algebra") {
  for (const FieldSpec& f : {Q, GF2}) {
    Algebra m = galleryAlgebra("matrix", 2, f);
    Algebra i = galleryAlgebra("abelian", 4, f);
    ActionPair p = zeroAction(m, i);
    for (std::size_t x = 0; x < 4; ++x) {
      p.lambda[x] = m.leftMultiplication(m.basisVector(x));
      p.rho[x] = m.rightMultiplication(m.basisVector(x));
      for (std::size_t y = 0; y < 4; ++y) {
        Matrix lb = m.leftMultiplication(m.basisVector(y));
        CHECK((p.rho[x] * lb - lb * p.rho[x]).isZero());
      }
    }
    CHECK(checkBimodule(p).holds);
    CHECK(checkAction(p).holds);
  }
}

TEST_CASE("solved action pairs") {
  Rng rng(62);
  for (int k = 0; k < 30; ++k) {
    const FieldSpec& f = k % 3 == 0 ? GF5 : Q;
    Algebra i = randomPreLie(rng, f, 4);
    ActionPair p = solvedActionPair(rng, i, k % 2);
    CHECK(checkAction(p).holds);
    Algebra s = semidirectProduct(p);
    CHECK(checkIdentity(s, IdentityKind::PreLie).holds);
    ActionPair back = extractAction(s, i.dim());
    CHECK(back.lambda[0] == p.lambda[0]);
    CHECK(back.rho[0] == p.rho[0]);
  }
}

TEST_CASE("extraction needs an ideal and a subalgebra") {
  Algebra a8 = galleryAlgebra("a8", 0, Q);
  // the first coordinate v generates everything
  CHECK(errorOf([&] { extractAction(a8, 1); }) == ErrorCode::NotAnIdeal);
  Algebra rank2 = galleryAlgebra("rank2", 0, Q);
  CHECK(errorOf([&] { extractAction(rank2, 1); }).has_value());
}

TEST_CASE("unitalization") {
  for (const char* id : {"a8", "rank2", "complex", "field"}) {
    Algebra a = galleryAlgebra(id, 0, Q);
    AugmentedAlgebra aug = dorrohExtend(a);
    validateAugmented(aug);
    CHECK(aug.algebra->dim() == a.dim() + 1);
    // a taken name gets primed
    CHECK(aug.algebra->basisNames().back() == (a.indexOf("1") ? "1'" : "1"));
    CHECK(dorrohRoundTrip(aug) == a);
  }
  Algebra a8 = galleryAlgebra("a8", 0, Q);
  AugmentedAlgebra aug = dorrohExtend(a8);
  aug.unit = aug.algebra->basisVector(0);
  CHECK(errorOf([&] { validateAugmented(aug); }) == ErrorCode::AugmentationInvalid);
  Algebra::Table t;
  t[{0, 1}] = Vector(Q, {Scalar::one(Q), Scalar::zero(Q)});
  CHECK(errorOf([&] { dorrohExtend(Algebra("x", Q, {"e1", "e2"}, t)); }) == ErrorCode::NotPreLie);
}

TEST_CASE("unitalization of random algebras") {
  Rng rng(63);
  for (int k = 0; k < 30; ++k) {
    const FieldSpec& f = k % 2 ? GF2 : Q;
    Algebra a = randomPreLie(rng, f, 5);
    AugmentedAlgebra aug = dorrohExtend(a);
    validateAugmented(aug);
    CHECK(dorrohRoundTrip(aug).sameStructure(a));
    // (x, s)(y, t) = (xy + t x + s y, s t)
    Vector x = rng.vector(f, a.dim()), y = rng.vector(f, a.dim());
    Scalar s = rng.scalar(f), t = rng.scalar(f);
    auto embed = [&](const Vector& v, const Scalar& c) {
      Vector out(f, a.dim() + 1);
      for (std::size_t q = 0; q < a.dim(); ++q)
        out[q] = v[q];
      out[a.dim()] = c;
      return out;
    };
    CHECK(aug.algebra->multiply(embed(x, s), embed(y, t)) ==
          embed(a.multiply(x, y) + t * x + s * y, s * t));
  }
}

TEST_CASE("modules") {
  Rng rng(64);
  for (const auto& id : galleryIds()) {
    if (id == "triangular")
      continue;
    Algebra a = galleryAlgebra(id, 2, Q);
    CHECK(checkModule(regularModule(a)).holds);
    ModuleStructure zero{share(a), 3, std::vector<Matrix>(a.dim(), Matrix(Q, 3, 3))};
    CHECK(checkModule(zero).holds);
  }
  CHECK(checkModule(regularModule(triangularAlgebra(2, Q))).holds);

  Algebra a8 = galleryAlgebra("a8", 0, Q);
  std::vector<Vector> gen{el(a8, {{"f", 1}, {"g", 1}})};
  Subspace ideal = idealClosure(a8, gen);
  ModuleStructure restricted{share(a8), ideal.dim(), {}};
  for (std::size_t x = 0; x < a8.dim(); ++x) {
    Matrix l(Q, ideal.dim(), ideal.dim());
    for (std::size_t j = 0; j < ideal.dim(); ++j) {
      Vector c = ideal.coordinates(a8.multiply(a8.basisVector(x), ideal.basis()[j]));
      for (std::size_t r = 0; r < ideal.dim(); ++r)
        l(r, j) = c[r];
    }
    restricted.lambda.push_back(l);
  }
  CHECK(checkModule(restricted).holds);

  // random actions: the direct and pre-morphism forms must agree (Internal otherwise)
  for (int k = 0; k < 40; ++k) {
    Algebra b = k % 2 ? randomPreLie(rng, GF3, 3) : randomAlgebra(rng, GF3, 2);
    std::size_t m = 1 + rng.index(3);
    ModuleStructure s{share(b), m, {}};
    for (std::size_t x = 0; x < b.dim(); ++x)
      s.lambda.push_back(rng.matrix(GF3, m, m, 0.4));
    Verdict v = checkModule(s);
    bool pre = checkMapProperty(
                   LinearMap(share(b), share(endomorphismAlgebra(m, GF3)),
                             [&] {
                               Matrix cols(GF3, m * m, b.dim());
                               for (std::size_t x = 0; x < b.dim(); ++x) {
                                 Vector e = matrixAsElement(s.lambda[x]);
                                 for (std::size_t r = 0; r < m * m; ++r)
                                   cols(r, x) = e[r];
                               }
                               return cols;
                             }()),
                   MapProperty::PreMorphism)
                   .holds;
    CHECK(v.holds == pre);
  }
}

TEST_CASE("idempotents") {
  Algebra split = galleryAlgebra("split", 0, GF3);
  auto ids = idempotentElements(split);
  CHECK(ids.size() == 4);
  for (const auto& e : ids)
    CHECK(checkIdempotent(split, e));
  Algebra a8 = galleryAlgebra("a8", 0, GF2);
  CHECK(idempotentElements(a8).size() == 1);
  CHECK(errorOf([&] { idempotentElements(galleryAlgebra("a8", 0, Q)); }) == ErrorCode::FieldNotFinite);
  CHECK(errorOf([&] { idempotentElements(a8, 16); }) == ErrorCode::BudgetExceeded);
  AlgebraPtr p = share(split);
  LinearMap m = elementMorphism(p, ids.back());
  CHECK(checkMapProperty(m, MapProperty::Homomorphism).holds);
}

TEST_CASE("gallery and triangular algebras") {
  for (const FieldSpec& f : {Q, GF5, GF3})
    for (std::size_t n = 1; n <= 3; ++n) {
      Algebra t = triangularAlgebra(n, f);
      CHECK(t.dim() == n * (n + 1) / 2);
      CHECK(checkIdentity(t, IdentityKind::PreLie).holds);
    }
  CHECK(errorOf([] { triangularAlgebra(2, GF2); }) == ErrorCode::TwoNotInvertible);
  CHECK(errorOf([] { galleryAlgebra("triangular", 3, GF2); }) == ErrorCode::TwoNotInvertible);
  for (const auto& id : galleryIds())
    CHECK(checkIdentity(galleryAlgebra(id, 2, Q), IdentityKind::PreLie).holds);
}

TEST_CASE("polynomial vector fields") {
  PolyVector x(Q, 1);
  x.addTerm(0, {1}, Scalar::one(Q));
  CHECK(polyDerivationProduct(x, x) == x);
  PolyVector c(Q, 2), u(Q, 2);
  c.addTerm(0, {0, 0}, Scalar::fromInt(Q, 3));
  c.addTerm(1, {0, 0}, Scalar::fromInt(Q, -1));
  u.addTerm(0, {2, 1}, Scalar::one(Q));
  CHECK(polyDerivationProduct(u, c).isZero());
  // (3, -1) . x^2 y = 3 * 2xy - x^2
  PolyVector expected(Q, 2);
  expected.addTerm(0, {1, 1}, Scalar::fromInt(Q, 6));
  expected.addTerm(0, {2, 0}, Scalar::fromInt(Q, -1));
  CHECK(polyDerivationProduct(c, u) == expected);
  CHECK(errorOf([&] { polyDerivationProduct(x, u); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("action documents round trip") {
  Rng rng(65);
  Algebra i = randomPreLie(rng, GF5, 3);
  ActionPair p = solvedActionPair(rng, i, 1);
  ActionPair back = json_io::actionFromJson(json_io::toJson(p), p.actor, p.acted);
  CHECK(back.lambda[0] == p.lambda[0]);
  CHECK(back.rho[0] == p.rho[0]);
}
