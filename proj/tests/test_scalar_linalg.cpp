#include "doctest.h"

#include "support.hpp"

using namespace testing;

TEST_CASE("field parsing and printing") {
  CHECK(FieldSpec::parse("rational") == Q);
  CHECK(FieldSpec::parse("gf:5") == GF5);
  CHECK(GF5.toString() == "gf:5");
  CHECK(Q.toString() == "rational");
  CHECK(errorOf([] { FieldSpec::prime(4); }) == ErrorCode::Parse);
  CHECK(errorOf([] { FieldSpec::parse("gf:x"); }) == ErrorCode::Parse);
  CHECK(errorOf([] { FieldSpec::parse("real"); }) == ErrorCode::Parse);
  CHECK(GF5.order() == 5);
  CHECK(Q.order() == 0);
}

TEST_CASE("scalar normalization") {
  CHECK(Scalar::parse(Q, "6/4") == Scalar::parse(Q, "3/2"));
  CHECK(Scalar::parse(Q, "-2/4").toString() == "-1/2");
  CHECK(errorOf([] { Scalar::parse(Q, "-2/-4"); }) == ErrorCode::Parse);
  CHECK(Scalar::parse(GF5, "7") == Scalar::fromInt(GF5, 2));
  CHECK(Scalar::fromInt(GF5, -1).toString() == "4");
  CHECK(Scalar::parse(GF5, "1/2") == Scalar::fromInt(GF5, 3));
  CHECK(errorOf([] { Scalar::parse(Q, "1/0"); }) == ErrorCode::Parse);
  CHECK(errorOf([] { Scalar::parse(GF5, "1/5"); }) == ErrorCode::DivisionByZero);
  CHECK(errorOf([] { Scalar::zero(GF5).inv(); }) == ErrorCode::DivisionByZero);
  CHECK(errorOf([] { Scalar::parse(Q, "abc"); }) == ErrorCode::Parse);
  CHECK(errorOf([] { (void)(Scalar::one(Q) + Scalar::one(GF5)); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("field axioms on random scalars") {
  Rng rng(11);
  for (const FieldSpec& f : {Q, GF2, GF3, GF5, FieldSpec::prime(4294967291ULL)}) {
    for (int k = 0; k < 200; ++k) {
      Scalar a = rng.scalar(f, 9), b = rng.scalar(f, 9), c = rng.scalar(f, 9);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Scalar::zero(f));
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.isZero()) {
        CHECK(a * a.inv() == Scalar::one(f));
        CHECK((b / a) * a == b);
      }
      CHECK(Scalar::parse(f, a.toString()) == a);
    }
  }
}

TEST_CASE("large prime residues do not overflow") {
  FieldSpec f = FieldSpec::prime(4294967291ULL);
  Scalar big = Scalar::fromInt(f, 4294967290L);
  CHECK(big * big == Scalar::one(f));
  CHECK(big + big == Scalar::fromInt(f, -2));
}

TEST_CASE("echelon form is canonical") {
  Rng rng(12);
  for (const FieldSpec& f : {Q, GF2, GF5}) {
    for (int k = 0; k < 60; ++k) {
      std::size_t n = 1 + rng.index(6);
      std::vector<Vector> gens;
      for (std::size_t r = 0, m = rng.index(5); r < m; ++r)
        gens.push_back(rng.vector(f, n));
      Subspace s = Subspace::echelonize(f, n, gens);
      // random invertible recombination spans the same space
      std::vector<Vector> mixed;
      for (std::size_t r = 0; r < gens.size(); ++r) {
        Vector v(f, n);
        for (std::size_t q = 0; q < gens.size(); ++q)
          v.axpy(rng.scalar(f), gens[q]);
        mixed.push_back(v);
      }
      mixed.insert(mixed.end(), gens.begin(), gens.end());
      std::reverse(mixed.begin(), mixed.end());
      CHECK(Subspace::echelonize(f, n, mixed) == s);
      for (std::size_t r = 0; r < s.dim(); ++r) {
        CHECK(s.basis()[r][s.pivots()[r]].isOne());
        for (std::size_t q = 0; q < s.dim(); ++q)
          if (q != r)
            CHECK(s.basis()[q][s.pivots()[r]].isZero());
      }
      for (const auto& g : gens)
        CHECK(s.memberOf(g));
    }
  }
}

TEST_CASE("sum, intersection and the dimension formula") {
  Rng rng(13);
  for (const FieldSpec& f : {Q, GF2, GF3}) {
    for (int k = 0; k < 80; ++k) {
      std::size_t n = 1 + rng.index(6);
      auto randomSpace = [&] {
        std::vector<Vector> g;
        for (std::size_t r = 0, m = rng.index(4); r < m; ++r)
          g.push_back(rng.vector(f, n));
        return Subspace::echelonize(f, n, g);
      };
      Subspace u = randomSpace(), v = randomSpace(), w = randomSpace();
      Subspace sum = u.sum(v), meet = u.intersect(v);
      CHECK(sum.dim() + meet.dim() == u.dim() + v.dim());
      CHECK(sum.contains(u));
      CHECK(sum.contains(v));
      CHECK(u.contains(meet));
      CHECK(v.contains(meet));
      for (const auto& b : meet.basis())
        CHECK((u.memberOf(b) && v.memberOf(b)));
      // modular law: u <= w implies u + (v n w) = (u + v) n w
      Subspace uw = u.intersect(w);
      CHECK(uw.sum(v.intersect(w)) == uw.sum(v).intersect(w));
    }
  }
}

TEST_CASE("kernel, image and rank") {
  Rng rng(14);
  for (const FieldSpec& f : {Q, GF5}) {
    for (int k = 0; k < 50; ++k) {
      std::size_t r = 1 + rng.index(5), c = 1 + rng.index(5);
      Matrix m = rng.matrix(f, r, c);
      Subspace ker = kernel(m), im = image(m);
      CHECK(ker.dim() + im.dim() == c);
      CHECK(rank(m) == im.dim());
      for (const auto& v : ker.basis())
        CHECK(m.apply(v).isZero());
      for (std::size_t j = 0; j < c; ++j)
        CHECK(im.memberOf(m.column(j)));
    }
  }
}

TEST_CASE("coordinates and reduction") {
  Rng rng(15);
  for (int k = 0; k < 50; ++k) {
    std::size_t n = 2 + rng.index(4);
    std::vector<Vector> g{rng.vector(Q, n), rng.vector(Q, n)};
    Subspace s = Subspace::echelonize(Q, n, g);
    Vector x(Q, n);
    Vector coords(Q, s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
      coords[r] = rng.scalar(Q);
      x.axpy(coords[r], s.basis()[r]);
    }
    CHECK(s.coordinates(x) == coords);
    Vector y = rng.vector(Q, n);
    CHECK(s.memberOf(y - s.reduce(y)));
  }
}

TEST_CASE("matrix arithmetic") {
  Rng rng(16);
  for (int k = 0; k < 40; ++k) {
    Matrix a = rng.matrix(GF5, 3, 4), b = rng.matrix(GF5, 4, 2), c = rng.matrix(GF5, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    Vector v = rng.vector(GF5, 2);
    CHECK((a * b).apply(v) == a.apply(b.apply(v)));
    Matrix p = rng.invertible(Q, 4);
    CHECK(p * *inverse(p) == Matrix::identity(Q, 4));
  }
  CHECK(errorOf([] { (void)(Matrix(Q, 2, 3) * Matrix(Q, 2, 3)); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("worked examples") {
  CHECK(Scalar::parse(Q, "1/2") + Scalar::parse(Q, "1/3") == Scalar::parse(Q, "5/6"));
  CHECK(Scalar::fromInt(GF5, 3).inv() == Scalar::fromInt(GF5, 2));
  CHECK((Scalar::parse(Q, "2/4") * Scalar::fromInt(Q, 2)).toString() == "1");
  auto row = [](long x, long y) { return Vector(Q, {Scalar::fromInt(Q, x), Scalar::fromInt(Q, y)}); };
  std::vector<Vector> id{row(1, 0), row(0, 1)};
  CHECK(Subspace::echelonize(Q, 2, id).basis() == id);
  std::vector<Vector> prop{row(2, 4), row(1, 2)};
  Subspace p = Subspace::echelonize(Q, 2, prop);
  CHECK(p.dim() == 1);
  CHECK(p.basis()[0] == row(1, 2));
  CHECK(Subspace::echelonize(Q, 2, {}).isZero());
  std::vector<Vector> x{row(1, 0)}, y{row(0, 1)};
  Subspace sx = Subspace::echelonize(Q, 2, x), sy = Subspace::echelonize(Q, 2, y);
  CHECK(sx.sum(sy).isFull());
  CHECK(sx.intersect(sy).isZero());
}
