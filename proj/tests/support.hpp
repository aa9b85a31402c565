// Generators and small helpers shared by the test binaries.
#ifndef PRELIE_TEST_SUPPORT_HPP
#define PRELIE_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prelie/constructions.hpp"
#include "prelie/error.hpp"
#include "prelie/ideals.hpp"
#include "prelie/trees.hpp"

namespace testing {

using namespace prelie;

inline const FieldSpec Q = FieldSpec::rationals();
inline const FieldSpec GF2 = FieldSpec::prime(2);
inline const FieldSpec GF3 = FieldSpec::prime(3);
inline const FieldSpec GF5 = FieldSpec::prime(5);

class Rng {
public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(g_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(range(0, long(n) - 1)); }

  Scalar scalar(const FieldSpec& f, long bound = 3) {
    if (f.isPrimeField())
      return Scalar::fromInt(f, range(0, long(f.p) - 1));
    mpq_class q(range(-bound, bound), range(1, 2));
    q.canonicalize();
    return Scalar::fromRational(f, q);
  }

  Vector vector(const FieldSpec& f, std::size_t n, double density = 0.6) {
    Vector v(f, n);
    for (std::size_t i = 0; i < n; ++i)
      if (coin(density))
        v[i] = scalar(f);
    return v;
  }

  Vector nonzeroVector(const FieldSpec& f, std::size_t n) {
    for (;;) {
      Vector v = vector(f, n);
      if (!v.isZero())
        return v;
    }
  }

  Matrix matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, double density = 0.6) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (coin(density))
          m(r, c) = scalar(f);
    return m;
  }

  /// Unit lower times unit upper triangular: always invertible.
  Matrix invertible(const FieldSpec& f, std::size_t n) {
    Matrix l = Matrix::identity(f, n), u = Matrix::identity(f, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (c < r && coin())
          l(r, c) = scalar(f);
        if (c > r && coin())
          u(r, c) = scalar(f);
      }
    return l * u;
  }

  std::mt19937_64& engine() { return g_; }

private:
  std::mt19937_64 g_;
};

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  const FieldSpec& f = m.field();
  Matrix a = m, inv = Matrix::identity(f, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).isZero())
      ++piv;
    if (piv == n)
      return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(a(piv, k), a(c, k));
      std::swap(inv(piv, k), inv(c, k));
    }
    Scalar s = a(c, c).inv();
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) *= s;
      inv(c, k) *= s;
    }
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && !a(r, c).isZero()) {
        Scalar t = a(r, c);
        for (std::size_t k = 0; k < n; ++k) {
          a(r, k) -= t * a(c, k);
          inv(r, k) -= t * inv(c, k);
        }
      }
  }
  return inv;
}

/// Same algebra in the basis given by the columns of p.
inline Algebra changeBasis(const Algebra& a, const Matrix& p) {
  Matrix pinv = *inverse(p);
  return Algebra::fromProduct(a.name() + "'", a.field(), a.basisNames(),
                              [&](std::size_t i, std::size_t j) {
                                return pinv.apply(a.multiply(p.column(i), p.column(j)));
                              });
}

/// A / I on the coordinates that are not pivots of I.
inline Algebra quotient(const Algebra& a, const Subspace& ideal) {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (std::find(ideal.pivots().begin(), ideal.pivots().end(), k) == ideal.pivots().end())
      keep.push_back(k);
  std::vector<std::string> names;
  for (std::size_t k : keep)
    names.push_back(a.basisNames()[k]);
  return Algebra::fromProduct(a.name() + "/I", a.field(), names,
                              [&](std::size_t i, std::size_t j) {
                                Vector r = ideal.reduce(a.basisProduct(keep[i], keep[j]));
                                Vector out(a.field(), keep.size());
                                for (std::size_t k = 0; k < keep.size(); ++k)
                                  out[k] = r[keep[k]];
                                return out;
                              });
}

/// Subalgebra generated by the given elements.
inline Subspace generatedSubalgebra(const Algebra& a, std::vector<Vector> gens) {
  Subspace s = Subspace::echelonize(a.field(), a.dim(), gens);
  for (;;) {
    std::vector<Vector> extra;
    for (const auto& u : s.basis())
      for (const auto& w : s.basis())
        extra.push_back(a.multiply(u, w));
    Subspace next = s.withVectors(extra);
    if (next.dim() == s.dim())
      return s;
    s = next;
  }
}

inline Subspace randomIdeal(Rng& rng, const Algebra& a, std::size_t gens = 1) {
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < gens; ++k)
    vs.push_back(rng.vector(a.field(), a.dim(), 0.4));
  return idealClosure(a, vs);
}

/// A pre-Lie algebra of dimension 1..maxDim from a pool of constructions,
/// optionally in a random basis.
inline Algebra randomPreLie(Rng& rng, const FieldSpec& f, std::size_t maxDim = 6) {
  for (;;) {
    Algebra a;
    switch (rng.range(0, 8)) {
    case 0: a = truncatedFreeAlgebra(static_cast<std::size_t>(rng.range(2, 4)), f); break;
    case 1: {
      Algebra t = truncatedFreeAlgebra(5, f);
      Subspace i = randomIdeal(rng, t, 1 + rng.index(2));
      if (i.isFull())
        continue;
      a = quotient(t, i);
      break;
    }
    case 2:
      if (f.isPrimeField() && f.p == 2)
        continue;
      a = triangularAlgebra(static_cast<std::size_t>(rng.range(1, 3)), f);
      break;
    case 3: a = galleryAlgebra("matrix", static_cast<std::size_t>(rng.range(1, 2)), f); break;
    case 4: {
      // associative subalgebra of upper triangular 3x3 matrices
      Algebra m = galleryAlgebra("matrix", 3, f);
      std::vector<Vector> gens;
      for (int k = 0; k < 2; ++k) {
        Vector v = m.zero();
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t c = r; c < 3; ++c)
            if (rng.coin())
              v[r * 3 + c] = rng.scalar(f);
        gens.push_back(v);
      }
      Subspace s = generatedSubalgebra(m, gens);
      if (s.isZero())
        continue;
      a = restrictToSubalgebra(m, s, "upper");
      break;
    }
    case 5: {
      std::vector<std::string> ids{"rank2", "complex", "split", "field", "abelian"};
      a = galleryAlgebra(ids[rng.index(ids.size())], static_cast<std::size_t>(rng.range(1, 3)), f);
      break;
    }
    case 6: a = dorrohExtend(randomPreLie(rng, f, maxDim - 1 > 0 ? maxDim - 1 : 1)).algebra->renamed("dorroh"); break;
    case 7: {
      Algebra x = randomPreLie(rng, f, 3), y = randomPreLie(rng, f, 3);
      a = directProduct(x, y);
      break;
    }
    default: a = opposite(opposite(rng.coin() ? galleryAlgebra("rank2", 0, f)
                                              : truncatedFreeAlgebra(4, f)));
    }
    if (a.dim() == 0 || a.dim() > maxDim)
      continue;
    if (rng.coin())
      a = changeBasis(a, rng.invertible(f, a.dim()));
    return a;
  }
}

/// Random dense structure constants; usually neither pre-Lie nor
/// Lie-admissible.
inline Algebra randomAlgebra(Rng& rng, const FieldSpec& f, std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < dim; ++k)
    names.push_back("r" + std::to_string(k + 1));
  return Algebra::fromProduct("random", f, names, [&](std::size_t, std::size_t) {
    return rng.vector(f, dim, 0.5);
  });
}

/// Random (lambda, rho) for a one-dimensional actor k.b with b.b = beta b
/// acting on i: a random element of the solution space of the two action
/// conditions that are linear in (lambda, rho), kept only when the remaining
/// condition also holds. With rho forced to zero every solution is valid.
inline ActionPair solvedActionPair(Rng& rng, const Algebra& i, long beta) {
  const FieldSpec& f = i.field();
  const std::size_t m = i.dim();
  Algebra::Table t;
  if (beta != 0)
    t[{0, 0}] = Vector(f, {Scalar::fromInt(f, beta)});
  AlgebraPtr actor = share(Algebra("line", f, {"b"}, t));
  auto split = [&](const Vector& unknowns, Matrix& l, Matrix& r) {
    l = Matrix(f, m, m);
    r = Matrix(f, m, m);
    for (std::size_t k = 0; k < m * m; ++k) {
      l(k / m, k % m) = unknowns[k];
      r(k / m, k % m) = unknowns[m * m + k];
    }
  };
  bool rhoZero = rng.coin(0.3);
  auto solve = [&] { return homogeneousSolutions(f, 2 * m * m, [&](std::size_t u) {
    Vector unknowns(f, 2 * m * m);
    unknowns[u] = Scalar::one(f);
    Matrix l, r;
    split(unknowns, l, r);
    std::vector<Scalar> out;
    auto push = [&](const Vector& v) {
      for (std::size_t k = 0; k < v.size(); ++k)
        out.push_back(v[k]);
    };
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        Vector ex = i.basisVector(x), ey = i.basisVector(y);
        push(i.multiply(l.apply(ex), ey) - l.apply(i.multiply(ex, ey)) -
             i.multiply(r.apply(ex), ey) + i.multiply(ex, l.apply(ey)));
        push(r.apply(i.multiply(ex, ey)) - i.multiply(ex, r.apply(ey)) -
             r.apply(i.multiply(ey, ex)) + i.multiply(ey, r.apply(ex)));
      }
    if (rhoZero)
      for (std::size_t k = 0; k < m * m; ++k)
        out.push_back(unknowns[m * m + k]);
    return Vector(f, out);
  }); };
  Subspace solutions = solve();
  // sparse samples first; with rho = 0 every solution is an action
  for (int tries = 0;; ++tries) {
    if (tries == 200 && !rhoZero) {
      rhoZero = true;
      solutions = solve();
    }
    Vector pick(f, 2 * m * m);
    for (const auto& v : solutions.basis())
      if (rng.coin(0.4))
        pick.axpy(rng.scalar(f), v);
    ActionPair pair{actor, share(i), {Matrix()}, {Matrix()}};
    split(pick, pair.lambda[0], pair.rho[0]);
    if (checkAction(pair).holds)
      return pair;
  }
}

/// Element with integer coefficients on named basis vectors.
inline Vector el(const Algebra& a, std::initializer_list<std::pair<const char*, long>> terms) {
  Vector v = a.zero();
  for (const auto& [name, c] : terms)
    v[*a.indexOf(name)] += Scalar::fromInt(a.field(), c);
  return v;
}

inline Vector el(const Algebra& a, const char* name) { return el(a, {{name, 1}}); }

inline Subspace spanIn(const Algebra& a, std::vector<Vector> vs) {
  return Subspace::echelonize(a.field(), a.dim(), vs);
}

/// Error code raised by f, or nullopt when it returns normally.
inline std::optional<ErrorCode> errorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

} // namespace testing

#endif
