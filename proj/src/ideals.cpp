#include "prelie/ideals.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "prelie/error.hpp"

namespace prelie {

namespace {

void requireInside(const Algebra& a, const Subspace& s) {
  if (s.ambientDim() != a.dim() || !(s.field() == a.field()))
    fail(ErrorCode::AlgebraMismatch, "subspace does not live in '" + a.name() + "'");
}

// Grows s by left and/or right products with basis elements until stable.
Subspace growUnder(const Algebra& a, Subspace s, bool left, bool right) {
  for (;;) {
    std::vector<Vector> extra;
    for (const auto& u : s.basis())
      for (std::size_t b = 0; b < a.dim(); ++b) {
        Vector e = a.basisVector(b);
        if (left)
          extra.push_back(a.multiply(e, u));
        if (right)
          extra.push_back(a.multiply(u, e));
      }
    Subspace next = s.withVectors(extra);
    if (next.dim() == s.dim())
      return s;
    s = std::move(next);
  }
}

struct SubspaceLess {
  bool operator()(const Subspace& x, const Subspace& y) const { return x.compare(y) < 0; }
};

} // namespace

Subspace idealClosure(const Algebra& a, std::span<const Vector> generators) {
  for (const auto& g : generators)
    a.requireElement(g);
  return growUnder(a, Subspace::echelonize(a.field(), a.dim(), generators), true, true);
}

Subspace idealClosure(const Algebra& a, const Subspace& s) {
  requireInside(a, s);
  return growUnder(a, s, true, true);
}

Subspace submoduleProduct(const Algebra& a, const Subspace& i, const Subspace& j) {
  requireInside(a, i);
  requireInside(a, j);
  std::vector<Vector> prods;
  for (const auto& u : i.basis())
    for (const auto& w : j.basis())
      prods.push_back(a.multiply(u, w));
  return Subspace::echelonize(a.field(), a.dim(), prods);
}

void requireIdeal(const Algebra& a, const Subspace& s) {
  if (!isIdealSubspace(a, s))
    fail(ErrorCode::NotAnIdeal, "subspace of dimension " + std::to_string(s.dim()) +
                                    " is not an ideal of '" + a.name() + "'");
}

Subspace commutatorClosedForm(const Algebra& a, const Subspace& i, const Subspace& j) {
  Subspace tail = growUnder(a, submoduleProduct(a, j, i), false, true);
  Subspace result = submoduleProduct(a, i, j).sum(tail);
  if (!isIdealSubspace(a, result))
    fail(ErrorCode::Internal, "closed-form commutator is not an ideal");
  return result;
}

Subspace commutatorByClosure(const Algebra& a, const Subspace& i, const Subspace& j) {
  return idealClosure(a, submoduleProduct(a, i, j).sum(submoduleProduct(a, j, i)));
}

Subspace commutator(const Algebra& a, const Subspace& i, const Subspace& j) {
  requireIdeal(a, i);
  requireIdeal(a, j);
  Subspace closed = commutatorClosedForm(a, i, j);
  Subspace closure = commutatorByClosure(a, i, j);
  if (!(closed == closure))
    fail(ErrorCode::Internal, "commutator routes disagree: dimensions " +
                                  std::to_string(closed.dim()) + " and " +
                                  std::to_string(closure.dim()));
  return closed;
}

const char* seriesName(SeriesKind kind) noexcept {
  return kind == SeriesKind::Derived ? "derived" : "lower-central";
}

SeriesKind parseSeriesKind(std::string_view text) {
  if (text == "derived")
    return SeriesKind::Derived;
  if (text == "lower-central")
    return SeriesKind::LowerCentral;
  fail(ErrorCode::Parse, "unknown series '" + std::string(text) + "'");
}

std::vector<std::size_t> SeriesReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms)
    out.push_back(t.dim());
  return out;
}

SeriesReport series(const Algebra& a, SeriesKind kind) {
  SeriesReport r;
  r.kind = kind;
  const Subspace whole = Subspace::full(a.field(), a.dim());
  r.terms.push_back(whole);
  while (!r.terms.back().isZero()) {
    const Subspace& cur = r.terms.back();
    Subspace next = commutator(a, cur, kind == SeriesKind::Derived ? cur : whole);
    if (next == cur) {
      r.stabilized = true;
      break;
    }
    r.terms.push_back(std::move(next));
  }
  r.terminatesAtZero = r.terms.back().isZero();
  return r;
}

Subspace centralizer(const Algebra& a, const Subspace& i) {
  requireIdeal(a, i);
  const FieldSpec& f = a.field();
  auto flattenInto = [](std::vector<Scalar>& out, const Vector& v) {
    out.insert(out.end(), v.entries().begin(), v.entries().end());
  };

  // Two-sided annihilator of I.
  Subspace w = homogeneousSolutions(f, a.dim(), [&](std::size_t t) {
    std::vector<Scalar> out;
    Vector e = a.basisVector(t);
    for (const auto& u : i.basis()) {
      flattenInto(out, a.multiply(e, u));
      flattenInto(out, a.multiply(u, e));
    }
    return Vector(f, std::move(out));
  });

  // Largest subspace of it stable under multiplication by A on both sides.
  for (;;) {
    const auto& basis = w.basis();
    Subspace coeffs = homogeneousSolutions(f, basis.size(), [&](std::size_t t) {
      std::vector<Scalar> out;
      for (std::size_t b = 0; b < a.dim(); ++b) {
        Vector e = a.basisVector(b);
        flattenInto(out, w.reduce(a.multiply(e, basis[t])));
        flattenInto(out, w.reduce(a.multiply(basis[t], e)));
      }
      return Vector(f, std::move(out));
    });
    if (coeffs.dim() == basis.size())
      return w;
    std::vector<Vector> kept;
    for (const auto& c : coeffs.basis()) {
      Vector v = a.zero();
      for (std::size_t t = 0; t < basis.size(); ++t)
        v.axpy(c[t], basis[t]);
      kept.push_back(std::move(v));
    }
    w = Subspace::echelonize(f, a.dim(), kept);
  }
}

Subspace center(const Algebra& a) { return centralizer(a, Subspace::full(a.field(), a.dim())); }

std::optional<std::size_t> IdealLattice::indexOf(const Subspace& s) const {
  auto it = std::lower_bound(ideals.begin(), ideals.end(), s,
                             [](const Subspace& x, const Subspace& y) { return x.compare(y) < 0; });
  if (it != ideals.end() && *it == s)
    return static_cast<std::size_t>(it - ideals.begin());
  return std::nullopt;
}

IdealLattice enumerateIdeals(const Algebra& a, std::uint64_t budget) {
  const FieldSpec& f = a.field();
  if (!f.isPrimeField())
    fail(ErrorCode::FieldNotFinite, "ideal enumeration needs a prime field, got " + f.toString());
  const std::uint64_t p = f.p;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (count > budget / p)
      fail(ErrorCode::BudgetExceeded, std::to_string(p) + "^" + std::to_string(a.dim()) +
                                          " vectors exceed the budget of " +
                                          std::to_string(budget));
    count *= p;
  }

  // Every ideal is the sum of the principal ideals of its elements, and each
  // principal ideal is determined by a vector up to scaling.
  std::set<Subspace, SubspaceLess> principal;
  for (std::uint64_t code = 1; code < count; ++code) {
    std::uint64_t c = code;
    std::vector<Scalar> entries;
    entries.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      entries.push_back(Scalar::fromInt(f, static_cast<long>(c % p)));
      c /= p;
    }
    Vector v(f, std::move(entries));
    if (!v[v.leadingIndex()].isOne())
      continue;
    principal.insert(idealClosure(a, std::span<const Vector>(&v, 1)));
  }

  std::set<Subspace, SubspaceLess> seen;
  std::vector<Subspace> frontier{Subspace(f, a.dim())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& s : frontier)
      for (const auto& q : principal) {
        if (s.contains(q))
          continue;
        Subspace t = s.sum(q);
        if (seen.insert(t).second)
          next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }

  IdealLattice lattice;
  lattice.ideals.assign(seen.begin(), seen.end());
  lattice.complete = true;
  return lattice;
}

PrimalityOracle::PrimalityOracle(const Algebra& a, const IdealLattice& lattice)
    : algebra_(a), lattice_(lattice) {
  if (!lattice.complete)
    fail(ErrorCode::IncompleteLattice, "primality needs the complete ideal lattice");
  const std::size_t n = lattice.ideals.size();
  for (auto& c : cache_)
    c.assign(n * n, std::nullopt);
}

const Subspace& PrimalityOracle::product(std::size_t j, std::size_t k, PrimeNotion notion) {
  auto& slot = cache_[static_cast<int>(notion)][j * lattice_.ideals.size() + k];
  if (!slot) {
    const Subspace& x = lattice_.ideals[j];
    const Subspace& y = lattice_.ideals[k];
    switch (notion) {
    case PrimeNotion::Product: slot = submoduleProduct(algebra_, x, y); break;
    case PrimeNotion::GeneratedProduct:
      slot = idealClosure(algebra_, submoduleProduct(algebra_, x, y));
      break;
    case PrimeNotion::Commutator: slot = commutator(algebra_, x, y); break;
    }
  }
  return *slot;
}

bool PrimalityOracle::isPrime(const Subspace& p, PrimeNotion notion) {
  requireIdeal(algebra_, p);
  if (p.isFull())
    return false;
  const std::size_t n = lattice_.ideals.size();
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < n; ++j)
    if (!p.contains(lattice_.ideals[j]))
      outside.push_back(j);
  for (std::size_t j : outside)
    for (std::size_t k : outside)
      if (p.contains(product(j, k, notion)))
        return false;
  return true;
}

bool PrimalityOracle::isSemiprime(const Subspace& p) {
  requireIdeal(algebra_, p);
  for (std::size_t j = 0; j < lattice_.ideals.size(); ++j)
    if (!p.contains(lattice_.ideals[j]) && p.contains(product(j, j, PrimeNotion::Commutator)))
      return false;
  return true;
}

std::vector<Subspace> PrimalityOracle::primeIdeals(PrimeNotion notion) {
  std::vector<Subspace> out;
  for (const auto& p : lattice_.ideals)
    if (isPrime(p, notion))
      out.push_back(p);
  return out;
}

std::vector<Subspace> PrimalityOracle::semiprimeIdeals() {
  std::vector<Subspace> out;
  for (const auto& p : lattice_.ideals)
    if (isSemiprime(p))
      out.push_back(p);
  return out;
}

bool PrimalityOracle::hyperabelian() { return primeIdeals().empty(); }

ClassificationReport classify(const Algebra& a, const IdealLattice* lattice) {
  ClassificationReport r;
  SeriesReport lower = series(a, SeriesKind::LowerCentral);
  SeriesReport derived = series(a, SeriesKind::Derived);
  r.lowerCentralDims = lower.dims();
  r.derivedDims = derived.dims();

  r.abelian = derived.terms.size() < 2 || derived.terms[1].isZero();
  r.perfect = lower.stabilized && lower.terms.size() == 1;
  r.nilpotent = lower.terminatesAtZero;
  if (r.nilpotent)
    r.nilpotencyClass = lower.terms.size();
  r.solvable = derived.terminatesAtZero;
  if (r.solvable)
    r.derivedLength = derived.terms.size() - 1;
  r.metabelian = derived.terminatesAtZero && derived.terms.size() <= 3;

  if (lattice) {
    PrimalityOracle oracle(a, *lattice);
    r.hyperabelian = oracle.hyperabelian();
  }
  return r;
}

} // namespace prelie
