#ifndef PRELIE_IDEALS_HPP
#define PRELIE_IDEALS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "prelie/algebra.hpp"

namespace prelie {

/// Smallest ideal containing the generators, by the ascending chain
/// X <- X + AX + XA until it stabilizes.
Subspace idealClosure(const Algebra& a, std::span<const Vector> generators);
Subspace idealClosure(const Algebra& a, const Subspace& s);

/// Span of all products u*w with u in I and w in J. Not necessarily an ideal.
Subspace submoduleProduct(const Algebra& a, const Subspace& i, const Subspace& j);

/// Throws NotAnIdeal unless s is a two-sided ideal of a.
void requireIdeal(const Algebra& a, const Subspace& s);

/// IJ + V, where V is the smallest subspace containing JI with V*A inside V.
Subspace commutatorClosedForm(const Algebra& a, const Subspace& i, const Subspace& j);
/// Ideal generated by IJ and JI.
Subspace commutatorByClosure(const Algebra& a, const Subspace& i, const Subspace& j);
/// [I, J]. Both routes are evaluated; a disagreement throws Internal.
Subspace commutator(const Algebra& a, const Subspace& i, const Subspace& j);

enum class SeriesKind { Derived, LowerCentral };

const char* seriesName(SeriesKind kind) noexcept;
SeriesKind parseSeriesKind(std::string_view text);

struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  /// Derived: A^(0) = A, A^(n+1) = [A^(n), A^(n)].
  /// Lower central: A_1 = A, A_(n+1) = [A_n, A].
  std::vector<Subspace> terms;
  bool stabilized = false;
  bool terminatesAtZero = false;

  std::vector<std::size_t> dims() const;
};

/// Stops at zero or at the first repeated term (at most dim + 1 terms).
SeriesReport series(const Algebra& a, SeriesKind kind);

/// Largest ideal J with [I, J] = 0.
Subspace centralizer(const Algebra& a, const Subspace& i);
Subspace center(const Algebra& a);

inline constexpr std::uint64_t kDefaultIdealBudget = std::uint64_t{1} << 16;

struct IdealLattice {
  /// Sorted by dimension, then by echelon basis.
  std::vector<Subspace> ideals;
  bool complete = false;

  std::optional<std::size_t> indexOf(const Subspace& s) const;
};

/// Every ideal of an algebra over a prime field. The search visits all
/// p^dim vectors, so p^dim must not exceed the budget.
/// Throws FieldNotFinite or BudgetExceeded.
IdealLattice enumerateIdeals(const Algebra& a, std::uint64_t budget = kDefaultIdealBudget);

/// Which product of two ideals J, K the prime condition is phrased with.
enum class PrimeNotion { Product, GeneratedProduct, Commutator };

/// Caches the products of pairs of lattice ideals so repeated primality
/// queries over one lattice stay cheap.
class PrimalityOracle {
public:
  /// Throws IncompleteLattice when the lattice is not complete.
  PrimalityOracle(const Algebra& a, const IdealLattice& lattice);

  /// P proper, and for all J, K: (J K) in P implies J in P or K in P.
  bool isPrime(const Subspace& p, PrimeNotion notion = PrimeNotion::Commutator);
  /// For all J: [J, J] in P implies J in P.
  bool isSemiprime(const Subspace& p);

  std::vector<Subspace> primeIdeals(PrimeNotion notion = PrimeNotion::Commutator);
  std::vector<Subspace> semiprimeIdeals();
  /// No prime ideal at all.
  bool hyperabelian();

private:
  const Subspace& product(std::size_t j, std::size_t k, PrimeNotion notion);

  const Algebra& algebra_;
  const IdealLattice& lattice_;
  std::vector<std::optional<Subspace>> cache_[3];
};

struct ClassificationReport {
  bool abelian = false;
  bool perfect = false;
  bool nilpotent = false;
  std::optional<std::size_t> nilpotencyClass;
  bool solvable = false;
  std::optional<std::size_t> derivedLength;
  bool metabelian = false;
  std::optional<bool> hyperabelian;
  std::vector<std::size_t> lowerCentralDims;
  std::vector<std::size_t> derivedDims;
};

/// Hyperabelian is reported only when a complete lattice is supplied.
ClassificationReport classify(const Algebra& a, const IdealLattice* lattice = nullptr);

} // namespace prelie

#endif
