#ifndef PRELIE_CONSTRUCTIONS_HPP
#define PRELIE_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prelie/maps.hpp"

namespace prelie {

/// An action of B (actor) on I (acted): lambda[b] and rho[b] are the
/// dim I x dim I matrices of lambda and rho on basis vector b of B.
struct ActionPair {
  AlgebraPtr actor;
  AlgebraPtr acted;
  std::vector<Matrix> lambda;
  std::vector<Matrix> rho;
};

/// Throws ShapeMismatch or FieldMismatch on malformed pairs.
void validateAction(const ActionPair& pair);

/// lambda or rho of an arbitrary element of the actor.
Matrix actionOf(const std::vector<Matrix>& maps, const Vector& b);

struct ActionVerdict {
  bool holds = true;
  /// 'a' .. 'd'
  std::optional<char> failedCondition;
  /// Indices: (a, b) in B for conditions a and b; (a, i, j) with a in B and
  /// i, j in I for conditions c and d. Matrix residuals are row-major.
  std::optional<Witness> witness;
};

/// Conditions:
///   (a) lambda is a pre-morphism B -> End(I)
///   (b) rho_a lambda_b - lambda_b rho_a = rho_a rho_b - rho_{ba}
///   (c) lambda_a(i) j - lambda_a(ij) = rho_a(i) j - i lambda_a(j)
///   (d) rho_a(ij) - i rho_a(j) = rho_a(ji) - j rho_a(i)
/// checked in that order on basis elements.
ActionVerdict checkAction(const ActionPair& pair);

/// Only (a) and (b). Throws NotAbelian unless the acted algebra has zero
/// multiplication.
ActionVerdict checkBimodule(const ActionPair& pair);

/// I + B with (i,b)*(j,c) = (ij + lambda_b(j) + rho_c(i), bc); basis I first.
/// Throws ActionInvalid when checkAction fails and NotPreLie when I or B is
/// not pre-Lie.
Algebra semidirectProduct(const ActionPair& pair);

/// Componentwise product on A + B, basis A first.
Algebra directProduct(const Algebra& a, const Algebra& b);

/// Recovers (lambda, rho) from an algebra whose first actedDim coordinates
/// span an ideal I and whose remaining coordinates span a subalgebra B.
/// Throws NotAnIdeal or NotSubalgebra.
ActionPair extractAction(const Algebra& c, std::size_t actedDim);

/// The endomorphism (i, b) -> (0, b) of an algebra split as I + B.
LinearMap complementProjection(const AlgebraPtr& c, std::size_t actedDim);

/// A left module: lambda[x] is the moduleDim x moduleDim matrix of x.
struct ModuleStructure {
  AlgebraPtr algebra;
  std::size_t moduleDim = 0;
  std::vector<Matrix> lambda;
};

/// (xy).m - x.(y.m) = (yx).m - y.(x.m) on basis triples (x, y, m), y > x.
/// Also evaluated as a pre-morphism A -> End(k^m); disagreement throws
/// Internal. Throws ShapeMismatch on malformed input.
Verdict checkModule(const ModuleStructure& m);

/// The 1-dimensional algebra k with basis "1" and 1*1 = 1.
Algebra groundFieldAlgebra(const FieldSpec& field);

struct AugmentedAlgebra {
  AlgebraPtr algebra;
  Vector unit;
  LinearMap augmentation;
};

/// Throws AugmentationInvalid when the unit law, the homomorphism property
/// of the augmentation or eps(1) = 1 fails.
void validateAugmented(const AugmentedAlgebra& aug);

/// A # k: basis of A followed by the unit, augmentation the projection onto
/// the unit coordinate. Throws NotPreLie.
AugmentedAlgebra dorrohExtend(const Algebra& a);

/// ker(eps) as a structure-constant algebra. Throws AugmentationInvalid.
Algebra dorrohRoundTrip(const AugmentedAlgebra& aug);

bool checkIdempotent(const Algebra& a, const Vector& e);
/// alpha -> alpha e from k into A.
LinearMap elementMorphism(const AlgebraPtr& a, const Vector& e);
/// Every e with ee = e, in coordinate order. Throws FieldNotFinite or
/// BudgetExceeded when p^dim exceeds the budget.
std::vector<Vector> idempotentElements(const Algebra& a,
                                       std::uint64_t budget = std::uint64_t{1} << 16);

/// Named algebras: rank2, triangular n, matrix n, abelian n, field, a8,
/// complex (basis 1, i with i*i = -1), split (two orthogonal idempotents).
/// Throws UnknownGallery, and TwoNotInvertible for triangular over GF(2).
Algebra galleryAlgebra(std::string_view id, std::size_t n, const FieldSpec& field);
std::vector<std::string> galleryIds();

/// Upper triangular matrices with X.Y = XY + phi(XY^t + YX^t), where phi
/// keeps the strict upper part and halves the diagonal.
Algebra triangularAlgebra(std::size_t n, const FieldSpec& field);

/// Polynomial in a fixed number of variables: exponent vector -> coefficient.
using Polynomial = std::map<std::vector<std::uint32_t>, Scalar>;

/// A vector of polynomials (u_1, .., u_n) in n variables.
class PolyVector {
public:
  PolyVector(const FieldSpec& f, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return comps_.size(); }
  const Polynomial& component(std::size_t k) const { return comps_.at(k); }
  /// Adds c x^exps to component k.
  void addTerm(std::size_t k, std::vector<std::uint32_t> exps, const Scalar& c);
  bool isZero() const noexcept;

  PolyVector& operator+=(const PolyVector& o);
  PolyVector& operator-=(const PolyVector& o);
  friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
  friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
  friend bool operator==(const PolyVector& a, const PolyVector& b);

private:
  void requireCompatible(const PolyVector& o) const;

  FieldSpec field_;
  std::vector<Polynomial> comps_;
};

/// (v.u)_k = sum_j v_j d(u_k)/dx_j. Throws ArityMismatch.
PolyVector polyDerivationProduct(const PolyVector& v, const PolyVector& u);

} // namespace prelie

#endif
