#ifndef PRELIE_MAPS_HPP
#define PRELIE_MAPS_HPP

#include <memory>
#include <string_view>
#include <vector>

#include "prelie/algebra.hpp"

namespace prelie {

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr share(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

/// A k-linear map between algebras. Column j of the matrix is the image of
/// domain basis vector j.
class LinearMap {
public:
  LinearMap(AlgebraPtr domain, AlgebraPtr codomain, Matrix matrix);

  static LinearMap identity(const AlgebraPtr& a);
  static LinearMap zero(const AlgebraPtr& domain, const AlgebraPtr& codomain);

  const Algebra& domain() const noexcept { return *domain_; }
  const Algebra& codomain() const noexcept { return *codomain_; }
  const AlgebraPtr& domainPtr() const noexcept { return domain_; }
  const AlgebraPtr& codomainPtr() const noexcept { return codomain_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  bool isEndomorphism() const noexcept;

  Vector apply(const Vector& x) const;

private:
  AlgebraPtr domain_;
  AlgebraPtr codomain_;
  Matrix matrix_;
};

/// g after f. Throws ShapeMismatch when f's codomain is not g's domain.
LinearMap compose(const LinearMap& g, const LinearMap& f);

enum class MapProperty { Homomorphism, Antihomomorphism, PreMorphism, Derivation, PreDerivation };

const char* mapPropertyName(MapProperty p) noexcept;
/// hom, antihom, pre-morphism, derivation, pre-derivation
MapProperty parseMapProperty(std::string_view text);

/// Exhaustive check over basis pairs (i, j); the witness is the first failing
/// pair in lexicographic order. Derivation kinds require an endomorphism
/// (ShapeMismatch otherwise).
Verdict checkMapProperty(const LinearMap& f, MapProperty p);

/// End(k^n) as the associative algebra of n x n matrices. Basis vector r*n+c
/// is the matrix unit E_rc, so the product is composition.
Algebra endomorphismAlgebra(std::size_t n, const FieldSpec& field);
Vector matrixAsElement(const Matrix& m);
Matrix elementAsMatrix(const Vector& v, std::size_t n);

/// x -> lambda_x (left multiplication) into End(A).
LinearMap leftRegularMap(const AlgebraPtr& a);
/// x -> d_x into End(A).
LinearMap innerPreDerivationMap(const AlgebraPtr& a);

/// d_x(y) = xy - yx
LinearMap innerPreDerivation(const AlgebraPtr& a, const Vector& x);
/// [d, d'] = d d' - d' d
LinearMap preDerivationBracket(const LinearMap& d1, const LinearMap& d2);

/// Basis (as endomorphism matrices) of the solution space of the linear
/// system defining pre-derivations, respectively derivations, of a.
std::vector<Matrix> preDerivationBasis(const Algebra& a);
std::vector<Matrix> derivationBasis(const Algebra& a);

struct Decomposition {
  Subspace kernel;
  Subspace image;
  bool kernelIsIdeal = false;
  bool imageIsSubalgebra = false;
  bool directSum = false;
};

/// For an idempotent algebra endomorphism e: A = ker(e) + e(A).
/// Throws NotIdempotent or NotHomomorphism on invalid input.
Decomposition idempotentDecompose(const LinearMap& e);

} // namespace prelie

#endif
