#include "prelie/maps.hpp"

#include "prelie/error.hpp"

namespace prelie {

LinearMap::LinearMap(AlgebraPtr domain, AlgebraPtr codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (!domain_ || !codomain_)
    fail(ErrorCode::ShapeMismatch, "linear map without domain or codomain");
  if (!(domain_->field() == codomain_->field()) || !(matrix_.field() == domain_->field()))
    fail(ErrorCode::FieldMismatch, "linear map between algebras over different fields");
  if (matrix_.rows() != codomain_->dim() || matrix_.cols() != domain_->dim())
    fail(ErrorCode::ShapeMismatch,
         "map matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
             ", expected " + std::to_string(codomain_->dim()) + "x" +
             std::to_string(domain_->dim()));
}

LinearMap LinearMap::identity(const AlgebraPtr& a) {
  return LinearMap(a, a, Matrix::identity(a->field(), a->dim()));
}

LinearMap LinearMap::zero(const AlgebraPtr& domain, const AlgebraPtr& codomain) {
  return LinearMap(domain, codomain, Matrix(domain->field(), codomain->dim(), domain->dim()));
}

bool LinearMap::isEndomorphism() const noexcept {
  return domain_ == codomain_ || domain_->sameStructure(*codomain_);
}

Vector LinearMap::apply(const Vector& x) const {
  domain_->requireElement(x);
  return matrix_.apply(x);
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (!f.codomain().sameStructure(g.domain()))
    fail(ErrorCode::ShapeMismatch, "cannot compose: codomain of the first map is not the domain "
                                   "of the second");
  return LinearMap(f.domainPtr(), g.codomainPtr(), g.matrix() * f.matrix());
}

const char* mapPropertyName(MapProperty p) noexcept {
  switch (p) {
  case MapProperty::Homomorphism: return "hom";
  case MapProperty::Antihomomorphism: return "antihom";
  case MapProperty::PreMorphism: return "pre-morphism";
  case MapProperty::Derivation: return "derivation";
  case MapProperty::PreDerivation: return "pre-derivation";
  }
  return "unknown";
}

MapProperty parseMapProperty(std::string_view text) {
  for (auto p : {MapProperty::Homomorphism, MapProperty::Antihomomorphism,
                 MapProperty::PreMorphism, MapProperty::Derivation, MapProperty::PreDerivation})
    if (text == mapPropertyName(p))
      return p;
  fail(ErrorCode::Parse, "unknown map property '" + std::string(text) + "'");
}

Verdict checkMapProperty(const LinearMap& f, MapProperty p) {
  const Algebra& dom = f.domain();
  const Algebra& cod = f.codomain();
  const bool derivationKind = p == MapProperty::Derivation || p == MapProperty::PreDerivation;
  if (derivationKind && !f.isEndomorphism())
    fail(ErrorCode::ShapeMismatch, "derivation properties need an endomorphism");

  const std::size_t n = dom.dim();
  std::vector<Vector> img;
  img.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    img.push_back(f.matrix().column(i));

  // defect(i, j) is the bilinear expression whose vanishing (or symmetry) is
  // the property being checked.
  auto defect = [&](std::size_t i, std::size_t j) -> Vector {
    Vector fij = f.apply(dom.basisProduct(i, j));
    switch (p) {
    case MapProperty::Homomorphism:
    case MapProperty::PreMorphism:
      return fij - cod.multiply(img[i], img[j]);
    case MapProperty::Antihomomorphism:
      return fij - cod.multiply(img[j], img[i]);
    case MapProperty::Derivation:
    case MapProperty::PreDerivation:
      return fij - dom.multiply(img[i], dom.basisVector(j)) -
             dom.multiply(dom.basisVector(i), img[j]);
    }
    return fij;
  };

  const bool symmetric = p == MapProperty::PreMorphism || p == MapProperty::PreDerivation;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (symmetric && j <= i)
        continue;
      Vector r = symmetric ? defect(i, j) - defect(j, i) : defect(i, j);
      if (!r.isZero())
        return Verdict::failAt({i, j}, std::move(r));
    }
  return Verdict::pass();
}

Algebra endomorphismAlgebra(std::size_t n, const FieldSpec& field) {
  std::vector<std::string> names;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      names.push_back("E" + std::to_string(r + 1) + "_" + std::to_string(c + 1));
  Algebra::Table t;
  // E_rc E_cd = E_rd
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d)
        t.emplace(std::pair{r * n + c, c * n + d}, Vector::unit(field, n * n, r * n + d));
  return Algebra("End" + std::to_string(n), field, std::move(names), t);
}

Vector matrixAsElement(const Matrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorCode::ShapeMismatch, "endomorphism matrix must be square");
  return m.flatten();
}

Matrix elementAsMatrix(const Vector& v, std::size_t n) {
  if (v.size() != n * n)
    fail(ErrorCode::ShapeMismatch, "element is not in End(k^" + std::to_string(n) + ")");
  Matrix m(v.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = v[r * n + c];
  return m;
}

namespace {

LinearMap mapIntoEnd(const AlgebraPtr& a, const std::function<Matrix(const Vector&)>& rep) {
  auto end = share(endomorphismAlgebra(a->dim(), a->field()));
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < a->dim(); ++i)
    cols.push_back(matrixAsElement(rep(a->basisVector(i))));
  return LinearMap(a, end, Matrix::fromColumns(a->field(), end->dim(), cols));
}

} // namespace

LinearMap leftRegularMap(const AlgebraPtr& a) {
  return mapIntoEnd(a, [&](const Vector& x) { return a->leftMultiplication(x); });
}

LinearMap innerPreDerivationMap(const AlgebraPtr& a) {
  return mapIntoEnd(a, [&](const Vector& x) {
    return a->leftMultiplication(x) - a->rightMultiplication(x);
  });
}

LinearMap innerPreDerivation(const AlgebraPtr& a, const Vector& x) {
  a->requireElement(x);
  return LinearMap(a, a, a->leftMultiplication(x) - a->rightMultiplication(x));
}

LinearMap preDerivationBracket(const LinearMap& d1, const LinearMap& d2) {
  if (!d1.isEndomorphism() || !d2.isEndomorphism() || !d1.domain().sameStructure(d2.domain()))
    fail(ErrorCode::ShapeMismatch, "bracket needs two endomorphisms of the same algebra");
  return LinearMap(d1.domainPtr(), d1.codomainPtr(),
                   d1.matrix() * d2.matrix() - d2.matrix() * d1.matrix());
}

namespace {

std::vector<Matrix> derivationLikeBasis(const Algebra& a, bool symmetrized) {
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  // Unknown u = r*n + c is the entry D(r, c).
  auto residual = [&](std::size_t u) {
    Matrix d(f, n, n);
    d(u / n, u % n) = Scalar::one(f);
    auto defect = [&](std::size_t i, std::size_t j) {
      return d.apply(a.basisProduct(i, j)) - a.multiply(d.column(i), a.basisVector(j)) -
             a.multiply(a.basisVector(i), d.column(j));
    };
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = symmetrized ? i + 1 : 0; j < n; ++j) {
        Vector r = symmetrized ? defect(i, j) - defect(j, i) : defect(i, j);
        out.insert(out.end(), r.entries().begin(), r.entries().end());
      }
    return Vector(f, std::move(out));
  };
  Subspace sol = homogeneousSolutions(f, n * n, residual);
  std::vector<Matrix> basis;
  for (const auto& v : sol.basis())
    basis.push_back(elementAsMatrix(v, n));
  return basis;
}

} // namespace

std::vector<Matrix> preDerivationBasis(const Algebra& a) { return derivationLikeBasis(a, true); }

std::vector<Matrix> derivationBasis(const Algebra& a) { return derivationLikeBasis(a, false); }

Decomposition idempotentDecompose(const LinearMap& e) {
  if (!e.isEndomorphism())
    fail(ErrorCode::ShapeMismatch, "idempotent decomposition needs an endomorphism");
  if (!(e.matrix() * e.matrix() == e.matrix()))
    fail(ErrorCode::NotIdempotent, "e o e differs from e");
  if (!checkMapProperty(e, MapProperty::Homomorphism).holds)
    fail(ErrorCode::NotHomomorphism, "e is not an algebra endomorphism");
  const Algebra& a = e.domain();
  Decomposition d;
  d.kernel = kernel(e.matrix());
  d.image = image(e.matrix());
  d.kernelIsIdeal = isIdealSubspace(a, d.kernel);
  d.imageIsSubalgebra = isSubalgebraSubspace(a, d.image);
  d.directSum = d.kernel.dim() + d.image.dim() == a.dim() && d.kernel.intersect(d.image).isZero();
  return d;
}

} // namespace prelie
