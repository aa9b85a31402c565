#include "prelie/algebra.hpp"

#include <algorithm>
#include <set>

#include "prelie/error.hpp"

namespace prelie {

Algebra::Algebra(std::string name, const FieldSpec& field, std::vector<std::string> basisNames,
                 const Table& table)
    : name_(std::move(name)), field_(field), names_(std::move(basisNames)) {
  if (names_.empty())
    fail(ErrorCode::Parse, "algebra '" + name_ + "' has an empty basis");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty())
      fail(ErrorCode::Parse, "algebra '" + name_ + "' has an empty basis name");
    if (!seen.insert(n).second)
      fail(ErrorCode::Parse, "algebra '" + name_ + "' repeats basis name '" + n + "'");
  }
  const std::size_t n = dim();
  lookup_.assign(n * n, -1);
  for (const auto& [key, value] : table) {
    auto [i, j] = key;
    if (i >= n || j >= n || value.size() != n || !(value.field() == field_))
      fail(ErrorCode::DimensionMismatch, "algebra '" + name_ + "': bad structure entry (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
    ProductEntry e{i, j, {}};
    for (std::size_t k = 0; k < n; ++k)
      if (!value[k].isZero())
        e.terms.push_back({k, value[k]});
    if (e.terms.empty())
      continue;
    lookup_[i * n + j] = static_cast<int>(entries_.size());
    entries_.push_back(std::move(e));
  }
}

Algebra Algebra::fromProduct(std::string name, const FieldSpec& field,
                             std::vector<std::string> basisNames,
                             const std::function<Vector(std::size_t, std::size_t)>& product) {
  Table t;
  const std::size_t n = basisNames.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = product(i, j);
      if (!v.isZero())
        t.emplace(std::pair{i, j}, std::move(v));
    }
  return Algebra(std::move(name), field, std::move(basisNames), t);
}

std::optional<std::size_t> Algebra::indexOf(std::string_view basisName) const {
  auto it = std::find(names_.begin(), names_.end(), basisName);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Vector Algebra::basisVector(std::size_t i) const { return Vector::unit(field_, dim(), i); }

Vector Algebra::basisProduct(std::size_t i, std::size_t j) const {
  Vector v = zero();
  int idx = lookup_[i * dim() + j];
  if (idx >= 0)
    for (const auto& t : entries_[idx].terms)
      v[t.index] = t.coeff;
  return v;
}

void Algebra::requireElement(const Vector& x) const {
  if (x.size() != dim() || !(x.field() == field_))
    fail(ErrorCode::AlgebraMismatch, "vector of length " + std::to_string(x.size()) +
                                         " over " + x.field().toString() +
                                         " is not an element of '" + name_ + "'");
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  requireElement(x);
  requireElement(y);
  Vector out = zero();
  for (const auto& e : entries_) {
    const Scalar& xi = x[e.left];
    if (xi.isZero())
      continue;
    const Scalar& yj = y[e.right];
    if (yj.isZero())
      continue;
    Scalar c = xi * yj;
    for (const auto& t : e.terms)
      out[t.index] += c * t.coeff;
  }
  return out;
}

Matrix Algebra::leftMultiplication(const Vector& x) const {
  requireElement(x);
  Matrix m(field_, dim(), dim());
  for (const auto& e : entries_) {
    const Scalar& xi = x[e.left];
    if (xi.isZero())
      continue;
    for (const auto& t : e.terms)
      m(t.index, e.right) += xi * t.coeff;
  }
  return m;
}

Matrix Algebra::rightMultiplication(const Vector& x) const {
  requireElement(x);
  Matrix m(field_, dim(), dim());
  for (const auto& e : entries_) {
    const Scalar& xj = x[e.right];
    if (xj.isZero())
      continue;
    for (const auto& t : e.terms)
      m(t.index, e.left) += xj * t.coeff;
  }
  return m;
}

Algebra Algebra::renamed(std::string name) const {
  Algebra a(*this);
  a.name_ = std::move(name);
  return a;
}

Algebra::Table Algebra::table() const {
  Table t;
  for (const auto& e : entries_)
    t.emplace(std::pair{e.left, e.right}, basisProduct(e.left, e.right));
  return t;
}

bool Algebra::sameStructure(const Algebra& o) const {
  if (!(field_ == o.field_) || names_ != o.names_ || entries_.size() != o.entries_.size())
    return false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& a = entries_[k];
    const auto& b = o.entries_[k];
    if (a.left != b.left || a.right != b.right || a.terms.size() != b.terms.size())
      return false;
    for (std::size_t t = 0; t < a.terms.size(); ++t)
      if (a.terms[t].index != b.terms[t].index || !(a.terms[t].coeff == b.terms[t].coeff))
        return false;
  }
  return true;
}

bool operator==(const Algebra& a, const Algebra& b) {
  return a.name_ == b.name_ && a.sameStructure(b);
}

Vector associator(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return a.multiply(a.multiply(x, y), z) - a.multiply(x, a.multiply(y, z));
}

const char* identityName(IdentityKind kind) noexcept {
  switch (kind) {
  case IdentityKind::PreLie: return "pre-lie";
  case IdentityKind::RightSymmetric: return "right-symmetric";
  case IdentityKind::LieAdmissible: return "lie-admissible";
  case IdentityKind::Associative: return "associative";
  case IdentityKind::Anticommutative: return "anticommutative";
  case IdentityKind::Jacobi: return "jacobi";
  }
  return "unknown";
}

IdentityKind parseIdentityKind(std::string_view text) {
  for (auto k : {IdentityKind::PreLie, IdentityKind::RightSymmetric, IdentityKind::LieAdmissible,
                 IdentityKind::Associative, IdentityKind::Anticommutative, IdentityKind::Jacobi})
    if (text == identityName(k))
      return k;
  fail(ErrorCode::Parse, "unknown identity '" + std::string(text) + "'");
}

namespace {

// Basis products and their products with basis elements, cached per check.
struct TripleTable {
  const Algebra& a;
  std::vector<Vector> prod; // prod[i*n+j] = b_i b_j

  explicit TripleTable(const Algebra& alg) : a(alg) {
    const std::size_t n = a.dim();
    prod.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        prod.push_back(a.basisProduct(i, j));
  }

  const Vector& p(std::size_t i, std::size_t j) const { return prod[i * a.dim() + j]; }

  // (b_i b_j) b_k
  Vector leftNested(std::size_t i, std::size_t j, std::size_t k) const {
    return a.multiply(p(i, j), a.basisVector(k));
  }
  // b_i (b_j b_k)
  Vector rightNested(std::size_t i, std::size_t j, std::size_t k) const {
    return a.multiply(a.basisVector(i), p(j, k));
  }
  Vector assoc(std::size_t i, std::size_t j, std::size_t k) const {
    return leftNested(i, j, k) - rightNested(i, j, k);
  }
};

} // namespace

Verdict checkIdentity(const Algebra& a, IdentityKind kind) {
  const std::size_t n = a.dim();
  TripleTable t(a);

  if (kind == IdentityKind::Anticommutative) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vector r = i == j ? t.p(i, i) : t.p(i, j) + t.p(j, i);
        if (!r.isZero())
          return Verdict::failAt({i, j}, std::move(r));
      }
    return Verdict::pass();
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector r;
        switch (kind) {
        case IdentityKind::PreLie:
          r = t.assoc(i, j, k) - t.assoc(j, i, k);
          break;
        case IdentityKind::RightSymmetric:
          r = t.assoc(i, j, k) - t.assoc(i, k, j);
          break;
        case IdentityKind::LieAdmissible:
          r = t.assoc(i, j, k) + t.assoc(j, k, i) + t.assoc(k, i, j) - t.assoc(j, i, k) -
              t.assoc(i, k, j) - t.assoc(k, j, i);
          break;
        case IdentityKind::Associative:
          r = t.assoc(i, j, k);
          break;
        case IdentityKind::Jacobi:
          r = t.rightNested(i, j, k) + t.rightNested(j, k, i) + t.rightNested(k, i, j);
          break;
        case IdentityKind::Anticommutative:
          break;
        }
        if (!r.isZero())
          return Verdict::failAt({i, j, k}, std::move(r));
      }
  return Verdict::pass();
}

Algebra subAdjacent(const Algebra& a) {
  return Algebra::fromProduct(a.name() + ".lie", a.field(), a.basisNames(),
                              [&](std::size_t i, std::size_t j) {
                                return a.basisProduct(i, j) - a.basisProduct(j, i);
                              });
}

Algebra opposite(const Algebra& a) {
  Algebra::Table t;
  for (const auto& e : a.entries())
    t.emplace(std::pair{e.right, e.left}, a.basisProduct(e.left, e.right));
  return Algebra(a.name() + ".op", a.field(), a.basisNames(), t);
}

Algebra restrictToSubalgebra(const Algebra& a, const Subspace& s, std::string name) {
  if (s.ambientDim() != a.dim() || !(s.field() == a.field()))
    fail(ErrorCode::AlgebraMismatch, "subspace does not live in '" + a.name() + "'");
  if (s.isZero())
    fail(ErrorCode::NotSubalgebra, "cannot restrict to the zero subspace");
  const auto& basis = s.basis();
  std::vector<std::string> names;
  int fresh = 0;
  for (const auto& b : basis) {
    std::size_t lead = b.leadingIndex();
    bool coordinate = true;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (k != lead && !b[k].isZero())
        coordinate = false;
    names.push_back(coordinate ? a.basisNames()[lead] : "s" + std::to_string(++fresh));
  }
  // Fresh names may collide with kept ones; disambiguate deterministically.
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) {
        names[i] += "'";
        j = static_cast<std::size_t>(-1);
      }
  return Algebra::fromProduct(std::move(name), a.field(), std::move(names),
                              [&](std::size_t i, std::size_t j) {
                                Vector p = a.multiply(basis[i], basis[j]);
                                if (!s.memberOf(p))
                                  fail(ErrorCode::NotSubalgebra,
                                       "subspace is not closed under the product of '" +
                                           a.name() + "'");
                                return s.coordinates(p);
                              });
}

bool isIdealSubspace(const Algebra& a, const Subspace& s) {
  if (s.ambientDim() != a.dim() || !(s.field() == a.field()))
    fail(ErrorCode::AlgebraMismatch, "subspace does not live in '" + a.name() + "'");
  for (const auto& u : s.basis())
    for (std::size_t b = 0; b < a.dim(); ++b) {
      Vector e = a.basisVector(b);
      if (!s.memberOf(a.multiply(e, u)) || !s.memberOf(a.multiply(u, e)))
        return false;
    }
  return true;
}

bool isSubalgebraSubspace(const Algebra& a, const Subspace& s) {
  if (s.ambientDim() != a.dim() || !(s.field() == a.field()))
    fail(ErrorCode::AlgebraMismatch, "subspace does not live in '" + a.name() + "'");
  for (const auto& u : s.basis())
    for (const auto& w : s.basis())
      if (!s.memberOf(a.multiply(u, w)))
        return false;
  return true;
}

Vector elementFromNames(const Algebra& a, const std::map<std::string, Scalar>& coords) {
  Vector v = a.zero();
  for (const auto& [name, value] : coords) {
    auto idx = a.indexOf(name);
    if (!idx)
      fail(ErrorCode::Parse, "unknown basis name '" + name + "' in algebra '" + a.name() + "'");
    if (!(value.field() == a.field()))
      fail(ErrorCode::FieldMismatch, "coefficient field differs from algebra field");
    v[*idx] = value;
  }
  return v;
}

} // namespace prelie
