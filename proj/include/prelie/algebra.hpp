#ifndef PRELIE_ALGEBRA_HPP
#define PRELIE_ALGEBRA_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prelie/linalg.hpp"

namespace prelie {

/// One nonzero coefficient c_{ij}^k of a basis product.
struct Term {
  std::size_t index;
  Scalar coeff;
};

/// b_left * b_right = sum of terms. Terms are sorted by index and nonzero.
struct ProductEntry {
  std::size_t left;
  std::size_t right;
  std::vector<Term> terms;
};

/// A finite-dimensional (not necessarily associative) algebra given by a named
/// basis and sparse structure constants. Immutable once built; elements are
/// coordinate Vectors of length dim() over field().
class Algebra {
public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, Vector>;

  Algebra() = default;
  /// Zero vectors in the table are dropped. Throws Parse on duplicate or
  /// empty basis names and DimensionMismatch on malformed table entries.
  Algebra(std::string name, const FieldSpec& field, std::vector<std::string> basisNames,
          const Table& table = {});

  /// Builds the table by evaluating product(i, j) on every basis pair.
  static Algebra fromProduct(std::string name, const FieldSpec& field,
                             std::vector<std::string> basisNames,
                             const std::function<Vector(std::size_t, std::size_t)>& product);

  const std::string& name() const noexcept { return name_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basisNames() const noexcept { return names_; }
  std::optional<std::size_t> indexOf(std::string_view basisName) const;

  /// Nonzero basis products sorted by (left, right).
  std::span<const ProductEntry> entries() const noexcept { return entries_; }
  Vector basisVector(std::size_t i) const;
  Vector basisProduct(std::size_t i, std::size_t j) const;
  Vector zero() const { return Vector(field_, dim()); }

  /// Bilinear product. Throws AlgebraMismatch for foreign vectors.
  Vector multiply(const Vector& x, const Vector& y) const;
  /// Matrix of y -> x*y (column j is x*b_j).
  Matrix leftMultiplication(const Vector& x) const;
  /// Matrix of y -> y*x.
  Matrix rightMultiplication(const Vector& x) const;

  bool isAbelian() const noexcept { return entries_.empty(); }
  Algebra renamed(std::string name) const;
  Table table() const;

  void requireElement(const Vector& x) const;

  /// Equality of every field including the name.
  friend bool operator==(const Algebra& a, const Algebra& b);
  /// Same field, basis names and structure constants; the name is ignored.
  bool sameStructure(const Algebra& o) const;

private:
  std::string name_;
  FieldSpec field_;
  std::vector<std::string> names_;
  std::vector<ProductEntry> entries_;
  std::vector<int> lookup_; // dim*dim -> index into entries_ or -1
};

/// (xy)z - x(yz)
Vector associator(const Algebra& a, const Vector& x, const Vector& y, const Vector& z);

enum class IdentityKind { PreLie, RightSymmetric, LieAdmissible, Associative, Anticommutative, Jacobi };

const char* identityName(IdentityKind kind) noexcept;
/// Accepts the CLI spellings (pre-lie, right-symmetric, lie-admissible,
/// associative, anticommutative, jacobi).
IdentityKind parseIdentityKind(std::string_view text);

/// A failing basis tuple and the nonzero residual it produced. Residuals of
/// matrix-valued identities are flattened row-major.
struct Witness {
  std::vector<std::size_t> basis;
  Vector residual;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict failAt(std::vector<std::size_t> basis, Vector residual) {
    return {false, Witness{std::move(basis), std::move(residual)}};
  }
};

/// Exhaustive check on basis tuples (all identities here are multilinear).
/// The witness is the lexicographically first failing tuple. Anticommutative
/// means alternating: b_i b_i = 0 and b_i b_j + b_j b_i = 0, with pair witnesses.
Verdict checkIdentity(const Algebra& a, IdentityKind kind);

/// (A, [x,y] = xy - yx)
Algebra subAdjacent(const Algebra& a);
/// (A, x*y = yx)
Algebra opposite(const Algebra& a);

/// Structure constants of a subalgebra restricted to its echelon basis.
/// Throws NotSubalgebra when s is not closed under the product.
/// Basis vectors that are coordinate vectors keep their names.
Algebra restrictToSubalgebra(const Algebra& a, const Subspace& s, std::string name);

/// Two-sided closure: b*u and u*b lie in s for every basis b and basis u of s.
bool isIdealSubspace(const Algebra& a, const Subspace& s);
bool isSubalgebraSubspace(const Algebra& a, const Subspace& s);

/// Vector with the given named coordinates; throws Parse on an unknown name.
Vector elementFromNames(const Algebra& a, const std::map<std::string, Scalar>& coords);

} // namespace prelie

#endif
