#ifndef PRELIE_TREES_HPP
#define PRELIE_TREES_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prelie/algebra.hpp"

namespace prelie {

/// Shortlex order on strings: shorter first, then bytewise.
struct ShortlexLess {
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
  using is_transparent = void;
};

/// An unlabeled rooted tree held as its canonical parenthesis string:
/// "(" + children's canonical strings in shortlex order + ")".
class RootedTree {
public:
  /// The single vertex "()".
  RootedTree();

  /// Accepts any balanced single-root parenthesis string and canonicalizes
  /// it. Throws MalformedTree.
  static RootedTree parse(std::string_view text);
  /// parents[i] is the parent of vertex i, or -1 for the root.
  /// Throws MalformedTree on cycles, several roots or out-of-range parents.
  static RootedTree fromParents(std::span<const long> parents);
  static RootedTree fromChildren(std::vector<RootedTree> children);

  const std::string& str() const noexcept { return text_; }
  std::size_t vertexCount() const noexcept { return text_.size() / 2; }
  std::vector<RootedTree> children() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.text_ == b.text_; }
  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b);

private:
  explicit RootedTree(std::string canonical) : text_(std::move(canonical)) {}

  std::string text_;
};

inline constexpr std::size_t kDefaultTreeBudget = 12;

/// All trees with exactly n vertices, in canonical order. Throws
/// BudgetExceeded when n exceeds maxVertices.
std::vector<RootedTree> enumerateTrees(std::size_t n, std::size_t maxVertices = kDefaultTreeBudget);

/// Attach the root of t1 by a new edge to vertex v of t2. Vertices of t2 are
/// numbered in preorder of its canonical string (root = 0).
/// Throws VertexOutOfRange.
RootedTree graft(const RootedTree& t1, const RootedTree& t2, std::size_t v);

/// Finitely supported combination of trees.
class TreeSum {
public:
  using Terms = std::map<std::string, Scalar, ShortlexLess>;

  explicit TreeSum(const FieldSpec& f) : field_(f) {}
  static TreeSum single(const FieldSpec& f, const RootedTree& t);

  const FieldSpec& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool isZero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const RootedTree& t) const;

  void add(const RootedTree& t, const Scalar& c);
  TreeSum& operator+=(const TreeSum& o);
  TreeSum& operator-=(const TreeSum& o);
  TreeSum& operator*=(const Scalar& s);
  friend TreeSum operator+(TreeSum a, const TreeSum& b) { return a += b; }
  friend TreeSum operator-(TreeSum a, const TreeSum& b) { return a -= b; }
  friend TreeSum operator*(const Scalar& s, TreeSum t) { return t *= s; }
  friend bool operator==(const TreeSum& a, const TreeSum& b);

private:
  void requireSameField(const FieldSpec& f) const;

  FieldSpec field_;
  Terms terms_;
};

/// T1 . T2 = sum over vertices v of T2 of graft(T1, T2, v), extended
/// bilinearly. Throws FieldMismatch.
TreeSum treeProduct(const TreeSum& s, const TreeSum& t);

/// Basis of the truncation: all trees with fewer than maxVertices vertices.
/// Ordered by vertex count then canonical string, except that the
/// five-vertex truncation uses the named order v, e, a, b, c, d, f, g.
std::vector<RootedTree> truncationBasis(std::size_t maxVertices);

/// Trees with at least maxVertices vertices span an ideal; this is the
/// quotient by it, as structure constants. Throws BudgetExceeded.
Algebra truncatedFreeAlgebra(std::size_t maxVertices, const FieldSpec& field,
                             std::size_t budget = kDefaultTreeBudget);

} // namespace prelie

#endif
