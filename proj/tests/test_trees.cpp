#include "doctest.h"

#include <numeric>
#include <set>

#include "json_io.hpp"
#include "support.hpp"

using namespace testing;

namespace {

RootedTree tree(const char* s) { return RootedTree::parse(s); }

TreeSum sumOf(std::initializer_list<std::pair<const char*, long>> terms) {
  TreeSum t(Q);
  for (const auto& [s, c] : terms)
    t.add(tree(s), Scalar::fromInt(Q, c));
  return t;
}

// Random parent array with parents preceding children.
std::vector<long> randomParents(Rng& rng, std::size_t n) {
  std::vector<long> p(n, -1);
  for (std::size_t v = 1; v < n; ++v)
    p[v] = rng.range(0, long(v) - 1);
  return p;
}

TreeSum randomTreeSum(Rng& rng, const FieldSpec& f) {
  TreeSum s(f);
  for (std::size_t k = 0, n = 1 + rng.index(3); k < n; ++k) {
    auto p = randomParents(rng, 1 + rng.index(4));
    s.add(RootedTree::fromParents(p), rng.scalar(f));
  }
  return s;
}

} // namespace

TEST_CASE("canonical strings") {
  CHECK(RootedTree().str() == "()");
  const long chain[] = {-1, 0, 1};
  const long relabeled[] = {1, 2, -1};
  CHECK(RootedTree::fromParents(chain) == RootedTree::fromParents(relabeled));
  CHECK(RootedTree::fromParents(chain).str() == "((()))");
  CHECK(tree("((())())").str() == "(()(()))");
  CHECK(tree("(()(()))").children().size() == 2);
  CHECK(RootedTree::fromChildren({tree("(())"), tree("()")}).str() == "(()(()))");
  CHECK(tree("(()(()))").vertexCount() == 4);
}

TEST_CASE("malformed trees") {
  for (const char* bad : {"", "(", ")", "()()", "(()", "(a)", "(()))"})
    CHECK(errorOf([&] { RootedTree::parse(bad); }) == ErrorCode::MalformedTree);
  const long cycle[] = {1, 0};
  CHECK(errorOf([&] { RootedTree::fromParents(cycle); }) == ErrorCode::MalformedTree);
  const long twoRoots[] = {-1, -1};
  CHECK(errorOf([&] { RootedTree::fromParents(twoRoots); }) == ErrorCode::MalformedTree);
  const long outOfRange[] = {-1, 5};
  CHECK(errorOf([&] { RootedTree::fromParents(outOfRange); }) == ErrorCode::MalformedTree);
}

TEST_CASE("canonical form is invariant under relabeling") {
  Rng rng(51);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = 1 + rng.index(9);
    auto p = randomParents(rng, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    std::vector<long> q(n);
    for (std::size_t v = 0; v < n; ++v)
      q[perm[v]] = p[v] < 0 ? -1 : long(perm[std::size_t(p[v])]);
    RootedTree t = RootedTree::fromParents(p);
    CHECK(RootedTree::fromParents(q) == t);
    CHECK(RootedTree::parse(t.str()) == t);
    CHECK(t.vertexCount() == n);
  }
}

TEST_CASE("enumeration") {
  const std::size_t counts[] = {1, 1, 2, 4, 9, 20, 48, 115};
  for (std::size_t n = 1; n <= 8; ++n) {
    auto trees = enumerateTrees(n);
    CHECK(trees.size() == counts[n - 1]);
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    std::set<std::string> distinct;
    for (const auto& t : trees)
      distinct.insert(t.str());
    CHECK(distinct.size() == trees.size());
  }
  CHECK(enumerateTrees(0).empty());
  CHECK(errorOf([] { enumerateTrees(13); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("grafting") {
  CHECK(graft(RootedTree(), RootedTree(), 0).str() == "(())");
  CHECK(graft(tree("(()())"), tree("(())"), 0).str() == "(()(()()))");
  CHECK(graft(tree("(()())"), tree("(())"), 1).str() == "(((()())))");
  CHECK(errorOf([] { graft(RootedTree(), tree("(())"), 2); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("tree products") {
  CHECK(treeProduct(sumOf({{"()", 1}}), sumOf({{"()", 1}})) == sumOf({{"(())", 1}}));
  CHECK(treeProduct(sumOf({{"(())", 1}}), sumOf({{"(())", 1}})) ==
        sumOf({{"(()(()))", 1}, {"((()))", 0}, {"(((())))", 1}}));
  CHECK(treeProduct(sumOf({{"(()())", 1}}), sumOf({{"(())", 1}})) ==
        sumOf({{"(()(()()))", 1}, {"(((()())))", 1}}));
  // equal trees collect coefficients
  CHECK(treeProduct(sumOf({{"()", 1}}), sumOf({{"(()())", 1}})) ==
        sumOf({{"(()()())", 1}, {"((())())", 2}}));
  CHECK(errorOf([] { treeProduct(TreeSum(Q), TreeSum(GF2)); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("grading and the pre-Lie law for tree sums") {
  Rng rng(52);
  for (int k = 0; k < 40; ++k) {
    const FieldSpec& f = k % 2 ? Q : GF3;
    TreeSum x = randomTreeSum(rng, f), y = randomTreeSum(rng, f), z = randomTreeSum(rng, f);
    TreeSum lhs = treeProduct(treeProduct(x, y), z) - treeProduct(x, treeProduct(y, z));
    TreeSum rhs = treeProduct(treeProduct(y, x), z) - treeProduct(y, treeProduct(x, z));
    CHECK(lhs == rhs);
  }
  for (int k = 0; k < 60; ++k) {
    RootedTree s = RootedTree::fromParents(randomParents(rng, 1 + rng.index(5)));
    RootedTree t = RootedTree::fromParents(randomParents(rng, 1 + rng.index(5)));
    TreeSum p = treeProduct(TreeSum::single(Q, s), TreeSum::single(Q, t));
    Scalar mass = Scalar::zero(Q);
    for (const auto& [str, c] : p.terms()) {
      CHECK(RootedTree::parse(str).vertexCount() == s.vertexCount() + t.vertexCount());
      mass += c;
    }
    CHECK(mass == Scalar::fromInt(Q, long(t.vertexCount())));
  }
}

TEST_CASE("truncated algebras") {
  Algebra a2 = truncatedFreeAlgebra(2, Q);
  CHECK(a2.dim() == 1);
  CHECK(a2.isAbelian());
  Algebra a3 = truncatedFreeAlgebra(3, Q);
  CHECK(a3.basisNames() == std::vector<std::string>{"()", "(())"});
  CHECK(a3.basisProduct(0, 0) == a3.basisVector(1));
  CHECK(a3.basisProduct(0, 1).isZero());
  CHECK(a3.basisProduct(1, 0).isZero());
  CHECK(a3.basisProduct(1, 1).isZero());
  Algebra a5 = truncatedFreeAlgebra(5, Q);
  CHECK(a5.basisNames() == std::vector<std::string>{"v", "e", "a", "b", "c", "d", "f", "g"});
  auto basis = truncationBasis(5);
  CHECK(basis.size() == 8);
  CHECK(basis[2].str() == "(()())");
  CHECK(basis[3].str() == "((()))");
  Algebra a6 = truncatedFreeAlgebra(6, GF5);
  CHECK(a6.dim() == 17);
  CHECK(checkIdentity(a6, IdentityKind::PreLie).holds);
  CHECK(errorOf([] { truncatedFreeAlgebra(1, Q); }) == ErrorCode::Parse);
  CHECK(errorOf([] { truncatedFreeAlgebra(20, Q); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("truncation matches products of tree sums") {
  Algebra a = truncatedFreeAlgebra(6, Q);
  auto basis = truncationBasis(6);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      TreeSum p = treeProduct(TreeSum::single(Q, basis[i]), TreeSum::single(Q, basis[j]));
      Vector v = a.zero();
      for (std::size_t k = 0; k < basis.size(); ++k)
        v[k] = p.coefficient(basis[k]);
      CHECK(a.basisProduct(i, j) == v);
    }
}

TEST_CASE("tree sum documents") {
  Rng rng(53);
  for (int k = 0; k < 20; ++k) {
    TreeSum s = randomTreeSum(rng, GF5);
    CHECK(json_io::treeSumFromJson(json_io::toJson(s), GF5) == s);
  }
  CHECK(json_io::treeSumFromJson(nlohmann::json("((())())"), Q) == sumOf({{"(()(()))", 1}}));
}
