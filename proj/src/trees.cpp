#include "prelie/trees.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "prelie/error.hpp"

namespace prelie {

namespace {

// Canonical string of the subtree whose "(" is at text[pos]; pos ends just
// past the matching ")".
std::string canonicalAt(std::string_view text, std::size_t& pos, std::size_t depth) {
  if (depth > 100000)
    fail(ErrorCode::MalformedTree, "tree is nested too deeply");
  if (pos >= text.size() || text[pos] != '(')
    fail(ErrorCode::MalformedTree, "expected '(' at offset " + std::to_string(pos));
  ++pos;
  std::vector<std::string> kids;
  while (pos < text.size() && text[pos] == '(')
    kids.push_back(canonicalAt(text, pos, depth + 1));
  if (pos >= text.size() || text[pos] != ')')
    fail(ErrorCode::MalformedTree, "unbalanced parentheses in '" + std::string(text) + "'");
  ++pos;
  std::sort(kids.begin(), kids.end(), ShortlexLess{});
  std::string out = "(";
  for (const auto& k : kids)
    out += k;
  out += ')';
  return out;
}

} // namespace

RootedTree::RootedTree() : text_("()") {}

RootedTree RootedTree::parse(std::string_view text) {
  std::size_t pos = 0;
  std::string canon = canonicalAt(text, pos, 0);
  if (pos != text.size())
    fail(ErrorCode::MalformedTree, "trailing input after the root in '" + std::string(text) + "'");
  return RootedTree(std::move(canon));
}

RootedTree RootedTree::fromParents(std::span<const long> parents) {
  const std::size_t n = parents.size();
  if (n == 0)
    fail(ErrorCode::MalformedTree, "a tree needs at least one vertex");
  std::vector<std::vector<std::size_t>> kids(n);
  std::size_t root = n;
  for (std::size_t i = 0; i < n; ++i) {
    long p = parents[i];
    if (p == -1) {
      if (root != n)
        fail(ErrorCode::MalformedTree, "more than one root");
      root = i;
    } else if (p < 0 || static_cast<std::size_t>(p) >= n || static_cast<std::size_t>(p) == i) {
      fail(ErrorCode::MalformedTree, "vertex " + std::to_string(i) + " has invalid parent " +
                                         std::to_string(p));
    } else {
      kids[static_cast<std::size_t>(p)].push_back(i);
    }
  }
  if (root == n)
    fail(ErrorCode::MalformedTree, "no root");

  std::vector<bool> seen(n, false);
  std::size_t reached = 0;
  std::function<std::string(std::size_t)> build = [&](std::size_t v) {
    seen[v] = true;
    ++reached;
    std::vector<std::string> sub;
    for (std::size_t c : kids[v])
      sub.push_back(build(c));
    std::sort(sub.begin(), sub.end(), ShortlexLess{});
    std::string out = "(";
    for (const auto& s : sub)
      out += s;
    return out + ")";
  };
  std::string canon = build(root);
  if (reached != n)
    fail(ErrorCode::MalformedTree, "parent array contains a cycle or a detached part");
  return RootedTree(std::move(canon));
}

RootedTree RootedTree::fromChildren(std::vector<RootedTree> children) {
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children)
    out += c.text_;
  return RootedTree(out + ")");
}

std::vector<RootedTree> RootedTree::children() const {
  std::vector<RootedTree> out;
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 1; i + 1 < text_.size(); ++i) {
    if (text_[i] == '(') {
      if (depth++ == 0)
        start = i;
    } else if (--depth == 0) {
      out.push_back(RootedTree(text_.substr(start, i + 1 - start)));
    }
  }
  return out;
}

std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
  if (ShortlexLess{}(a.text_, b.text_))
    return std::strong_ordering::less;
  if (a.text_ == b.text_)
    return std::strong_ordering::equal;
  return std::strong_ordering::greater;
}

std::vector<RootedTree> enumerateTrees(std::size_t n, std::size_t maxVertices) {
  if (n == 0)
    return {};
  if (n > maxVertices)
    fail(ErrorCode::BudgetExceeded, "tree enumeration limited to " +
                                        std::to_string(maxVertices) + " vertices");
  // byCount[k] lists the trees with k vertices in canonical order.
  std::vector<std::vector<RootedTree>> byCount(n + 1);
  byCount[1].push_back(RootedTree());
  for (std::size_t k = 2; k <= n; ++k) {
    // Children multisets of total size k-1, chosen as non-increasing
    // sequences of (size, index) pairs so each multiset appears once.
    std::vector<RootedTree> chosen;
    std::function<void(std::size_t, std::size_t, std::size_t)> pick =
        [&](std::size_t remaining, std::size_t maxSize, std::size_t maxIndex) {
          if (remaining == 0) {
            byCount[k].push_back(RootedTree::fromChildren(chosen));
            return;
          }
          for (std::size_t s = std::min(remaining, maxSize); s >= 1; --s) {
            const auto& pool = byCount[s];
            std::size_t top = s == maxSize ? maxIndex : pool.size() - 1;
            for (std::size_t i = 0; i <= top && i < pool.size(); ++i) {
              chosen.push_back(pool[i]);
              pick(remaining - s, s, i);
              chosen.pop_back();
            }
          }
        };
    pick(k - 1, k - 1, byCount[k - 1].size());
    std::sort(byCount[k].begin(), byCount[k].end());
  }
  return byCount[n];
}

RootedTree graft(const RootedTree& t1, const RootedTree& t2, std::size_t v) {
  const std::string& s = t2.str();
  std::size_t seen = 0, open = s.size();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '(' && seen++ == v) {
      open = i;
      break;
    }
  if (open == s.size())
    fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " of a tree with " +
                                          std::to_string(t2.vertexCount()) + " vertices");
  std::size_t depth = 0, close = open;
  for (std::size_t i = open; i < s.size(); ++i) {
    depth += s[i] == '(' ? 1 : 0;
    depth -= s[i] == ')' ? 1 : 0;
    if (depth == 0) {
      close = i;
      break;
    }
  }
  return RootedTree::parse(s.substr(0, close) + t1.str() + s.substr(close));
}

TreeSum TreeSum::single(const FieldSpec& f, const RootedTree& t) {
  TreeSum out(f);
  out.add(t, Scalar::one(f));
  return out;
}

Scalar TreeSum::coefficient(const RootedTree& t) const {
  auto it = terms_.find(t.str());
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void TreeSum::requireSameField(const FieldSpec& f) const {
  if (!(f == field_))
    fail(ErrorCode::FieldMismatch, "tree sums over " + field_.toString() + " and " +
                                       f.toString());
}

void TreeSum::add(const RootedTree& t, const Scalar& c) {
  requireSameField(c.field());
  if (c.isZero())
    return;
  auto [it, inserted] = terms_.try_emplace(t.str(), c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero())
      terms_.erase(it);
  }
}

TreeSum& TreeSum::operator+=(const TreeSum& o) {
  requireSameField(o.field_);
  for (const auto& [t, c] : o.terms_)
    add(RootedTree::parse(t), c);
  return *this;
}

TreeSum& TreeSum::operator-=(const TreeSum& o) {
  requireSameField(o.field_);
  for (const auto& [t, c] : o.terms_)
    add(RootedTree::parse(t), -c);
  return *this;
}

TreeSum& TreeSum::operator*=(const Scalar& s) {
  requireSameField(s.field());
  if (s.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_)
    c *= s;
  return *this;
}

bool operator==(const TreeSum& a, const TreeSum& b) {
  return a.field_ == b.field_ && a.terms_ == b.terms_;
}

TreeSum treeProduct(const TreeSum& s, const TreeSum& t) {
  if (!(s.field() == t.field()))
    fail(ErrorCode::FieldMismatch, "tree sums over " + s.field().toString() + " and " +
                                       t.field().toString());
  TreeSum out(s.field());
  for (const auto& [x, cx] : s.terms()) {
    RootedTree t1 = RootedTree::parse(x);
    for (const auto& [y, cy] : t.terms()) {
      RootedTree t2 = RootedTree::parse(y);
      Scalar c = cx * cy;
      for (std::size_t v = 0; v < t2.vertexCount(); ++v)
        out.add(graft(t1, t2, v), c);
    }
  }
  return out;
}

namespace {

const std::vector<std::pair<std::string, std::string>>& namedTrees() {
  static const std::vector<std::pair<std::string, std::string>> names = {
      {"v", "()"},         {"e", "(())"},       {"a", "(()())"},     {"b", "((()))"},
      {"c", "(()()())"},   {"d", "((()()))"},   {"f", "(()(()))"},   {"g", "(((())))"},
  };
  return names;
}

} // namespace

std::vector<RootedTree> truncationBasis(std::size_t maxVertices) {
  std::vector<RootedTree> basis;
  if (maxVertices == 5) {
    for (const auto& [name, text] : namedTrees())
      basis.push_back(RootedTree::parse(text));
    return basis;
  }
  for (std::size_t n = 1; n < maxVertices; ++n)
    for (auto& t : enumerateTrees(n, maxVertices))
      basis.push_back(std::move(t));
  return basis;
}

Algebra truncatedFreeAlgebra(std::size_t maxVertices, const FieldSpec& field,
                             std::size_t budget) {
  if (maxVertices < 2)
    fail(ErrorCode::Parse, "truncation needs maxVertices >= 2");
  if (maxVertices - 1 > budget)
    fail(ErrorCode::BudgetExceeded, "truncation limited to trees with at most " +
                                        std::to_string(budget) + " vertices");
  std::vector<RootedTree> basis = truncationBasis(maxVertices);
  std::map<std::string, std::size_t, ShortlexLess> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index.emplace(basis[i].str(), i);
    names.push_back(maxVertices == 5 ? namedTrees()[i].first : basis[i].str());
  }

  Algebra::Table table;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis[i].vertexCount() + basis[j].vertexCount() >= maxVertices)
        continue;
      TreeSum prod = treeProduct(TreeSum::single(field, basis[i]), TreeSum::single(field, basis[j]));
      Vector v(field, basis.size());
      for (const auto& [t, c] : prod.terms())
        v[index.at(t)] += c;
      table.emplace(std::pair{i, j}, std::move(v));
    }
  return Algebra("trees<" + std::to_string(maxVertices), field, std::move(names), table);
}

} // namespace prelie
