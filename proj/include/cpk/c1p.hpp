#ifndef CPK_C1P_HPP
#define CPK_C1P_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpk/error.hpp"

namespace cpk {

/**
 * PQ-tree over the leaves 0..n-1 (Booth & Lueker).
 *
 * The tree represents the set of its frontiers: P-node children may be
 * permuted freely, Q-node children may only be reversed. `reduce(S)`
 * restricts that set to the frontiers in which S is consecutive, using the
 * template set P1-P6 / Q1-Q3 applied bottom-up over the pertinent subtree.
 *
 * Nodes live in an arena; every successful reduction compacts it. Reduction
 * works on a scratch copy, so a failed reduction leaves the tree unchanged.
 * This makes each reduction O(tree size) rather than Booth-Lueker's
 * amortized O(|S|), which is irrelevant at the sizes used here.
 */
class PQTree {
 public:
  enum class Kind : std::uint8_t { leaf, p, q };

  struct Node {
    Kind kind = Kind::leaf;
    int leaf = -1;
    std::vector<int> children;
  };

  /// The universal tree: every permutation of 0..leaves-1 is a frontier.
  explicit PQTree(int leaves) : leaves_(leaves) {
    if (leaves < 1) throw invalid_input("PQTree: need at least one leaf");
    for (int i = 0; i < leaves; ++i) nodes_.push_back(Node{Kind::leaf, i, {}});
    if (leaves == 1) {
      root_ = 0;
      return;
    }
    Node p{Kind::p, -1, {}};
    p.children.resize(static_cast<std::size_t>(leaves));
    std::iota(p.children.begin(), p.children.end(), 0);
    nodes_.push_back(std::move(p));
    root_ = leaves;
  }

  int leaf_count() const noexcept { return leaves_; }
  int root() const noexcept { return root_; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }

  /// Left-to-right leaf order.
  std::vector<int> frontier() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(leaves_));
    collect(root_, out);
    return out;
  }

  /**
   * Restricts the tree to frontiers in which `s` is consecutive. Returns
   * false (tree untouched) when no frontier qualifies.
   */
  bool reduce(std::span<const int> s) {
    if (s.empty()) throw invalid_input("PQTree::reduce: empty set");
    std::vector<bool> in_s(static_cast<std::size_t>(leaves_), false);
    int size = 0;
    for (int x : s) {
      if (x < 0 || x >= leaves_) throw invalid_input("PQTree::reduce: unknown leaf " + std::to_string(x));
      if (!in_s[static_cast<std::size_t>(x)]) ++size;
      in_s[static_cast<std::size_t>(x)] = true;
    }
    if (size <= 1 || size == leaves_) return true;

    Reduction r{*this, std::move(in_s), size};
    if (!r.run()) return false;
    nodes_ = std::move(r.nodes);
    root_ = r.root;
    normalize();
    return true;
  }

  /// Every frontier of the tree; exponential, meant for small test trees.
  std::vector<std::vector<int>> all_frontiers() const {
    auto out = frontiers_of(root_);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Structural invariants: each leaf once, P >= 2 children, Q >= 3 children.
  bool valid() const {
    std::vector<int> seen(static_cast<std::size_t>(leaves_), 0);
    bool ok = check(root_, seen);
    return ok && std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
  }

  /// Bracket notation, e.g. "P[0 Q[1 2 3] 4]".
  std::string to_string() const {
    std::string out;
    print(root_, out);
    return out;
  }

 private:
  enum class Label : std::uint8_t { empty, partial, full };

  struct Reduction {
    Reduction(const PQTree& t, std::vector<bool> in, int sz)
        : nodes(t.nodes_), root(t.root_), in_s(std::move(in)), target(sz) {}

    std::vector<Node> nodes;
    int root;
    std::vector<bool> in_s;
    int target;
    std::vector<int> pertinent;  // pertinent leaf count per node
    std::vector<int> leafs;      // leaf count per node

    Node& at(int id) { return nodes[static_cast<std::size_t>(id)]; }

    int make(Kind kind, std::vector<int> children) {
      nodes.push_back(Node{kind, -1, std::move(children)});
      return static_cast<int>(nodes.size()) - 1;
    }

    // Single node standing for a group of siblings: the node itself, or a new P-node.
    int group(std::vector<int> members) {
      if (members.size() == 1) return members.front();
      return make(Kind::p, std::move(members));
    }

    void count(int id) {
      Node& x = at(id);
      if (x.kind == Kind::leaf) {
        leafs[static_cast<std::size_t>(id)] = 1;
        pertinent[static_cast<std::size_t>(id)] = in_s[static_cast<std::size_t>(x.leaf)] ? 1 : 0;
        return;
      }
      int l = 0, p = 0;
      for (int c : x.children) {
        count(c);
        l += leafs[static_cast<std::size_t>(c)];
        p += pertinent[static_cast<std::size_t>(c)];
      }
      leafs[static_cast<std::size_t>(id)] = l;
      pertinent[static_cast<std::size_t>(id)] = p;
    }

    bool run() {
      pertinent.assign(nodes.size(), 0);
      leafs.assign(nodes.size(), 0);
      count(root);

      // Descend to the deepest node whose subtree holds all of S.
      std::vector<std::pair<int, std::size_t>> ancestors;  // (node, child slot)
      int cur = root;
      for (bool moved = true; moved;) {
        moved = false;
        const auto& ch = at(cur).children;
        for (std::size_t i = 0; i < ch.size(); ++i)
          if (pertinent[static_cast<std::size_t>(ch[i])] == target) {
            ancestors.emplace_back(cur, i);
            cur = ch[i];
            moved = true;
            break;
          }
      }

      auto result = process(cur, true);
      if (!result) return false;
      if (ancestors.empty())
        root = result->first;
      else
        at(ancestors.back().first).children[ancestors.back().second] = result->first;
      return true;
    }

    Label quick_label(int id) const {
      int p = pertinent[static_cast<std::size_t>(id)];
      if (p == 0) return Label::empty;
      if (p == leafs[static_cast<std::size_t>(id)]) return Label::full;
      return Label::partial;
    }

    // Reduces the subtree at `id`; returns the node now standing in its place and its label.
    std::optional<std::pair<int, Label>> process(int id, bool is_root) {
      Label own = quick_label(id);
      if (own != Label::partial) return std::pair{id, own};

      // Children first; partial children come back as Q-nodes ordered empty..full.
      std::vector<Label> labels;
      {
        auto children = at(id).children;
        for (auto& c : children) {
          auto sub = process(c, false);
          if (!sub) return std::nullopt;
          c = sub->first;
          labels.push_back(sub->second);
        }
        at(id).children = std::move(children);
      }
      if (at(id).kind == Kind::p) return is_root ? p_root(id, labels) : p_nonroot(id, labels);
      return is_root ? q_root(id, labels) : q_nonroot(id, labels);
    }

    struct Split {
      std::vector<int> empty, full, partial;
    };

    Split split(int id, const std::vector<Label>& labels) {
      Split s;
      const auto& ch = at(id).children;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        switch (labels[i]) {
          case Label::empty: s.empty.push_back(ch[i]); break;
          case Label::full: s.full.push_back(ch[i]); break;
          case Label::partial: s.partial.push_back(ch[i]); break;
        }
      }
      return s;
    }

    // P3, P5.
    std::optional<std::pair<int, Label>> p_nonroot(int id, const std::vector<Label>& labels) {
      Split s = split(id, labels);
      if (s.partial.empty()) {
        int q = make(Kind::q, {group(s.empty), group(s.full)});
        return std::pair{q, Label::partial};
      }
      if (s.partial.size() != 1) return std::nullopt;
      int y = s.partial.front();
      if (!s.full.empty()) {
        int f = group(s.full);
        at(y).children.push_back(f);
      }
      if (!s.empty.empty()) {
        int e = group(s.empty);
        auto& ch = at(y).children;
        ch.insert(ch.begin(), e);
      }
      return std::pair{y, Label::partial};
    }

    // P2, P4, P6.
    std::optional<std::pair<int, Label>> p_root(int id, const std::vector<Label>& labels) {
      Split s = split(id, labels);
      if (s.partial.empty()) {
        if (s.full.size() >= 2) {
          int f = make(Kind::p, s.full);
          s.empty.push_back(f);
          at(id).children = std::move(s.empty);
        }
        return std::pair{id, Label::partial};
      }
      int merged = -1;
      if (s.partial.size() == 1) {
        merged = s.partial.front();
        if (!s.full.empty()) {
          int f = group(s.full);
          at(merged).children.push_back(f);
        }
      } else if (s.partial.size() == 2) {
        int y1 = s.partial[0], y2 = s.partial[1];
        std::vector<int> seq = at(y1).children;
        if (!s.full.empty()) seq.push_back(group(s.full));
        const auto& tail = at(y2).children;
        seq.insert(seq.end(), tail.rbegin(), tail.rend());
        merged = make(Kind::q, std::move(seq));
      } else {
        return std::nullopt;
      }
      if (s.empty.empty()) return std::pair{merged, Label::partial};
      s.empty.push_back(merged);
      at(id).children = std::move(s.empty);
      return std::pair{id, Label::partial};
    }

    // Rewrites a Q-node's children, splicing partial children in place.
    void splice(int id, const std::vector<Label>& labels, const std::vector<bool>& reverse_partial) {
      std::vector<int> seq;
      const auto ch = at(id).children;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        if (labels[i] != Label::partial) {
          seq.push_back(ch[i]);
          continue;
        }
        const auto& sub = at(ch[i]).children;
        if (reverse_partial[i])
          seq.insert(seq.end(), sub.rbegin(), sub.rend());
        else
          seq.insert(seq.end(), sub.begin(), sub.end());
      }
      at(id).children = std::move(seq);
    }

    // Matches E* Pa? F* (left to right); fills which partial to reverse.
    static bool match_nonroot(const std::vector<Label>& l) {
      std::size_t i = 0;
      while (i < l.size() && l[i] == Label::empty) ++i;
      if (i < l.size() && l[i] == Label::partial) ++i;
      while (i < l.size() && l[i] == Label::full) ++i;
      return i == l.size();
    }

    // Q1 (handled by quick_label), Q2.
    std::optional<std::pair<int, Label>> q_nonroot(int id, std::vector<Label> labels) {
      if (!match_nonroot(labels)) {
        std::reverse(labels.begin(), labels.end());
        auto& ch = at(id).children;
        std::reverse(ch.begin(), ch.end());
        if (!match_nonroot(labels)) return std::nullopt;
      }
      splice(id, labels, std::vector<bool>(labels.size(), false));
      return std::pair{id, Label::partial};
    }

    // Q3: E* Pa? F* Pa? E*.
    std::optional<std::pair<int, Label>> q_root(int id, const std::vector<Label>& labels) {
      std::vector<bool> rev(labels.size(), false);
      std::size_t i = 0;
      const std::size_t n = labels.size();
      while (i < n && labels[i] == Label::empty) ++i;
      if (i < n && labels[i] == Label::partial) ++i;
      while (i < n && labels[i] == Label::full) ++i;
      if (i < n && labels[i] == Label::partial) rev[i++] = true;
      while (i < n && labels[i] == Label::empty) ++i;
      if (i != n) return std::nullopt;
      splice(id, labels, rev);
      return std::pair{id, Label::partial};
    }
  };

  void collect(int id, std::vector<int>& out) const {
    const Node& x = node(id);
    if (x.kind == Kind::leaf) {
      out.push_back(x.leaf);
      return;
    }
    for (int c : x.children) collect(c, out);
  }

  // Drops unreachable nodes, demotes two-child Q-nodes to P-nodes and
  // collapses single-child internal nodes.
  void normalize() {
    std::vector<Node> fresh;
    fresh.reserve(nodes_.size());
    root_ = rebuild(root_, fresh);
    nodes_ = std::move(fresh);
  }

  int rebuild(int id, std::vector<Node>& out) const {
    const Node& x = node(id);
    if (x.kind != Kind::leaf && x.children.size() == 1) return rebuild(x.children.front(), out);
    Node copy{x.kind, x.leaf, {}};
    for (int c : x.children) copy.children.push_back(rebuild(c, out));
    if (copy.kind == Kind::q && copy.children.size() == 2) copy.kind = Kind::p;
    out.push_back(std::move(copy));
    return static_cast<int>(out.size()) - 1;
  }

  std::vector<std::vector<int>> frontiers_of(int id) const {
    const Node& x = node(id);
    if (x.kind == Kind::leaf) return {{x.leaf}};
    std::vector<std::vector<std::vector<int>>> parts;
    for (int c : x.children) parts.push_back(frontiers_of(c));
    auto combine = [&](const std::vector<std::size_t>& order, std::vector<std::vector<int>>& out) {
      std::vector<std::vector<int>> acc{{}};
      for (std::size_t idx : order) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : acc)
          for (const auto& f : parts[idx]) {
            auto v = prefix;
            v.insert(v.end(), f.begin(), f.end());
            next.push_back(std::move(v));
          }
        acc = std::move(next);
      }
      out.insert(out.end(), acc.begin(), acc.end());
    };
    std::vector<std::size_t> order(parts.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<int>> out;
    if (x.kind == Kind::p) {
      do combine(order, out);
      while (std::next_permutation(order.begin(), order.end()));
    } else {
      combine(order, out);
      std::reverse(order.begin(), order.end());
      combine(order, out);
    }
    return out;
  }

  bool check(int id, std::vector<int>& seen) const {
    const Node& x = node(id);
    switch (x.kind) {
      case Kind::leaf:
        if (x.leaf < 0 || x.leaf >= leaves_ || !x.children.empty()) return false;
        ++seen[static_cast<std::size_t>(x.leaf)];
        return true;
      case Kind::p:
        if (x.children.size() < 2) return false;
        break;
      case Kind::q:
        if (x.children.size() < 3) return false;
        break;
    }
    return std::all_of(x.children.begin(), x.children.end(), [&](int c) { return check(c, seen); });
  }

  void print(int id, std::string& out) const {
    const Node& x = node(id);
    if (x.kind == Kind::leaf) {
      out += std::to_string(x.leaf);
      return;
    }
    out += x.kind == Kind::p ? "P[" : "Q[";
    for (std::size_t i = 0; i < x.children.size(); ++i) {
      if (i) out += ' ';
      print(x.children[i], out);
    }
    out += ']';
  }

  int leaves_ = 0;
  int root_ = 0;
  std::vector<Node> nodes_;
};

/// Value-returning reduction: the restricted tree, or nullopt if `s` cannot be made consecutive.
inline std::optional<PQTree> pq_reduce(PQTree t, std::span<const int> s) {
  if (!t.reduce(s)) return std::nullopt;
  return t;
}

inline std::vector<int> frontier(const PQTree& t) { return t.frontier(); }

/// Dense row-major 0/1 matrix.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols) : BinaryMatrix(rows, cols, std::vector<std::uint8_t>(cells(rows, cols), 0)) {}

  BinaryMatrix(int rows, int cols, std::vector<std::uint8_t> bits) : rows_(rows), cols_(cols), bits_(std::move(bits)) {
    if (rows < 1 || cols < 1) throw invalid_input("BinaryMatrix: rows and cols must be positive");
    if (bits_.size() != cells(rows, cols)) throw invalid_input("BinaryMatrix: bit count mismatch");
    for (auto b : bits_)
      if (b > 1) throw invalid_input("BinaryMatrix: entries must be 0 or 1");
  }

  /// One string of '0'/'1' per row.
  static BinaryMatrix from_rows(std::span<const std::string> rows) {
    if (rows.empty()) throw invalid_input("BinaryMatrix: no rows");
    const int cols = static_cast<int>(rows.front().size());
    std::vector<std::uint8_t> bits;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols) throw invalid_input("BinaryMatrix: ragged rows");
      for (char ch : r) {
        if (ch != '0' && ch != '1') throw invalid_input("BinaryMatrix: entries must be 0 or 1");
        bits.push_back(ch == '1');
      }
    }
    return BinaryMatrix(static_cast<int>(rows.size()), cols, std::move(bits));
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  bool at(int r, int c) const {
    return bits_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)] != 0;
  }

  std::vector<int> column_ones(int c) const {
    std::vector<int> out;
    for (int r = 0; r < rows_; ++r)
      if (at(r, c)) out.push_back(r);
    return out;
  }

  /// Same rows, columns taken in the given order.
  BinaryMatrix with_columns(std::span<const int> order) const {
    std::vector<std::uint8_t> bits;
    bits.reserve(bits_.size());
    for (int r = 0; r < rows_; ++r)
      for (int c : order) bits.push_back(at(r, c));
    return BinaryMatrix(rows_, static_cast<int>(order.size()), std::move(bits));
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  static std::size_t cells(int rows, int cols) {
    return rows > 0 && cols > 0 ? static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) : 0;
  }

  int rows_;
  int cols_;
  std::vector<std::uint8_t> bits_;
};

/// `order` lists row indices top to bottom; true iff every column's ones are contiguous.
inline bool rows_consecutive(const BinaryMatrix& m, std::span<const int> order) {
  if (static_cast<int>(order.size()) != m.rows()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(m.rows()), false);
  for (int r : order) {
    if (r < 0 || r >= m.rows() || seen[static_cast<std::size_t>(r)]) return false;
    seen[static_cast<std::size_t>(r)] = true;
  }
  for (int c = 0; c < m.cols(); ++c) {
    int state = 0;  // 0 before the block, 1 inside, 2 after
    for (int r : order) {
      bool one = m.at(r, c);
      if (one && state == 2) return false;
      if (one) state = 1;
      else if (state == 1) state = 2;
    }
  }
  return true;
}

/**
 * Row order placing every column's ones consecutively, or nullopt.
 * Columns are reduced in decreasing popcount order; empty and full columns
 * are vacuous and skipped.
 */
inline std::optional<std::vector<int>> has_c1p(const BinaryMatrix& m) {
  std::vector<std::vector<int>> sets;
  for (int c = 0; c < m.cols(); ++c) {
    auto ones = m.column_ones(c);
    if (ones.size() >= 2 && static_cast<int>(ones.size()) < m.rows()) sets.push_back(std::move(ones));
  }
  std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  PQTree tree(m.rows());
  for (const auto& s : sets)
    if (!tree.reduce(s)) return std::nullopt;
  auto order = tree.frontier();
  if (!rows_consecutive(m, order)) throw std::logic_error("has_c1p: PQ-tree frontier violates a column");
  return order;
}

// ---------------------------------------------------------------------------
// Matrix text format: "rows cols" then `rows` lines of 0/1 characters.

inline BinaryMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first != std::string::npos && line[first] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw parse_error("matrix: missing header", line_no);
  long long rows = 0, cols = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> rows >> cols) || (hs >> extra)) throw parse_error("matrix: expected \"rows cols\"", line_no);
  }
  if (rows < 1 || cols < 1) throw parse_error("matrix: rows and cols must be positive", line_no);
  std::vector<std::string> body;
  for (long long r = 0; r < rows; ++r) {
    if (!next_line()) throw parse_error("matrix: fewer rows than declared", line_no);
    std::string row;
    for (char ch : line)
      if (ch != ' ' && ch != '\t') row.push_back(ch);
    if (static_cast<long long>(row.size()) != cols) throw parse_error("matrix: row has wrong width", line_no);
    if (row.find_first_not_of("01") != std::string::npos) throw parse_error("matrix: entries must be 0 or 1", line_no);
    body.push_back(std::move(row));
  }
  if (next_line()) throw parse_error("matrix: more rows than declared", line_no);
  return BinaryMatrix::from_rows(body);
}

inline std::string to_text(const BinaryMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out += m.at(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace cpk

#endif  // CPK_C1P_HPP
