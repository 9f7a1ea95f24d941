#include "ordnet/pqtree.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>

namespace ordnet {

std::string_view template_name(Template t) {
  switch (t) {
    case Template::P0: return "P0";
    case Template::P1: return "P1";
    case Template::P2: return "P2";
    case Template::P3: return "P3";
    case Template::P4_1: return "P4(1)";
    case Template::P4_2: return "P4(2)";
    case Template::P5: return "P5";
    case Template::P6_1: return "P6(1)";
    case Template::P6_2: return "P6(2)";
    case Template::Q0: return "Q0";
    case Template::Q1: return "Q1";
    case Template::Q2: return "Q2";
    case Template::Q3: return "Q3";
  }
  return "?";
}

TreeStats ReductionTrace::total_delta() const {
  TreeStats sum;
  for (const auto& s : steps) sum += s.delta;
  return sum;
}

PQTree PQTree::universal(std::int32_t n, bool with_dummy) {
  if (n < 2) throw ValidationError("pq-tree needs at least 2 vertices");
  PQTree t;
  t.n_ = n;
  t.with_dummy_ = with_dummy;
  t.root_ = t.new_node(Kind::P);
  t.leaf_node_.assign(static_cast<std::size_t>(t.leaf_count()), -1);
  for (VertexId v = 0; v < t.leaf_count(); ++v) {
    std::int32_t id = t.new_node(Kind::Leaf, v);
    t.nodes_[id].parent = t.root_;
    t.nodes_[t.root_].children.push_back(id);
    t.leaf_node_[v] = id;
  }
  return t;
}

std::int32_t PQTree::new_node(Kind kind, VertexId leaf) {
  Node node;
  node.kind = kind;
  node.leaf = leaf;
  nodes_.push_back(std::move(node));
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

// Rebuilds the arena with only live nodes, in DFS order.
void PQTree::compact() {
  std::vector<Node> fresh;
  fresh.reserve(nodes_.size());
  std::vector<std::int32_t> remap(nodes_.size(), -1);
  std::vector<std::int32_t> stack{root_};
  while (!stack.empty()) {
    std::int32_t id = stack.back();
    stack.pop_back();
    remap[id] = static_cast<std::int32_t>(fresh.size());
    fresh.push_back(nodes_[id]);
    const auto& ch = nodes_[id].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  for (auto& node : fresh) {
    if (node.parent >= 0) node.parent = remap[node.parent];
    for (auto& c : node.children) c = remap[c];
    node.alive = true;
  }
  root_ = remap[root_];
  for (auto& id : leaf_node_) id = remap[id];
  nodes_ = std::move(fresh);
}

// ---------------------------------------------------------------------------
// Reduction

struct PQTree::Reducer {
  PQTree& t;
  std::vector<Label> label;
  std::vector<std::int32_t> count;
  ReductionTrace trace;
  std::set<Edge> forced;

  explicit Reducer(PQTree& tree) : t(tree) {}

  Label& lab(std::int32_t id) {
    if (static_cast<std::size_t>(id) >= label.size()) {
      label.resize(static_cast<std::size_t>(id) + 1, Label::Empty);
    }
    return label[id];
  }

  bool pertinent(std::int32_t id) const {
    return static_cast<std::size_t>(id) < count.size() && count[id] > 0;
  }

  void adopt(std::int32_t parent, const std::vector<std::int32_t>& kids) {
    t.nodes_[parent].children = kids;
    for (auto k : kids) t.nodes_[k].parent = parent;
  }

  // One child stays as is; two or more get a new p-node.
  std::int32_t group(const std::vector<std::int32_t>& kids, Label l,
                     TreeStats& d) {
    if (kids.size() == 1) return kids.front();
    std::int32_t g = t.new_node(Kind::P);
    adopt(g, kids);
    d.sum_cp += static_cast<std::int64_t>(kids.size());
    d.num_p += 1;
    lab(g) = l;
    return g;
  }

  // y takes x's place under x's parent.
  void replace(std::int32_t x, std::int32_t y) {
    std::int32_t p = t.nodes_[x].parent;
    t.nodes_[y].parent = p;
    if (p < 0) {
      t.root_ = y;
    } else {
      auto& ch = t.nodes_[p].children;
      *std::find(ch.begin(), ch.end(), x) = y;
    }
  }

  void kill(std::int32_t x) {
    t.nodes_[x].alive = false;
    t.nodes_[x].children.clear();
    t.nodes_[x].parent = -1;
  }

  void record(Template id, TreeStats d, bool structural) {
    std::set<Edge> now = t.forced_set();
    TraceStep step;
    step.id = id;
    step.delta = d;
    step.structural = structural;
    std::set_difference(now.begin(), now.end(), forced.begin(), forced.end(),
                        std::back_inserter(step.new_forced));
    forced = std::move(now);
    trace.steps.push_back(std::move(step));
  }

  bool process(std::int32_t x, bool is_root) {
    if (t.nodes_[x].kind == Kind::Leaf) {
      lab(x) = Label::Full;
      return true;
    }
    for (std::size_t i = 0; i < t.nodes_[x].children.size(); ++i) {
      std::int32_t c = t.nodes_[x].children[i];
      if (pertinent(c) && !process(c, false)) return false;
    }
    return t.nodes_[x].kind == Kind::P ? p_template(x, is_root)
                                       : q_template(x, is_root);
  }

  bool p_template(std::int32_t x, bool is_root) {
    const std::vector<std::int32_t> kids = t.nodes_[x].children;
    std::vector<std::int32_t> empty, full, partial;
    for (auto c : kids) {
      switch (lab(c)) {
        case Label::Empty: empty.push_back(c); break;
        case Label::Full: full.push_back(c); break;
        case Label::Partial: partial.push_back(c); break;
      }
    }
    const auto nfull = static_cast<std::int64_t>(full.size());

    if (partial.empty() && empty.empty()) {
      lab(x) = Label::Full;
      record(Template::P1, {}, false);
      return true;
    }

    if (partial.empty()) {
      TreeStats d;
      if (is_root) {
        if (full.size() < 2) throw std::logic_error("P2 with one full child");
        std::int32_t g = group(full, Label::Full, d);
        std::vector<std::int32_t> next = empty;
        next.push_back(g);
        adopt(x, next);
        d.sum_cp += 1 - nfull;
        lab(x) = Label::Partial;
        record(Template::P2, d, true);
      } else {
        d.sum_cp -= static_cast<std::int64_t>(kids.size());
        d.num_p -= 1;
        d.num_q += 1;
        std::int32_t eg = group(empty, Label::Empty, d);
        std::int32_t fg = group(full, Label::Full, d);
        t.nodes_[x].kind = Kind::Q;
        adopt(x, {eg, fg});
        lab(x) = Label::Partial;
        record(Template::P3, d, true);
      }
      return true;
    }

    if (partial.size() == 1) {
      const std::int32_t y = partial.front();
      TreeStats d;
      if (is_root) {
        if (full.empty()) throw std::logic_error("P4 without full children");
        std::int32_t fg = group(full, Label::Full, d);
        t.nodes_[y].children.push_back(fg);
        t.nodes_[fg].parent = y;
        d.sum_cp -= nfull;
        std::vector<std::int32_t> rest;
        for (auto c : kids) {
          if (lab(c) != Label::Full) rest.push_back(c);
        }
        t.nodes_[x].children = rest;
        if (empty.empty()) {
          d.sum_cp -= 1;
          d.num_p -= 1;
          replace(x, y);
          kill(x);
          record(Template::P4_2, d, true);
        } else {
          record(Template::P4_1, d, true);
        }
      } else {
        d.sum_cp -= static_cast<std::int64_t>(kids.size());
        d.num_p -= 1;
        std::vector<std::int32_t> next;
        if (!empty.empty()) next.push_back(group(empty, Label::Empty, d));
        const auto inner = t.nodes_[y].children;
        next.insert(next.end(), inner.begin(), inner.end());
        if (!full.empty()) next.push_back(group(full, Label::Full, d));
        adopt(y, next);
        replace(x, y);
        kill(x);
        lab(y) = Label::Partial;
        record(Template::P5, d, true);
      }
      return true;
    }

    if (partial.size() == 2 && is_root) {
      const std::int32_t y1 = partial[0];
      const std::int32_t y2 = partial[1];
      TreeStats d;
      std::vector<std::int32_t> merged = t.nodes_[y1].children;
      if (!full.empty()) merged.push_back(group(full, Label::Full, d));
      const auto tail = t.nodes_[y2].children;
      merged.insert(merged.end(), tail.rbegin(), tail.rend());
      adopt(y1, merged);
      kill(y2);
      d.num_q -= 1;
      std::vector<std::int32_t> rest;
      for (auto c : kids) {
        if (c != y2 && lab(c) != Label::Full) rest.push_back(c);
      }
      t.nodes_[x].children = rest;
      d.sum_cp -= nfull + 1;
      if (empty.empty()) {
        d.sum_cp -= 1;
        d.num_p -= 1;
        replace(x, y1);
        kill(x);
        record(Template::P6_2, d, true);
      } else {
        record(Template::P6_1, d, true);
      }
      return true;
    }
    return false;
  }

  bool q_template(std::int32_t x, bool is_root) {
    std::vector<std::int32_t> kids = t.nodes_[x].children;
    const std::size_t size = kids.size();
    std::size_t first = size;
    std::size_t last = 0;
    for (std::size_t i = 0; i < size; ++i) {
      if (lab(kids[i]) != Label::Empty) {
        first = std::min(first, i);
        last = i;
      }
    }
    std::size_t partials = 0;
    for (std::size_t i = first; i <= last; ++i) {
      const Label l = lab(kids[i]);
      if (l == Label::Empty) return false;  // pertinent run not consecutive
      if (l == Label::Partial) {
        if (i != first && i != last) return false;
        ++partials;
      }
    }
    if (partials == 0 && first == 0 && last == size - 1) {
      lab(x) = Label::Full;
      record(Template::Q1, {}, false);
      return true;
    }
    auto is_partial = [&](std::size_t i) {
      return lab(kids[i]) == Label::Partial;
    };

    TreeStats d;
    if (!is_root) {
      // Orient so the pertinent run ends at the right boundary with any
      // partial child at the run's left end.
      const bool right_ok =
          last == size - 1 && (partials == 0 || (partials == 1 && is_partial(first)));
      const bool left_ok =
          first == 0 && (partials == 0 || (partials == 1 && is_partial(last)));
      if (!right_ok && !left_ok) return false;
      if (!right_ok) {
        std::reverse(kids.begin(), kids.end());
        const std::size_t f = size - 1 - last;
        last = size - 1 - first;
        first = f;
      }
      std::vector<std::int32_t> next(kids.begin(), kids.begin() + first);
      std::size_t rest = first;
      if (partials == 1) {
        const auto inner = t.nodes_[kids[first]].children;
        next.insert(next.end(), inner.begin(), inner.end());
        kill(kids[first]);
        d.num_q -= 1;
        rest = first + 1;
      }
      next.insert(next.end(), kids.begin() + rest, kids.end());
      adopt(x, next);
      lab(x) = Label::Partial;
      record(Template::Q2, d, partials == 1);
      return true;
    }

    if (first == last) throw std::logic_error("pertinent root with one child");
    std::vector<std::int32_t> next(kids.begin(), kids.begin() + first);
    for (std::size_t i = first; i <= last; ++i) {
      if (!is_partial(i)) {
        next.push_back(kids[i]);
        continue;
      }
      auto inner = t.nodes_[kids[i]].children;  // stored empty .. full
      if (i == last) std::reverse(inner.begin(), inner.end());
      next.insert(next.end(), inner.begin(), inner.end());
      kill(kids[i]);
      d.num_q -= 1;
    }
    next.insert(next.end(), kids.begin() + last + 1, kids.end());
    adopt(x, next);
    // Named by how many partial children get merged: one is Q2, two is Q3.
    record(partials == 2 ? Template::Q3 : Template::Q2, d, partials > 0);
    return true;
  }
};

std::optional<ReductionTrace> PQTree::reduce(const ConnectivityConstraint& s) {
  for (VertexId v : s.members()) {
    if (v >= n_) {
      throw ValidationError("reduction set names vertex " + std::to_string(v) +
                            " outside the tree");
    }
  }
  PQTree work = *this;
  Reducer r(work);
  r.count.assign(work.nodes_.size(), 0);
  const auto members = s.members();
  const auto total = static_cast<std::int32_t>(members.size());
  for (VertexId v : members) {
    for (std::int32_t id = work.leaf_node_[v]; id >= 0;
         id = work.nodes_[id].parent) {
      ++r.count[id];
    }
  }
  std::int32_t pertinent_root = work.leaf_node_[members.front()];
  while (r.count[pertinent_root] < total) {
    pertinent_root = work.nodes_[pertinent_root].parent;
  }
  r.forced = work.forced_set();
  if (!r.process(pertinent_root, true)) return std::nullopt;
  work.compact();
  *this = std::move(work);
  return std::move(r.trace);
}

std::optional<std::pair<PQTree, ReductionTrace>> reduce(
    const PQTree& t, const ConnectivityConstraint& s) {
  PQTree copy = t;
  auto trace = copy.reduce(s);
  if (!trace) return std::nullopt;
  return std::make_pair(std::move(copy), std::move(*trace));
}

// ---------------------------------------------------------------------------
// Queries

TreeStats PQTree::stats() const {
  TreeStats s;
  std::vector<std::int32_t> stack{root_};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (node.kind == Kind::P) {
      ++s.num_p;
      s.sum_cp += static_cast<std::int64_t>(node.children.size());
    } else if (node.kind == Kind::Q) {
      ++s.num_q;
    }
    stack.insert(stack.end(), node.children.begin(), node.children.end());
  }
  return s;
}

std::vector<VertexId> PQTree::linearize() const {
  std::vector<VertexId> out;
  std::vector<std::int32_t> stack{root_};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (node.kind == Kind::Leaf) {
      out.push_back(node.leaf);
      continue;
    }
    stack.insert(stack.end(), node.children.rbegin(), node.children.rend());
  }
  return out;
}

std::size_t PQTree::enumerate_frontier(
    const std::function<bool(const std::vector<VertexId>&)>& visit,
    std::size_t limit) const {
  // Odometer over per-node choices: a child permutation for each p-node and
  // an orientation for each q-node.
  struct Choice {
    std::int32_t node;
    std::vector<std::int32_t> order;  // indices into children
    bool reversed = false;
  };
  std::vector<Choice> choices;
  std::vector<std::int32_t> index_of(nodes_.size(), -1);
  {
    std::vector<std::int32_t> stack{root_};
    while (!stack.empty()) {
      std::int32_t id = stack.back();
      stack.pop_back();
      const Node& node = nodes_[id];
      if (node.kind == Kind::Leaf) continue;
      Choice c;
      c.node = id;
      c.order.resize(node.children.size());
      for (std::size_t i = 0; i < c.order.size(); ++i) {
        c.order[i] = static_cast<std::int32_t>(i);
      }
      index_of[id] = static_cast<std::int32_t>(choices.size());
      choices.push_back(std::move(c));
      stack.insert(stack.end(), node.children.begin(), node.children.end());
    }
  }

  std::vector<VertexId> perm;
  perm.reserve(static_cast<std::size_t>(leaf_count()));
  std::function<void(std::int32_t)> emit = [&](std::int32_t id) {
    const Node& node = nodes_[id];
    if (node.kind == Kind::Leaf) {
      perm.push_back(node.leaf);
      return;
    }
    const Choice& c = choices[index_of[id]];
    if (node.kind == Kind::P) {
      for (auto i : c.order) emit(node.children[i]);
    } else if (c.reversed) {
      for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
        emit(*it);
      }
    } else {
      for (auto child : node.children) emit(child);
    }
  };

  std::size_t produced = 0;
  while (produced < limit) {
    perm.clear();
    emit(root_);
    ++produced;
    if (!visit(perm)) break;
    std::size_t k = 0;
    for (; k < choices.size(); ++k) {
      Choice& c = choices[k];
      bool advanced;
      if (nodes_[c.node].kind == Kind::P) {
        advanced = std::next_permutation(c.order.begin(), c.order.end());
      } else {
        c.reversed = !c.reversed;
        advanced = c.reversed;
      }
      if (advanced) break;
    }
    if (k == choices.size()) break;
  }
  return produced;
}

std::set<std::vector<VertexId>> PQTree::frontier() const {
  if (leaf_count() > kMaxFrontierLeaves) {
    throw ValidationError("frontier enumeration limited to " +
                          std::to_string(kMaxFrontierLeaves) + " leaves");
  }
  std::set<std::vector<VertexId>> out;
  enumerate_frontier(
      [&](const std::vector<VertexId>& p) {
        out.insert(p);
        return true;
      },
      static_cast<std::size_t>(-1));
  return out;
}

std::set<Edge> PQTree::forced_set() const {
  // Two leaves are adjacent in every arrangement exactly when they are
  // consecutive leaf children of a q-node, or the only two children of a
  // p-node: any internal node can be flipped, which moves its boundary leaf.
  std::set<Edge> out;
  std::vector<std::int32_t> stack{root_};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (node.kind == Kind::Leaf) continue;
    const auto& ch = node.children;
    const bool pairs =
        node.kind == Kind::Q || (node.kind == Kind::P && ch.size() == 2);
    if (pairs) {
      for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
        const Node& a = nodes_[ch[i]];
        const Node& b = nodes_[ch[i + 1]];
        if (a.kind == Kind::Leaf && b.kind == Kind::Leaf) {
          out.insert(Edge(a.leaf, b.leaf));
        }
      }
    }
    stack.insert(stack.end(), ch.begin(), ch.end());
  }
  return out;
}

std::vector<Edge> PQTree::forced_adjacencies() const {
  auto s = forced_set();
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// Text form

std::string PQTree::subtree_string(std::int32_t id) const {
  const Node& node = nodes_[id];
  if (node.kind == Kind::Leaf) {
    return (with_dummy_ && node.leaf == n_) ? "D" : std::to_string(node.leaf);
  }
  std::string out = node.kind == Kind::P ? "P(" : "Q(";
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += ", ";
    out += subtree_string(node.children[i]);
  }
  return out + ")";
}

std::string PQTree::to_string() const { return subtree_string(root_); }

PQTree PQTree::parse(std::string_view text) {
  PQTree t;
  std::size_t pos = 0;
  std::vector<VertexId> leaves;
  bool dummy_seen = false;
  std::vector<std::int32_t> dummy_nodes;

  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ValidationError {
    return ValidationError("pq-tree parse error at " + std::to_string(pos) +
                           ": " + why);
  };

  std::function<std::int32_t()> node = [&]() -> std::int32_t {
    skip();
    if (pos >= text.size()) throw fail("unexpected end");
    const char c = text[pos];
    if (c == 'P' || c == 'Q') {
      ++pos;
      skip();
      if (pos >= text.size() || text[pos] != '(') throw fail("expected '('");
      ++pos;
      std::int32_t id = t.new_node(c == 'P' ? Kind::P : Kind::Q);
      while (true) {
        std::int32_t child = node();
        t.nodes_[child].parent = id;
        t.nodes_[id].children.push_back(child);
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw fail("expected ',' or ')'");
      }
      return id;
    }
    if (c == 'D') {
      ++pos;
      if (dummy_seen) throw fail("dummy leaf repeated");
      dummy_seen = true;
      std::int32_t id = t.new_node(Kind::Leaf, -1);
      dummy_nodes.push_back(id);
      return id;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      VertexId v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      leaves.push_back(v);
      return t.new_node(Kind::Leaf, v);
    }
    throw fail(std::string("unexpected '") + c + "'");
  };

  t.root_ = node();
  skip();
  if (pos != text.size()) throw fail("trailing characters");

  t.n_ = static_cast<std::int32_t>(leaves.size());
  t.with_dummy_ = dummy_seen;
  for (auto id : dummy_nodes) t.nodes_[id].leaf = t.n_;
  t.leaf_node_.assign(static_cast<std::size_t>(t.leaf_count()), -1);
  for (std::size_t id = 0; id < t.nodes_.size(); ++id) {
    const Node& nd = t.nodes_[id];
    if (nd.kind != Kind::Leaf) continue;
    if (nd.leaf < 0 || nd.leaf >= t.leaf_count() || t.leaf_node_[nd.leaf] >= 0) {
      throw ValidationError("pq-tree leaves must be 0..n-1 each exactly once");
    }
    t.leaf_node_[nd.leaf] = static_cast<std::int32_t>(id);
  }
  if (t.n_ < 2) throw ValidationError("pq-tree needs at least 2 vertices");
  if (auto v = t.structure_violations(); !v.empty()) {
    throw ValidationError("invalid pq-tree: " + v.front());
  }
  return t;
}

// ---------------------------------------------------------------------------
// Invariant checks

std::vector<std::string> PQTree::structure_violations() const {
  std::vector<std::string> out;
  std::vector<int> seen(static_cast<std::size_t>(leaf_count()), 0);
  std::vector<std::int32_t> stack{root_};
  if (nodes_[root_].parent != -1) out.push_back("root has a parent");
  while (!stack.empty()) {
    std::int32_t id = stack.back();
    stack.pop_back();
    const Node& node = nodes_[id];
    if (!node.alive) out.push_back("dead node reachable");
    if (node.kind == Kind::Leaf) {
      if (node.leaf < 0 || node.leaf >= leaf_count()) {
        out.push_back("leaf label out of range");
      } else {
        ++seen[node.leaf];
      }
      continue;
    }
    if (node.kind == Kind::P && node.children.size() < 2) {
      out.push_back("p-node with fewer than 2 children");
    }
    if (node.kind == Kind::Q && node.children.size() < 3) {
      out.push_back("q-node with fewer than 3 children: " + subtree_string(id));
    }
    for (auto c : node.children) {
      if (nodes_[c].parent != id) out.push_back("broken parent link");
      stack.push_back(c);
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v] != 1) out.push_back("leaf " + std::to_string(v) + " not unique");
  }
  return out;
}

std::vector<std::string> PQTree::prefix_shape_violations() const {
  std::vector<std::string> out;
  std::vector<std::int32_t> stack{root_};
  while (!stack.empty()) {
    std::int32_t id = stack.back();
    stack.pop_back();
    const Node& node = nodes_[id];
    if (node.kind == Kind::Leaf) continue;
    const auto& ch = node.children;
    auto is_leaf = [&](std::int32_t c) { return nodes_[c].kind == Kind::Leaf; };
    if (node.kind == Kind::P && id != root_) {
      if (ch.size() > 2) {
        out.push_back("non-root p-node with " + std::to_string(ch.size()) +
                      " children: " + subtree_string(id));
      }
      if (std::none_of(ch.begin(), ch.end(), is_leaf)) {
        out.push_back("non-root p-node without a leaf child: " +
                      subtree_string(id));
      }
    }
    if (node.kind == Kind::Q) {
      for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
        if (!is_leaf(ch[i]) && !is_leaf(ch[i + 1])) {
          out.push_back("q-node with adjacent internal children: " +
                        subtree_string(id));
          break;
        }
      }
    }
    stack.insert(stack.end(), ch.begin(), ch.end());
  }
  return out;
}

}  // namespace ordnet
