#include "bqo/trees.hpp"

#include <algorithm>
#include <functional>

namespace bqo::trees {

QTree QTree::node(qo::Elem label, std::vector<QTree> children) {
  QTree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

int QTree::node_count() const {
  int total = 1;
  for (const auto& c : children) total += c.node_count();
  return total;
}

int QTree::cmp(const QTree& o) const {
  if (int c = label.cmp(o.label); c != 0) return c;
  const std::size_t n = std::min(children.size(), o.children.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = children[i].cmp(o.children[i]); c != 0) return c;
  if (children.size() != o.children.size())
    return children.size() < o.children.size() ? -1 : 1;
  return 0;
}

bool leq_strong(const qo::OrderSpec& q, const QTree& a, const QTree& b) {
  if (qo::leq(q, a.label, b.label)) {
    bool all = true;
    for (const auto& ai : a.children) {
      bool found = false;
      for (const auto& bj : b.children)
        if (leq_strong(q, ai, bj)) {
          found = true;
          break;
        }
      if (!found) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  for (const auto& bj : b.children)
    if (leq_strong(q, a, bj)) return true;
  return false;
}

bool leq_weak(const qo::OrderSpec& q, const QTree& a, const QTree& b) {
  if (qo::leq(q, a.label, b.label)) {
    bool all = true;
    for (const auto& ai : a.children)
      if (!leq_weak(q, ai, b)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  for (const auto& bj : b.children)
    if (leq_weak(q, a, bj)) return true;
  return false;
}

bool proper_subtree(const QTree& sub, const QTree& of) {
  for (const auto& c : of.children)
    if (c == sub || proper_subtree(sub, c)) return true;
  return false;
}

QTree step(const qo::OrderSpec& q, const QTree& parent, const QTree& other) {
  for (const auto& child : parent.children)
    if (!leq_weak(q, child, other)) return child;
  return parent;
}

qo::SpecPtr guard_label_spec(qo::SpecPtr q) { return qo::sum(std::move(q), qo::chain(1)); }

namespace {

QTree embed_rec(const QTree& t) {
  const qo::Elem guard = qo::Elem::in(1, qo::Elem::atom(0));
  std::vector<QTree> children;
  children.reserve(t.children.size());
  for (const auto& c : t.children)
    children.push_back(QTree::node(guard, {embed_rec(c)}));
  return QTree::node(qo::Elem::in(0, t.label), std::move(children));
}

}  // namespace

QTree embed_strong_to_weak(const qo::OrderSpec& q, const QTree& t) {
  // labels must be well shaped for Q before lifting into Q+1
  qo::check_shape(q, t.label);
  for (const auto& c : t.children) qo::check_shape(q, c.label);
  return embed_rec(t);
}

std::vector<QTree> enumerate(const qo::OrderSpec& q, int q_bound, int max_nodes) {
  std::vector<qo::Elem> labels = qo::enumerate(q, q_bound);
  // by_nodes[n]: all trees with exactly n nodes
  std::vector<std::vector<QTree>> by_nodes(max_nodes + 1);
  std::function<void(int)> fill = [&](int n) {
    for (const auto& label : labels) {
      // distribute n-1 nodes over an ordered list of children
      std::vector<QTree> current;
      std::function<void(int)> extend = [&](int budget) {
        if (budget == 0) {
          by_nodes[n].push_back(QTree::node(label, current));
          return;
        }
        for (int cs = 1; cs <= budget; ++cs)
          for (const auto& c : by_nodes[cs]) {
            current.push_back(c);
            extend(budget - cs);
            current.pop_back();
          }
      };
      extend(n - 1);
    }
  };
  for (int n = 1; n <= max_nodes; ++n) fill(n);
  std::vector<QTree> all;
  for (auto& bucket : by_nodes)
    for (auto& t : bucket) all.push_back(std::move(t));
  std::sort(all.begin(), all.end());
  return all;
}

// --- text -------------------------------------------------------------------

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
};

QTree parse_rec(const qo::OrderSpec& q, Cursor& c) {
  // the label term extends to the '(' that opens the child list; scan a
  // balanced token so labels may themselves contain parentheses
  c.skip_ws();
  std::size_t depth = 0, end = c.pos;
  for (; end < c.text.size(); ++end) {
    char ch = c.text[end];
    if (ch == '(' && depth == 0 && end > c.pos) break;  // child list opens
    if (ch == '(' || ch == '{' || ch == '<') {
      ++depth;
    } else if (ch == ')' || ch == '}' || ch == '>') {
      if (depth == 0) break;  // enclosing list closes: malformed label
      --depth;
    }
  }
  if (end == c.pos || end >= c.text.size())
    throw ParseError("expected a labelled tree 'label(...)'", c.pos);
  qo::Elem label = qo::parse_elem(q, c.text.substr(c.pos, end - c.pos));
  c.pos = end;
  if (c.peek() != '(') throw ParseError("expected '(' after the label", c.pos);
  ++c.pos;
  std::vector<QTree> children;
  if (c.peek() != ')') {
    children.push_back(parse_rec(q, c));
    while (c.peek() == ',') {
      ++c.pos;
      children.push_back(parse_rec(q, c));
    }
  }
  if (c.peek() != ')') throw ParseError("expected ')'", c.pos);
  ++c.pos;
  return QTree::node(std::move(label), std::move(children));
}

}  // namespace

QTree parse(const qo::OrderSpec& q, std::string_view text) {
  Cursor c{text};
  QTree t = parse_rec(q, c);
  c.skip_ws();
  if (c.pos != text.size()) throw ParseError("trailing input after tree", c.pos);
  return t;
}

std::string print(const qo::OrderSpec& q, const QTree& t) {
  std::string out = qo::print_elem(q, t.label);
  out += "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ",";
    out += print(q, t.children[i]);
  }
  return out + ")";
}

}  // namespace bqo::trees
