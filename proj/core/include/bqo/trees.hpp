#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bqo/order.hpp"

namespace bqo::trees {

/// A finite ordered tree with vertex labels from a quasi order Q. Children
/// keep their given order; no canonicalization happens (trees are ordered).
struct QTree {
  qo::Elem label;
  std::vector<QTree> children;

  static QTree node(qo::Elem label, std::vector<QTree> children = {});

  int node_count() const;
  int cmp(const QTree& o) const;
  bool operator==(const QTree& o) const { return cmp(o) == 0; }
  bool operator!=(const QTree& o) const { return cmp(o) != 0; }
  bool operator<(const QTree& o) const { return cmp(o) < 0; }
};

/// Strong homomorphic embeddability: labels below and every child mapped
/// into some child subtree, or the whole tree mapped into a child subtree.
bool leq_strong(const qo::OrderSpec& q, const QTree& a, const QTree& b);

/// Weak homomorphic embeddability: labels below and every child weakly
/// below the whole target, or the whole tree below a child subtree.
bool leq_weak(const qo::OrderSpec& q, const QTree& a, const QTree& b);

/// True when `sub` occurs as a proper subtree of `of`.
bool proper_subtree(const QTree& sub, const QTree& of);

/// The selector used when lifting arrays over trees: with parent =
/// q*<a_0,...,a_{n-1}> and I = {i < n : a_i is not weakly below `other`},
/// returns a_min(I) when I is non-empty and the parent otherwise.
QTree step(const qo::OrderSpec& q, const QTree& parent, const QTree& other);

/// The label order of the strong-to-weak embedding target: Q extended by
/// one fresh element that is incomparable with everything.
qo::SpecPtr guard_label_spec(qo::SpecPtr q);

/// Order embedding of (T_f(Q), strong) into (T_f(Q+1), weak): lifts every
/// label into the first summand and wraps each child in a node labelled by
/// the fresh element, which blocks level-collapsing weak homomorphisms.
/// Contract (exhaustively tested): a <=s b iff image(a) <=w image(b).
QTree embed_strong_to_weak(const qo::OrderSpec& q, const QTree& t);

/// All trees with labels from enumerate(q, q_bound) and at most max_nodes
/// nodes, ascending in the structural order.
std::vector<QTree> enumerate(const qo::OrderSpec& q, int q_bound, int max_nodes);

// Grammar: label term followed by the parenthesized child list, children
// comma separated: `0(1(),0())` over an atom Q.
QTree parse(const qo::OrderSpec& q, std::string_view text);
std::string print(const qo::OrderSpec& q, const QTree& t);

}  // namespace bqo::trees
