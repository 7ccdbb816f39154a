#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bqo/order.hpp"

namespace bqo::hset {

/// A hereditarily finite set over urelements from a quasi order Q: either
/// an urelement (a Q-element) or a finite set of previously built terms.
/// Set children are kept sorted and duplicate-free under the structural
/// order, so equality of terms is structural equality.
struct HTerm {
  bool is_set = false;
  qo::Elem atom;              // urelement payload (ignored for sets)
  std::vector<HTerm> elems;   // set members, canonical

  static HTerm ur(qo::Elem q);
  static HTerm set(std::vector<HTerm> members);  // sorts and dedups

  int cmp(const HTerm& other) const;  // urelements before sets, then lex
  bool operator==(const HTerm& o) const { return cmp(o) == 0; }
  bool operator!=(const HTerm& o) const { return cmp(o) != 0; }
  bool operator<(const HTerm& o) const { return cmp(o) < 0; }
};

/// The recursive order on H_f(Q):
///   ur(p)  <= ur(q)   iff p <=_Q q
///   ur(p)  <= set(b)  iff ur(p) <= y for some y in b
///   set(a) <= ur(q)   iff x <= ur(q) for all x in a
///   set(a) <= set(b)  iff each x in a has some y in b with x <= y
bool leq(const qo::OrderSpec& q, const HTerm& x, const HTerm& y);

/// Union of the urelements occurring in the term, canonicalized.
std::vector<qo::Elem> support(const HTerm& t);

/// ht(ur) = 0, ht(set a) = max({0} + {ht(x)+1 : x in a}).
int height(const HTerm& t);

/// For a set-term a with a !<= b, returns the least child x of a (canonical
/// order) such that x !<= b when b is an urelement, and x !<= y for every
/// child y of b otherwise. Throws ContractError outside these preconditions.
HTerm select_witness(const qo::OrderSpec& q, const HTerm& a, const HTerm& b);

/// All terms over urelements enumerate(q, q_bound) with height <= ht_bound
/// and at most max_children members per set, ascending.
std::vector<HTerm> enumerate(const qo::OrderSpec& q, int q_bound, int ht_bound,
                             int max_children);

// Grammar: urelement `u<i>` (`e<i>` over explicit tables) when Q is an atom,
// a bare Q-element term otherwise; set `{t1,...,tn}`.
HTerm parse(const qo::OrderSpec& q, std::string_view text);
std::string print(const qo::OrderSpec& q, const HTerm& t);

}  // namespace bqo::hset
