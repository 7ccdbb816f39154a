#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bqo/util.hpp"

namespace bqo::barrier {

/// A strictly increasing finite sequence of naturals.
using Seq = std::vector<int>;

bool increasing(const Seq& s);
void validate(const Seq& s);  // throws ValidityError

/// s with its least element removed. Requires a nonempty sequence.
Seq drop_min(const Seq& s);

/// The successor relation on sequences: s <| t holds when some increasing
/// continuation realizes t right after s, i.e. drop_min(s) and t are
/// prefix-comparable and (unless t is empty) the first element of s lies
/// strictly below the first element of t. The junction condition only
/// bites for |s| = 1; it makes ([N]^1, <|) isomorphic to (N, <).
bool triangle(const Seq& s, const Seq& t);

/// Sequence-flavoured halves (drop last, drop first); requires |s| >= 2.
std::pair<Seq, Seq> head_tail(const Seq& s);

bool is_prefix(const Seq& shorter, const Seq& longer);          // allows equality
bool is_proper_prefix(const Seq& shorter, const Seq& longer);
bool subset(const Seq& a, const Seq& b);                        // as sets

/// Same length and pointwise dominated: r_i <= s_i for all i.
bool pointwise_leq(const Seq& r, const Seq& s);

/// A finite truncation of a block on N: all member sequences live over
/// {0..base-1} with length <= maxlen, and the covering condition is read
/// over the strictly increasing sequences of length exactly maxlen.
struct Block {
  int base = 0;
  int maxlen = 0;
  std::vector<Seq> elems;  // sorted lexicographically, unique

  static Block make(int base, int maxlen, std::vector<Seq> elems);
};

/// Prefix-free and covering (every increasing sequence of length maxlen
/// over the base has exactly one prefix in the family).
bool is_block(const Block& b);

/// A block that is additionally an antichain under set inclusion.
bool is_barrier(const Block& b);

/// The uniform barrier [ {0..base-1} ]^n.
Block uniform(int base, int n);

/// All member sequences of increasing chains s(0) <| ... <| s(n-1) from b,
/// each chain contributing the union of its members. Requires a barrier
/// (unions over mere blocks need not decompose uniquely). The result
/// covers at length n-1+maxlen.
Block power(const Block& b, int n);

/// The unique chain decomposition of s over the barrier b; throws
/// ValidityError when s is not decomposable.
std::vector<Seq> decompose(const Block& b, const Seq& s);

/// True when no proper prefix of s lies in b (membership in the tree T).
/// Defined for arbitrary increasing sequences, also beyond the base.
bool in_tree(const Block& b, const Seq& s);

/// True when some r with r pointwise <= s (same length) lies in T.
bool in_tree_star(const Block& b, const Seq& s);

/// Leaf characterization of the derived barrier: s lies in T* and no
/// one-step extension does. Extensions range over all of N; by pointwise
/// monotonicity it suffices to probe max(s)+1.
bool star_leaf(const Block& b, const Seq& s);

struct StarResult {
  std::vector<Seq> tree;       // T restricted to the truncated universe
  std::vector<Seq> tree_star;  // T* restricted likewise
  Block b_star;                // {s in T* : r in b for all r pointwise <= s with r in T}
};

/// The derived-barrier construction. Requires a block.
StarResult star(const Block& b);

/// Every truncated block over the given base/length whose members are
/// nonempty sequences.
std::vector<Block> enumerate_blocks(int base, int maxlen);

Seq parse_seq(std::string_view text);  // comma separated, "" for the empty one
std::string print_seq(const Seq& s);

}  // namespace bqo::barrier
