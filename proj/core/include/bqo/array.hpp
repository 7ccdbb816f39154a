#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bqo/barrier.hpp"
#include "bqo/structure.hpp"

namespace bqo::arrays {

/// An array on a truncated block: a total assignment of target values to
/// the block's member sequences.
struct ArrayTable {
  barrier::Block block;
  structure::Structure target;
  std::map<barrier::Seq, structure::Value> values;

  void check_total() const;  // throws ValidityError when a cell is missing
};

/// Which witness selector drives the recursion of a lift.
enum class Selector { tc, hset, tree };

Selector parse_selector(std::string_view name);
const char* selector_name(Selector s);

/// The recursively lifted array over the chain powers of the base barrier:
/// level 1 is the input array; a cell s of level n > 1 takes the selector
/// update of its two level n-1 halves (drop the last / the first chain
/// component).
struct LiftTable {
  barrier::Block base;
  structure::Structure target;
  Selector selector = Selector::tc;
  int depth = 1;
  std::map<barrier::Seq, structure::Value> values;
  std::map<barrier::Seq, int> level;  // decomposition length of each cell

  std::vector<barrier::Seq> cells_at(int n) const;
};

/// Computes the lift to the given depth. The base block must be a barrier
/// and the target must match the selector (tc@k / hterm@Q / tree-w@Q).
/// Cells of one level may be evaluated in parallel; the table is a function
/// of the decompositions alone, so the worker count never changes it.
LiftTable lift(const ArrayTable& f, Selector selector, int depth, int workers = 1);

struct ExtractResult {
  barrier::Block derived;                   // minimal cells where the terminal holds
  bool complete = true;                     // false: some branch never terminated
  std::vector<barrier::Seq> open_branches;  // maximal cells with no terminal prefix
};

/// Collects the minimal cells (under the prefix order) where the named
/// terminal predicate holds: "urelement" (tc and hset lifts) or
/// "root-stabilized" (tree lifts; the value must persist over every
/// extension inside the truncation and be attested by at least one).
ExtractResult extract_block(const LiftTable& g, std::string_view terminal);

struct Report {
  long pairs_checked = 0;
  long cells_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Verifies that the lift is bad on every level (no s <| t inside one level
/// with g(s) <= g(t)) and that every cell obeys the descent/stabilization
/// dichotomy of its selector: the value freezes exactly on terminals and
/// otherwise steps to a member/child/subtree of strictly smaller rank.
Report badness_check(const LiftTable& g);

/// Lists the good pairs of a plain array: s <| t in the block with
/// f(s) <= f(t). An empty list certifies badness.
std::vector<std::pair<barrier::Seq, barrier::Seq>> good_pairs(const ArrayTable& f);

/// Along every one-step prefix extension inside the star tree of the
/// derived block, the maximum rank of the dominated tree members must drop
/// strictly. Applies to tc lifts over a uniform base barrier.
Report rank_descent_check(const LiftTable& g, const ExtractResult& derived);

}  // namespace bqo::arrays
