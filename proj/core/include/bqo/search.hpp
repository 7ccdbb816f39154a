#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bqo/barrier.hpp"
#include "bqo/order.hpp"

namespace bqo::search {

enum class Mode { first, all, count };

Mode parse_mode(std::string_view name);
const char* mode_name(Mode m);

struct Options {
  Mode mode = Mode::first;
  int workers = 1;
};

/// An assignment block element -> index into the ascending element list of
/// the target order.
using Assignment = std::map<barrier::Seq, int>;

struct Result {
  bool exists = false;
  std::optional<Assignment> witness;  // canonically least when it exists
  std::vector<Assignment> all;        // mode all only
  long long count = 0;                // mode all/count
  long long nodes_expanded = 0;       // deterministic across worker counts
  long elapsed_ms = 0;
};

/// Exhaustive backtracking search for a bad array on the block into the
/// finite order q: an assignment f with f(s) not below f(t) for every pair
/// s <| t inside the block. Cells are assigned along a linear extension of
/// the successor relation with forward checking on the remaining domains;
/// for antichain targets in `first` mode, the first cell's value is pinned
/// (any witness permutes into one of that shape).
///
/// The reported node count is what the canonical sequential search would
/// expand; branch-parallel runs reproduce it exactly.
Result find_bad(const barrier::Block& block, const qo::OrderSpec& q, const Options& opt);

struct ThresholdResult {
  int arity = 0;
  int threshold = 0;  // largest base <= n_max carrying a bad array; 0 when none
  Result witness_run;             // at the threshold (when > 0)
  std::optional<Result> refutation_run;  // at threshold+1 when <= n_max
  long elapsed_ms = 0;
};

/// Sweeps bases 1..n_max over the uniform blocks [base]^arity. Asserts the
/// downward closure on every step: a witness restricted to the previous
/// base must stay bad.
ThresholdResult threshold(int arity, const qo::OrderSpec& q, int n_max, const Options& opt);

}  // namespace bqo::search
