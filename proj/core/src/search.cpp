#include "bqo/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace bqo::search {

using barrier::Seq;

Mode parse_mode(std::string_view name) {
  if (name == "first") return Mode::first;
  if (name == "all") return Mode::all;
  if (name == "count") return Mode::count;
  throw ValidityError("unknown search mode: " + std::string(name));
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::first:
      return "first";
    case Mode::all:
      return "all";
    case Mode::count:
      return "count";
  }
  return "?";
}

namespace {

struct Instance {
  std::vector<Seq> cells;                      // assignment order (lexicographic)
  std::vector<std::vector<int>> later;         // successor partners of each cell
  std::vector<std::vector<bool>> forbidden;    // forbidden[v][w]: v <=_Q w
  int value_count = 0;
  bool antichain_target = false;
};

/// The successor relation points from smaller to larger first elements, so
/// the lexicographic cell order is a linear extension and every constraint
/// runs forward.
Instance build(const barrier::Block& block, const qo::OrderSpec& q) {
  if (!qo::finite(q)) throw ValidityError("search needs a finite target order");
  if (!barrier::is_block(block)) throw ValidityError("search needs a block");
  Instance inst;
  inst.cells = block.elems;
  auto elems = qo::enumerate_all(q);
  inst.value_count = static_cast<int>(elems.size());
  inst.forbidden.assign(inst.value_count, std::vector<bool>(inst.value_count, false));
  for (int v = 0; v < inst.value_count; ++v)
    for (int w = 0; w < inst.value_count; ++w)
      inst.forbidden[v][w] = qo::leq(q, elems[v], elems[w]);
  inst.antichain_target = q.kind == qo::OrderSpec::Kind::antichain;
  const int n = static_cast<int>(inst.cells.size());
  inst.later.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || inst.cells[i].empty()) continue;
      if (barrier::triangle(inst.cells[i], inst.cells[j])) inst.later[i].push_back(j);
    }
  return inst;
}

struct Dfs {
  const Instance& inst;
  Mode mode;
  std::vector<int> assignment;
  std::vector<std::vector<int>> domain_hits;  // pruning counters per cell x value
  long long nodes = 0;
  long long found = 0;
  std::optional<std::vector<int>> first_witness;
  std::vector<std::vector<int>> all_witnesses;
  bool stop = false;

  Dfs(const Instance& i, Mode m)
      : inst(i),
        mode(m),
        assignment(i.cells.size(), -1),
        domain_hits(i.cells.size(), std::vector<int>(i.value_count, 0)) {}

  bool allowed(std::size_t cell, int value) const { return domain_hits[cell][value] == 0; }

  /// Prunes future domains against `cell = value`; returns false when a
  /// future domain empties. Always paired with release_future.
  bool restrict_future(std::size_t cell, int value) {
    bool ok = true;
    for (int j : inst.later[cell]) {
      bool any = false;
      for (int w = 0; w < inst.value_count; ++w) {
        if (inst.forbidden[value][w]) ++domain_hits[j][w];
        if (domain_hits[j][w] == 0) any = true;
      }
      if (!any) ok = false;
    }
    return ok;
  }

  void release_future(std::size_t cell, int value) {
    for (int j : inst.later[cell])
      for (int w = 0; w < inst.value_count; ++w)
        if (inst.forbidden[value][w]) --domain_hits[j][w];
  }

  void record() {
    ++found;
    if (!first_witness) first_witness = assignment;
    if (mode == Mode::all) all_witnesses.push_back(assignment);
    if (mode == Mode::first) stop = true;
  }

  void run(std::size_t cell) {
    if (stop) return;
    if (cell == inst.cells.size()) {
      record();
      return;
    }
    for (int v = 0; v < inst.value_count && !stop; ++v) {
      if (!allowed(cell, v)) continue;
      ++nodes;
      assignment[cell] = v;
      if (restrict_future(cell, v)) run(cell + 1);
      release_future(cell, v);
      assignment[cell] = -1;
    }
  }

  /// Explores the subtree with the first cells pinned to `prefix`.
  void run_with_prefix(const std::vector<int>& prefix) {
    std::vector<std::size_t> applied;
    bool ok = true;
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      const int v = prefix[d];
      if (!allowed(d, v)) {
        ok = false;
        break;
      }
      ++nodes;
      assignment[d] = v;
      applied.push_back(d);
      if (!restrict_future(d, v)) {
        ok = false;
        break;
      }
    }
    if (ok) run(prefix.size());
    for (std::size_t idx = applied.size(); idx-- > 0;) {
      release_future(applied[idx], prefix[applied[idx]]);
      assignment[applied[idx]] = -1;
    }
  }
};

Assignment to_assignment(const Instance& inst, const std::vector<int>& values) {
  Assignment out;
  for (std::size_t i = 0; i < inst.cells.size(); ++i) out[inst.cells[i]] = values[i];
  return out;
}

/// Plain double loop over the definition, independent of the DFS state.
void self_check(const Instance& inst, const Assignment& witness) {
  for (const auto& [s, v] : witness)
    for (const auto& [t, w] : witness) {
      if (s.empty() || s == t || !barrier::triangle(s, t)) continue;
      if (inst.forbidden[v][w])
        throw ContractError("search produced a good pair at " + barrier::print_seq(s) +
                            " <| " + barrier::print_seq(t));
    }
}

}  // namespace

Result find_bad(const barrier::Block& block, const qo::OrderSpec& q, const Options& opt) {
  const auto started = std::chrono::steady_clock::now();
  Instance inst = build(block, q);
  Result result;

  const std::size_t n = inst.cells.size();
  if (n == 0) {  // the empty array is vacuously bad
    result.exists = true;
    result.witness = Assignment{};
    result.count = 1;
    return result;
  }
  if (inst.value_count > 0) {
    // value symmetry of antichain targets: every witness permutes into one
    // with value 0 in the first cell, and the least witness has that shape
    const bool pin_first = inst.antichain_target && opt.mode == Mode::first;
    const int branches = pin_first ? 1 : inst.value_count;
    std::vector<Dfs> runs;
    runs.reserve(branches);
    for (int v = 0; v < branches; ++v) runs.emplace_back(inst, opt.mode);

    std::atomic<int> next{0};
    auto body = [&] {
      for (;;) {
        int v = next.fetch_add(1);
        if (v >= branches) return;
        runs[v].run_with_prefix({v});
      }
    };
    if (opt.workers <= 1) {
      body();
    } else {
      std::vector<std::thread> pool;
      const int count = std::min(opt.workers, branches);
      for (int w = 0; w < count; ++w) pool.emplace_back(body);
      for (auto& t : pool) t.join();
    }

    // canonical sequential accounting: branches in value order, stopping at
    // the first witnessing branch in `first` mode
    for (int v = 0; v < branches; ++v) {
      const Dfs& run = runs[v];
      result.nodes_expanded += run.nodes;
      result.count += run.found;
      for (const auto& w : run.all_witnesses)
        result.all.push_back(to_assignment(inst, w));
      if (run.first_witness && !result.witness) {
        result.exists = true;
        result.witness = to_assignment(inst, *run.first_witness);
        if (opt.mode == Mode::first) break;
      }
    }
    if (result.count > 0) result.exists = true;
    if (result.witness) self_check(inst, *result.witness);
    for (const auto& w : result.all) self_check(inst, w);
  }

  result.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::steady_clock::now() - started)
                                            .count());
  return result;
}

ThresholdResult threshold(int arity, const qo::OrderSpec& q, int n_max, const Options& opt) {
  if (arity < 1) throw ValidityError("threshold arity must be >= 1");
  const auto started = std::chrono::steady_clock::now();
  ThresholdResult out;
  out.arity = arity;
  for (int base = 1; base <= n_max; ++base) {
    Options step = opt;
    step.mode = Mode::first;
    Result r = find_bad(barrier::uniform(base, arity), q, step);
    if (!r.exists) {
      out.refutation_run = std::move(r);
      break;
    }
    // downward closure: the witness restricted to the previous base must
    // stay bad there (its constraint pairs are a subset of the new ones)
    if (base > 1 && out.threshold == base - 1) {
      barrier::Block smaller = barrier::uniform(base - 1, arity);
      auto elems = qo::enumerate_all(q);
      for (const auto& s : smaller.elems)
        for (const auto& t : smaller.elems) {
          if (s.empty() || s == t || !barrier::triangle(s, t)) continue;
          if (qo::leq(q, elems[r.witness->at(s)], elems[r.witness->at(t)]))
            throw ContractError("threshold sweep is not downward closed");
        }
    }
    out.threshold = base;
    out.witness_run = std::move(r);
  }
  out.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - started)
                                         .count());
  return out;
}

}  // namespace bqo::search
