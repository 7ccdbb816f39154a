#include "bqo/array.hpp"

#include <algorithm>

namespace bqo::arrays {

using barrier::Block;
using barrier::Seq;
using structure::Structure;
using structure::Value;

void ArrayTable::check_total() const {
  for (const auto& s : block.elems)
    if (!values.count(s))
      throw ValidityError("array is missing a value at " + barrier::print_seq(s));
}

Selector parse_selector(std::string_view name) {
  if (name == "tc") return Selector::tc;
  if (name == "hset") return Selector::hset;
  if (name == "tree") return Selector::tree;
  throw ValidityError("unknown selector: " + std::string(name));
}

const char* selector_name(Selector s) {
  switch (s) {
    case Selector::tc:
      return "tc";
    case Selector::hset:
      return "hset";
    case Selector::tree:
      return "tree";
  }
  return "?";
}

std::vector<Seq> LiftTable::cells_at(int n) const {
  std::vector<Seq> out;
  for (const auto& [s, lvl] : level)
    if (lvl == n) out.push_back(s);
  return out;
}

namespace {

void check_selector_target(Selector selector, const Structure& target) {
  const bool ok =
      (selector == Selector::tc && target.kind == Structure::Kind::tc) ||
      (selector == Selector::hset && target.kind == Structure::Kind::hterm) ||
      (selector == Selector::tree && target.kind == Structure::Kind::tree_weak);
  if (!ok)
    throw ShapeError(std::string("selector '") + selector_name(selector) +
                     "' does not match target " + target.to_string());
}

Value update(const LiftTable& g, const Value& prev, const Value& shifted) {
  switch (g.selector) {
    case Selector::tc:
      return tc::chi(std::get<tc::TCElem>(prev), std::get<tc::TCElem>(shifted));
    case Selector::hset: {
      const auto& a = std::get<hset::HTerm>(prev);
      const auto& b = std::get<hset::HTerm>(shifted);
      if (!a.is_set || hset::leq(*g.target.spec, a, b)) return a;
      return hset::select_witness(*g.target.spec, a, b);
    }
    case Selector::tree:
      return trees::step(*g.target.spec, std::get<trees::QTree>(prev),
                         std::get<trees::QTree>(shifted));
  }
  throw ShapeError("unhandled selector");
}

/// drop the last / the first component of the decomposition and re-union
std::pair<Seq, Seq> halves(const Block& base, const Seq& s) {
  auto parts = barrier::decompose(base, s);
  auto join = [](auto begin, auto end) {
    Seq acc;
    for (auto it = begin; it != end; ++it) {
      Seq merged;
      std::set_union(acc.begin(), acc.end(), it->begin(), it->end(),
                     std::back_inserter(merged));
      acc = std::move(merged);
    }
    return acc;
  };
  return {join(parts.begin(), parts.end() - 1), join(parts.begin() + 1, parts.end())};
}

}  // namespace

LiftTable lift(const ArrayTable& f, Selector selector, int depth, int workers) {
  if (depth < 1) throw ValidityError("lift depth must be >= 1");
  check_selector_target(selector, f.target);
  if (!barrier::is_barrier(f.block))
    throw ValidityError("lifts are defined over barriers");
  f.check_total();

  LiftTable g;
  g.base = f.block;
  g.target = f.target;
  g.selector = selector;
  g.depth = depth;
  for (const auto& s : f.block.elems) {
    g.values.emplace(s, f.values.at(s));
    g.level.emplace(s, 1);
  }
  for (int n = 2; n <= depth; ++n) {
    Block next = barrier::power(f.block, n);
    if (next.elems.empty()) break;
    std::vector<std::pair<Seq, Value>> computed(next.elems.size());
    parallel_for(static_cast<long>(next.elems.size()), workers, [&](long i) {
      const Seq& s = next.elems[static_cast<std::size_t>(i)];
      auto [head, tail] = halves(f.block, s);
      computed[static_cast<std::size_t>(i)] = {
          s, update(g, g.values.at(head), g.values.at(tail))};
    });
    for (auto& [s, v] : computed) {
      g.values.emplace(s, std::move(v));
      g.level.emplace(s, n);
    }
  }
  return g;
}

namespace {

bool is_terminal_urelement(const LiftTable& g, const Value& v) {
  if (g.selector == Selector::tc) return std::get<tc::TCElem>(v).is_urelement();
  return !std::get<hset::HTerm>(v).is_set;
}

}  // namespace

ExtractResult extract_block(const LiftTable& g, std::string_view terminal) {
  const bool stabilized = terminal == "root-stabilized";
  if (!stabilized && terminal != "urelement")
    throw ValidityError("unknown terminal predicate: " + std::string(terminal));
  if (stabilized && g.selector != Selector::tree)
    throw ValidityError("root-stabilized applies to tree lifts");
  if (!stabilized && g.selector == Selector::tree)
    throw ValidityError("urelement applies to tc and hset lifts");

  // terminal cells
  std::map<Seq, bool> terminal_at;
  for (const auto& [s, v] : g.values) {
    if (!stabilized) {
      terminal_at[s] = is_terminal_urelement(g, v);
      continue;
    }
    // the value must persist over every extension present in the table,
    // and at least one proper extension must attest it
    bool attested = false, persists = true;
    for (const auto& [t, w] : g.values) {
      if (t.size() <= s.size() || !barrier::is_proper_prefix(s, t)) continue;
      attested = true;
      if (!(std::get<trees::QTree>(w) == std::get<trees::QTree>(v))) persists = false;
    }
    terminal_at[s] = attested && persists;
  }

  ExtractResult out;
  std::vector<Seq> derived;
  for (const auto& [s, is_term] : terminal_at) {
    if (!is_term) continue;
    bool minimal = true;
    for (const auto& [r, r_term] : terminal_at)
      if (r_term && barrier::is_proper_prefix(r, s)) {
        minimal = false;
        break;
      }
    if (minimal) derived.push_back(s);
  }
  // open branches: maximal cells whose prefix chain never hit a terminal
  for (const auto& [s, v] : g.values) {
    bool maximal = true;
    for (const auto& [t, w] : g.values)
      if (t != s && barrier::is_proper_prefix(s, t)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    bool settled = terminal_at[s];
    for (const auto& [r, r_term] : terminal_at)
      if (r_term && barrier::is_proper_prefix(r, s)) settled = true;
    if (!settled) {
      out.complete = false;
      out.open_branches.push_back(s);
    }
  }
  int maxlen = 0;
  for (const auto& s : derived) maxlen = std::max<int>(maxlen, s.size());
  out.derived = Block::make(g.base.base, std::max(maxlen, 1), std::move(derived));
  return out;
}

namespace {

std::string cell_name(const Seq& s) { return "<" + barrier::print_seq(s) + ">"; }

void check_dichotomy(const LiftTable& g, const Seq& s, Report& report) {
  auto parts = barrier::decompose(g.base, s);
  if (parts.size() < 2) return;
  ++report.cells_checked;
  Seq head;  // union of all but the last component
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    Seq merged;
    std::set_union(head.begin(), head.end(), parts[i].begin(), parts[i].end(),
                   std::back_inserter(merged));
    head = std::move(merged);
  }
  const Value& value = g.values.at(s);
  const Value& prev = g.values.at(head);
  switch (g.selector) {
    case Selector::tc: {
      const auto a = std::get<tc::TCElem>(value);
      const auto p = std::get<tc::TCElem>(prev);
      if (p.is_urelement()) {
        if (!(a == p))
          report.violations.push_back(cell_name(s) + ": value moved off an urelement");
        return;
      }
      auto e = tc::members(p);
      if (std::find(e.begin(), e.end(), a) == e.end())
        report.violations.push_back(cell_name(s) + ": value is not a member of its parent");
      if (!tc::rank_leq(tc::rank(a), tc::rank(p)) || tc::rank(a) == tc::rank(p))
        report.violations.push_back(cell_name(s) + ": rank failed to decrease");
      return;
    }
    case Selector::hset: {
      const auto& a = std::get<hset::HTerm>(value);
      const auto& p = std::get<hset::HTerm>(prev);
      if (!p.is_set) {
        if (!(a == p))
          report.violations.push_back(cell_name(s) + ": value moved off an urelement");
        return;
      }
      if (a == p) {
        report.violations.push_back(cell_name(s) + ": value stabilized at a set term");
        return;
      }
      if (std::find(p.elems.begin(), p.elems.end(), a) == p.elems.end())
        report.violations.push_back(cell_name(s) + ": value is not a child of its parent");
      if (hset::height(a) >= hset::height(p))
        report.violations.push_back(cell_name(s) + ": height failed to decrease");
      return;
    }
    case Selector::tree: {
      const auto& a = std::get<trees::QTree>(value);
      const auto& p = std::get<trees::QTree>(prev);
      if (!(a == p) && !trees::proper_subtree(a, p))
        report.violations.push_back(cell_name(s) +
                                    ": value is neither frozen nor a proper subtree");
      return;
    }
  }
}

}  // namespace

Report badness_check(const LiftTable& g) {
  Report report;
  for (int n = 1; n <= g.depth; ++n) {
    auto cells = g.cells_at(n);
    for (const auto& s : cells)
      for (const auto& t : cells) {
        if (s.empty() || !barrier::triangle(s, t)) continue;
        ++report.pairs_checked;
        if (structure::leq(g.target, g.values.at(s), g.values.at(t)))
          report.violations.push_back(cell_name(s) + " <| " + cell_name(t) +
                                      " carries comparable values at level " +
                                      std::to_string(n));
      }
  }
  for (const auto& [s, lvl] : g.level)
    if (lvl >= 2) check_dichotomy(g, s, report);
  return report;
}

std::vector<std::pair<Seq, Seq>> good_pairs(const ArrayTable& f) {
  f.check_total();
  std::vector<std::pair<Seq, Seq>> out;
  for (const auto& s : f.block.elems)
    for (const auto& t : f.block.elems) {
      if (s.empty() || !barrier::triangle(s, t)) continue;
      if (structure::leq(f.target, f.values.at(s), f.values.at(t)))
        out.emplace_back(s, t);
    }
  return out;
}

Report rank_descent_check(const LiftTable& g, const ExtractResult& derived) {
  if (g.selector != Selector::tc)
    throw ValidityError("the rank descent check applies to tc lifts");
  // base must be uniform so that every long-enough sequence decomposes
  std::size_t k = g.base.elems.empty() ? 0 : g.base.elems.front().size();
  for (const auto& s : g.base.elems)
    if (s.size() != k)
      throw ValidityError("the rank descent check needs a uniform base barrier");

  const Block& b = derived.derived;
  Report report;
  // the maximum rank over dominated tree members of s (all of length >= k,
  // hence decomposable over the uniform base)
  auto obar = [&](const Seq& s) -> std::optional<std::optional<int>> {
    std::optional<int> best;
    bool seen = false;
    std::function<void(std::size_t, Seq&)> scan = [&](std::size_t i, Seq& r) {
      if (i == s.size()) {
        if (!barrier::in_tree(b, r)) return;
        if (!g.values.count(r)) return;
        auto rank = tc::rank(std::get<tc::TCElem>(g.values.at(r)));
        if (!seen || !tc::rank_leq(rank, best) ) best = rank;
        seen = true;
        return;
      }
      int lo = i == 0 ? 0 : r.back() + 1;
      for (int v = lo; v <= s[i]; ++v) {
        r.push_back(v);
        scan(i + 1, r);
        r.pop_back();
      }
    };
    Seq r;
    scan(0, r);
    if (!seen) return std::nullopt;
    return best;
  };

  for (const auto& [s, lvl] : g.level) {
    if (s.size() < k || !barrier::in_tree_star(b, s)) continue;
    for (int x = s.empty() ? 0 : s.back() + 1; x < g.base.base; ++x) {
      Seq t = s;
      t.push_back(x);
      if (!g.values.count(t) || !barrier::in_tree_star(b, t)) continue;
      ++report.pairs_checked;
      auto lo = obar(t), hi = obar(s);
      if (!lo || !hi) {
        report.violations.push_back(cell_name(t) + ": empty maximum in the star tree");
        continue;
      }
      // strict decrease in 1+Omega
      if (tc::rank_leq(*hi, *lo))
        report.violations.push_back(cell_name(s) + " -> " + cell_name(t) +
                                    ": star-tree rank failed to decrease");
    }
  }
  return report;
}

}  // namespace bqo::arrays
