#include "bqo/barrier.hpp"

#include <algorithm>
#include <functional>

namespace bqo::barrier {

bool increasing(const Seq& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] >= s[i + 1]) return false;
  return std::all_of(s.begin(), s.end(), [](int v) { return v >= 0; });
}

void validate(const Seq& s) {
  if (!increasing(s)) throw ValidityError("sequence must be strictly increasing");
}

Seq drop_min(const Seq& s) {
  if (s.empty()) throw ValidityError("cannot drop the least element of an empty sequence");
  return Seq(s.begin() + 1, s.end());
}

bool is_prefix(const Seq& shorter, const Seq& longer) {
  if (shorter.size() > longer.size()) return false;
  return std::equal(shorter.begin(), shorter.end(), longer.begin());
}

bool is_proper_prefix(const Seq& shorter, const Seq& longer) {
  return shorter.size() < longer.size() && is_prefix(shorter, longer);
}

bool subset(const Seq& a, const Seq& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool pointwise_leq(const Seq& r, const Seq& s) {
  if (r.size() != s.size()) return false;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] > s[i]) return false;
  return true;
}

bool triangle(const Seq& s, const Seq& t) {
  if (s.empty()) throw ValidityError("the left side of <| must be nonempty");
  validate(s);
  validate(t);
  Seq shifted = drop_min(s);
  if (!is_prefix(shifted, t) && !is_prefix(t, shifted)) return false;
  return t.empty() || s[0] < t[0];
}

std::pair<Seq, Seq> head_tail(const Seq& s) {
  validate(s);
  if (s.size() < 2) throw ValidityError("head/tail need a sequence of length >= 2");
  return {Seq(s.begin(), s.end() - 1), Seq(s.begin() + 1, s.end())};
}

// --- blocks -----------------------------------------------------------------

Block Block::make(int base, int maxlen, std::vector<Seq> elems) {
  for (const auto& s : elems) {
    validate(s);
    if (static_cast<int>(s.size()) > maxlen)
      throw ValidityError("block element longer than maxlen");
    for (int v : s)
      if (v >= base) throw ValidityError("block element exceeds the base");
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Block b;
  b.base = base;
  b.maxlen = maxlen;
  b.elems = std::move(elems);
  return b;
}

namespace {

bool contains(const std::vector<Seq>& sorted, const Seq& s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

/// Applies fn to every strictly increasing sequence of length exactly n
/// over {0..base-1}.
void for_each_increasing(int base, int n, const std::function<void(const Seq&)>& fn) {
  Seq current;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(current.size()) == n) {
      fn(current);
      return;
    }
    for (int v = from; v < base; ++v) {
      current.push_back(v);
      rec(v + 1);
      current.pop_back();
    }
  };
  rec(0);
}

int prefixes_in(const std::vector<Seq>& sorted, const Seq& s) {
  int count = 0;
  Seq prefix;
  if (contains(sorted, prefix)) ++count;
  for (int v : s) {
    prefix.push_back(v);
    if (contains(sorted, prefix)) ++count;
  }
  return count;
}

}  // namespace

bool is_block(const Block& b) {
  for (const auto& s : b.elems)
    if (!increasing(s) || static_cast<int>(s.size()) > b.maxlen) return false;
  for (const auto& s : b.elems)
    for (const auto& t : b.elems)
      if (&s != &t && is_proper_prefix(s, t)) return false;
  bool covering = true;
  for_each_increasing(b.base, b.maxlen, [&](const Seq& x) {
    if (prefixes_in(b.elems, x) != 1) covering = false;
  });
  return covering;
}

bool is_barrier(const Block& b) {
  if (!is_block(b)) return false;
  for (const auto& s : b.elems)
    for (const auto& t : b.elems)
      if (&s != &t && subset(s, t) && s != t) return false;
  return true;
}

Block uniform(int base, int n) {
  std::vector<Seq> elems;
  for_each_increasing(base, n, [&](const Seq& s) { elems.push_back(s); });
  return Block::make(base, n, std::move(elems));
}

Block power(const Block& b, int n) {
  if (n < 1) throw ValidityError("block power needs n >= 1");
  if (!is_barrier(b)) throw ValidityError("block power is defined over barriers");
  std::vector<Seq> unions;
  // chains s(0) <| ... <| s(n-1), accumulating the union as we go
  std::function<void(const Seq&, const Seq&, int)> rec = [&](const Seq& last,
                                                             const Seq& acc, int left) {
    if (left == 0) {
      unions.push_back(acc);
      return;
    }
    for (const auto& next : b.elems) {
      if (!triangle(last, next)) continue;
      Seq merged;
      std::set_union(acc.begin(), acc.end(), next.begin(), next.end(),
                     std::back_inserter(merged));
      rec(next, merged, left - 1);
    }
  };
  for (const auto& first : b.elems) rec(first, first, n - 1);
  return Block::make(b.base, n - 1 + b.maxlen, std::move(unions));
}

std::vector<Seq> decompose(const Block& b, const Seq& s) {
  validate(s);
  if (!is_barrier(b)) throw ValidityError("decomposition is defined over barriers");
  // the unique prefix of s in b starts the chain; recurse on the shift
  const Seq* first = nullptr;
  for (const auto& candidate : b.elems)
    if (is_prefix(candidate, s)) {
      first = &candidate;
      break;  // prefix-freeness: at most one
    }
  if (!first) throw ValidityError("sequence has no prefix in the barrier: " + print_seq(s));
  if (*first == s) return {s};
  std::vector<Seq> rest = decompose(b, drop_min(s));
  // the chain condition and the union identity pin the decomposition
  if (!triangle(*first, rest.front()))
    throw ValidityError("sequence does not decompose over the barrier: " + print_seq(s));
  Seq merged;
  std::set_union(first->begin(), first->end(), s.begin() + 1, s.end(),
                 std::back_inserter(merged));
  if (merged != s)
    throw ValidityError("sequence does not decompose over the barrier: " + print_seq(s));
  rest.insert(rest.begin(), *first);
  return rest;
}

// --- derived barrier ---------------------------------------------------------

bool in_tree(const Block& b, const Seq& s) {
  Seq prefix;
  for (std::size_t i = 0; i + 1 <= s.size(); ++i) {
    if (contains(b.elems, prefix)) return false;
    prefix.push_back(s[i]);
  }
  return true;  // s itself may lie in b
}

bool in_tree_star(const Block& b, const Seq& s) {
  // search for r in T with r pointwise <= s
  std::function<bool(std::size_t, Seq&, bool)> rec = [&](std::size_t i, Seq& r,
                                                         bool r_in_b_free) -> bool {
    if (!r_in_b_free) return false;  // a proper prefix of r hit b: r left T
    if (i == s.size()) return true;
    int lo = i == 0 ? 0 : r.back() + 1;
    for (int v = lo; v <= s[i]; ++v) {
      r.push_back(v);
      // proper prefixes of the extended r are the prefixes of the old r,
      // including the old r itself
      bool still_free = !contains(b.elems, Seq(r.begin(), r.end() - 1));
      if (rec(i + 1, r, still_free)) {
        r.pop_back();
        return true;
      }
      r.pop_back();
    }
    return false;
  };
  Seq r;
  return rec(0, r, true);
}

bool star_leaf(const Block& b, const Seq& s) {
  if (!in_tree_star(b, s)) return false;
  Seq extended = s;
  extended.push_back(s.empty() ? 0 : s.back() + 1);
  return !in_tree_star(b, extended);
}

StarResult star(const Block& b) {
  if (!is_block(b)) throw ValidityError("the star construction needs a block");
  StarResult out;
  std::vector<Seq> b_star;
  for (int len = 0; len <= b.maxlen; ++len)
    for_each_increasing(b.base, len, [&](const Seq& s) {
      const bool t = in_tree(b, s);
      if (t) out.tree.push_back(s);
      // collect the pointwise-dominated tree members once for both uses
      bool in_star = false, all_in_b = true;
      std::function<void(std::size_t, Seq&)> scan = [&](std::size_t i, Seq& r) {
        if (i == s.size()) {
          if (in_tree(b, r)) {
            in_star = true;
            if (!contains(b.elems, r)) all_in_b = false;
          }
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
      if (in_star) {
        out.tree_star.push_back(s);
        if (all_in_b && !s.empty()) b_star.push_back(s);
      }
    });
  out.b_star = Block::make(b.base, b.maxlen, std::move(b_star));
  return out;
}

// --- enumeration --------------------------------------------------------------

std::vector<Block> enumerate_blocks(int base, int maxlen) {
  // walk the prefix tree of increasing sequences; at each node either cut
  // (the node joins the family) or keep descending; nodes of maximal length
  // must be cut, short childless nodes may also be skipped entirely
  std::vector<std::vector<Seq>> families{{}};
  std::function<void(const Seq&)> assign = [&](const Seq& node) {
    const bool must_cut = static_cast<int>(node.size()) == maxlen;
    std::vector<Seq> extensions;
    if (!must_cut)
      for (int v = (node.empty() ? 0 : node.back() + 1); v < base; ++v) {
        Seq child = node;
        child.push_back(v);
        extensions.push_back(std::move(child));
      }
    if (must_cut || extensions.empty()) {
      // leaf of the decision tree: cut, or (below maximal length) skip
      std::size_t count = families.size();
      for (std::size_t i = 0; i < count; ++i) {
        if (!must_cut) {
          std::vector<Seq> with_node = families[i];  // keep families[i] as the skip variant
          with_node.push_back(node);
          families.push_back(std::move(with_node));
        } else {
          families[i].push_back(node);
        }
      }
      return;
    }
    // branch: for every current family, either cut here or descend
    std::vector<std::vector<Seq>> with_cut = families;
    for (auto& f : with_cut) f.push_back(node);
    for (const auto& child : extensions) assign(child);
    families.insert(families.end(), with_cut.begin(), with_cut.end());
  };
  // start below the root: the empty sequence itself is not a member
  for (int v = 0; v < base; ++v) assign({v});
  std::vector<Block> out;
  for (auto& f : families) {
    Block b = Block::make(base, maxlen, std::move(f));
    if (is_block(b)) out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [](const Block& x, const Block& y) { return x.elems < y.elems; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Block& x, const Block& y) { return x.elems == y.elems; }),
            out.end());
  return out;
}

// --- text ---------------------------------------------------------------------

Seq parse_seq(std::string_view text) {
  Seq s;
  std::size_t pos = 0;
  auto skip = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
  skip();
  if (pos == text.size()) return s;
  for (;;) {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    s.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos != text.size()) throw ParseError("trailing input after sequence", pos);
  validate(s);
  return s;
}

std::string print_seq(const Seq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace bqo::barrier
