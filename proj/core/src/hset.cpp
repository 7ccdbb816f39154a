#include "bqo/hset.hpp"

#include <algorithm>

namespace bqo::hset {

HTerm HTerm::ur(qo::Elem q) {
  HTerm t;
  t.is_set = false;
  t.atom = std::move(q);
  return t;
}

HTerm HTerm::set(std::vector<HTerm> members) {
  HTerm t;
  t.is_set = true;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  t.elems = std::move(members);
  return t;
}

int HTerm::cmp(const HTerm& other) const {
  if (is_set != other.is_set) return is_set ? 1 : -1;
  if (!is_set) return atom.cmp(other.atom);
  const std::size_t n = std::min(elems.size(), other.elems.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = elems[i].cmp(other.elems[i]); c != 0) return c;
  if (elems.size() != other.elems.size()) return elems.size() < other.elems.size() ? -1 : 1;
  return 0;
}

bool leq(const qo::OrderSpec& q, const HTerm& x, const HTerm& y) {
  if (!x.is_set && !y.is_set) return qo::leq(q, x.atom, y.atom);
  if (!x.is_set) {  // urelement vs set: below some member
    for (const auto& m : y.elems)
      if (leq(q, x, m)) return true;
    return false;
  }
  if (!y.is_set) {  // set vs urelement: all members below
    for (const auto& m : x.elems)
      if (!leq(q, m, y)) return false;
    return true;
  }
  for (const auto& a : x.elems) {
    bool dominated = false;
    for (const auto& b : y.elems)
      if (leq(q, a, b)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

namespace {

void collect_support(const HTerm& t, std::vector<qo::Elem>& out) {
  if (!t.is_set) {
    out.push_back(t.atom);
    return;
  }
  for (const auto& m : t.elems) collect_support(m, out);
}

}  // namespace

std::vector<qo::Elem> support(const HTerm& t) {
  std::vector<qo::Elem> out;
  collect_support(t, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int height(const HTerm& t) {
  if (!t.is_set) return 0;
  int h = 0;
  for (const auto& m : t.elems) h = std::max(h, height(m) + 1);
  return h;
}

HTerm select_witness(const qo::OrderSpec& q, const HTerm& a, const HTerm& b) {
  if (!a.is_set) throw ContractError("select_witness: first argument must be a set");
  if (leq(q, a, b)) throw ContractError("select_witness called with a <= b");
  for (const auto& x : a.elems) {
    bool escapes;
    if (!b.is_set) {
      escapes = !leq(q, x, b);
    } else {
      escapes = true;
      for (const auto& y : b.elems)
        if (leq(q, x, y)) {
          escapes = false;
          break;
        }
    }
    if (escapes) return x;
  }
  throw ContractError("select_witness: no child qualifies");  // unreachable when a !<= b
}

std::vector<HTerm> enumerate(const qo::OrderSpec& q, int q_bound, int ht_bound,
                             int max_children) {
  std::vector<HTerm> layer;
  for (auto& e : qo::enumerate(q, q_bound)) layer.push_back(HTerm::ur(std::move(e)));
  layer.push_back(HTerm::set({}));
  std::sort(layer.begin(), layer.end());
  for (int h = 1; h <= ht_bound; ++h) {
    // sets with members from the previous layer; the layer is cumulative
    std::vector<HTerm> next = layer;
    std::vector<HTerm> current;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      next.push_back(HTerm::set(current));
      if (static_cast<int>(current.size()) == max_children) return;
      for (std::size_t i = from; i < layer.size(); ++i) {
        current.push_back(layer[i]);
        rec(i + 1);
        current.pop_back();
      }
    };
    rec(0);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  return layer;
}

// --- text ------------------------------------------------------------------

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
};

HTerm parse_rec(const qo::OrderSpec& q, Cursor& c) {
  // Pf-shaped urelements would collide with the `{...}` set syntax.
  if (q.kind == qo::OrderSpec::Kind::pf)
    throw ValidityError("hereditarily finite terms over Pf(...) urelements have no text form");
  if (c.peek() == '{') {
    ++c.pos;
    std::vector<HTerm> members;
    if (c.peek() != '}') {
      members.push_back(parse_rec(q, c));
      while (c.peek() == ',') {
        ++c.pos;
        members.push_back(parse_rec(q, c));
      }
    }
    if (c.peek() != '}') throw ParseError("expected '}'", c.pos);
    ++c.pos;
    return HTerm::set(std::move(members));
  }
  if (q.is_atom()) {
    char lead = c.peek();
    if (lead != 'u' && lead != 'e')
      throw ParseError("expected an urelement 'u<i>'/'e<i>' or a set", c.pos);
    ++c.pos;
    std::size_t start = c.pos;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
      ++c.pos;
    if (c.pos == start) throw ParseError("expected an urelement index", start);
    int idx = std::stoi(std::string(c.text.substr(start, c.pos - start)));
    auto e = qo::Elem::atom(idx);
    if (!qo::well_shaped(q, e))
      throw ValidityError("urelement index out of range: " +
                          std::string(c.text.substr(start - 1, c.pos - start + 1)));
    return HTerm::ur(e);
  }
  // composite Q: the urelement is written as a bare Q-element term, which
  // extends to the first unbalanced ',' '}' ')' '>' or the end of input
  std::size_t depth = 0, end = c.pos;
  for (; end < c.text.size(); ++end) {
    char ch = c.text[end];
    if (ch == '(' || ch == '{' || ch == '<') ++depth;
    if (ch == ')' || ch == '}' || ch == '>') {
      if (depth == 0) break;
      --depth;
    }
    if (ch == ',' && depth == 0) break;
  }
  auto e = qo::parse_elem(q, c.text.substr(c.pos, end - c.pos));
  c.pos = end;
  return HTerm::ur(e);
}

}  // namespace

HTerm parse(const qo::OrderSpec& q, std::string_view text) {
  Cursor c{text};
  HTerm t = parse_rec(q, c);
  c.skip_ws();
  if (c.pos != text.size()) throw ParseError("trailing input after term", c.pos);
  return t;
}

std::string print(const qo::OrderSpec& q, const HTerm& t) {
  if (q.kind == qo::OrderSpec::Kind::pf)
    throw ValidityError("hereditarily finite terms over Pf(...) urelements have no text form");
  if (!t.is_set) {
    if (q.is_atom()) {
      const char* prefix = q.kind == qo::OrderSpec::Kind::table ? "e" : "u";
      return prefix + std::to_string(t.atom.a);
    }
    return qo::print_elem(q, t.atom);
  }
  std::string out = "{";
  for (std::size_t i = 0; i < t.elems.size(); ++i) {
    if (i) out += ",";
    out += print(q, t.elems[i]);
  }
  return out + "}";
}

}  // namespace bqo::hset
