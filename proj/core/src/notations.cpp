#include "bqo/notations.hpp"

#include <algorithm>
#include <functional>

namespace bqo::notations {

// --- omega^alpha ------------------------------------------------------------

void validate_seq(const OmegaSeq& s, int alpha_size) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= alpha_size)
      throw ValidityError("sequence entry out of range");
    if (i > 0 && s[i] > s[i - 1])
      throw ValidityError("sequence must be non-increasing");
  }
}

bool seq_leq(const OmegaSeq& s, const OmegaSeq& t) {
  const std::size_t m = s.size(), n = t.size();
  for (std::size_t i = 0; i < std::min(m, n); ++i) {
    if (s[i] < t[i]) return true;
    if (s[i] > t[i]) return false;
  }
  return m <= n;  // equal on the common prefix
}

std::vector<OmegaSeq> enumerate_seqs(int alpha_size, int max_len) {
  std::vector<OmegaSeq> out;
  OmegaSeq current;
  std::function<void(int)> rec = [&](int max_entry) {
    out.push_back(current);
    if (static_cast<int>(current.size()) == max_len) return;
    for (int v = 0; v <= max_entry; ++v) {
      current.push_back(v);
      rec(v);
      current.pop_back();
    }
  };
  rec(alpha_size - 1);
  std::sort(out.begin(), out.end());
  return out;
}

OmegaSeq parse_seq(std::string_view text, int alpha_size) {
  std::size_t pos = 0;
  auto skip = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
  skip();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  OmegaSeq s;
  skip();
  if (pos < text.size() && text[pos] != ']') {
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
  }
  if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
  ++pos;
  skip();
  if (pos != text.size()) throw ParseError("trailing input after sequence", pos);
  validate_seq(s, alpha_size);
  return s;
}

std::string print_seq(const OmegaSeq& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

// --- epsilon_Omega -----------------------------------------------------------

EpsTerm EpsTerm::eps(int alpha) {
  if (alpha < 0) throw ValidityError("eps index must be >= 0");
  EpsTerm t;
  t.is_eps = true;
  t.alpha = alpha;
  return t;
}

EpsTerm EpsTerm::seq(std::vector<EpsTerm> children) {
  EpsTerm t;
  t.is_eps = false;
  t.children = std::move(children);
  return t;
}

int EpsTerm::cmp(const EpsTerm& o) const {
  if (is_eps != o.is_eps) return is_eps ? -1 : 1;
  if (is_eps) return alpha == o.alpha ? 0 : (alpha < o.alpha ? -1 : 1);
  const std::size_t n = std::min(children.size(), o.children.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = children[i].cmp(o.children[i]); c != 0) return c;
  if (children.size() != o.children.size())
    return children.size() < o.children.size() ? -1 : 1;
  return 0;
}

bool less(const EpsTerm& s, const EpsTerm& t) {
  if (s.is_eps && t.is_eps) return s.alpha < t.alpha;                       // (i')
  if (s.is_eps) return !t.children.empty() && leq(s, t.children[0]);        // (ii')
  if (t.is_eps) return s.children.empty() || less(s.children[0], t);        // (iii')
  const std::size_t m = s.children.size(), n = t.children.size();           // (iv')
  for (std::size_t i = 0; i < std::min(m, n); ++i) {
    if (less(s.children[i], t.children[i])) return true;
    if (s.children[i] != t.children[i]) return false;
  }
  return m < n;
}

bool leq(const EpsTerm& s, const EpsTerm& t) { return s == t || less(s, t); }

namespace {

bool valid_rec(const EpsTerm& t, int omega_size, const char** why) {
  if (t.is_eps) {
    if (t.alpha >= omega_size) {
      *why = "eps index out of range";
      return false;
    }
    return true;
  }
  for (const auto& c : t.children)
    if (!valid_rec(c, omega_size, why)) return false;
  if (t.children.size() == 1) {
    if (t.children[0].is_eps) {
      *why = "a singleton sequence must not wrap an eps-atom";
      return false;
    }
    return true;
  }
  for (std::size_t i = 1; i < t.children.size(); ++i)
    if (!leq(t.children[i], t.children[i - 1])) {
      *why = "sequence children must be non-increasing";
      return false;
    }
  return true;
}

}  // namespace

bool valid(const EpsTerm& t, int omega_size) {
  const char* why = nullptr;
  return valid_rec(t, omega_size, &why);
}

void validate(const EpsTerm& t, int omega_size) {
  const char* why = nullptr;
  if (!valid_rec(t, omega_size, &why)) throw ValidityError(why);
}

int lh(const EpsTerm& t) {
  if (t.is_eps) return 0;
  int total = 1;
  for (const auto& c : t.children) total += lh(c);
  return total;
}

int node_count(const EpsTerm& t) {
  if (t.is_eps) return 1;
  int total = 1;
  for (const auto& c : t.children) total += node_count(c);
  return total;
}

int eps_head(const EpsTerm& t) {
  if (t.is_eps) return t.alpha;
  if (t.children.empty()) return 0;
  return eps_head(t.children[0]);
}

int exp_depth(const EpsTerm& t) {
  if (t.is_eps || t.children.empty()) return 0;
  return exp_depth(t.children[0]) + 1;
}

std::vector<EpsTerm> enumerate_eps(int omega_size, int size_bound) {
  if (size_bound < 1) return {};
  // by_size[s] lists the valid terms with node_count exactly s,
  // sorted ascending in the term order
  std::vector<std::vector<EpsTerm>> by_size(size_bound + 1);
  for (int a = 0; a < omega_size; ++a) by_size[1].push_back(EpsTerm::eps(a));
  by_size[1].push_back(EpsTerm::seq({}));
  for (int s = 2; s <= size_bound; ++s) {
    std::vector<EpsTerm>& out = by_size[s];
    // singletons: one child of size s-1 that is not an eps-atom
    for (const auto& c : by_size[s - 1])
      if (!c.is_eps) out.push_back(EpsTerm::seq({c}));
    // longer sequences: non-increasing children with sizes summing to s-1
    std::vector<EpsTerm> current;
    std::function<void(int)> extend = [&](int budget) {
      if (current.size() >= 2 && budget == 0) out.push_back(EpsTerm::seq(current));
      for (int cs = 1; cs <= budget; ++cs)
        for (const auto& c : by_size[cs]) {
          if (!current.empty() && !leq(c, current.back())) continue;
          current.push_back(c);
          extend(budget - cs);
          current.pop_back();
        }
    };
    extend(s - 1);
  }
  std::vector<EpsTerm> all;
  for (auto& bucket : by_size)
    for (auto& t : bucket) all.push_back(std::move(t));
  std::sort(all.begin(), all.end(),
            [](const EpsTerm& x, const EpsTerm& y) { return x != y && less(x, y); });
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

EpsTerm parse_rec(Cursor& c) {
  if (c.peek() == '(') {
    ++c.pos;
    std::vector<EpsTerm> children;
    while (c.peek() != ')') {
      if (c.peek() == '\0') throw ParseError("expected ')'", c.pos);
      children.push_back(parse_rec(c));
    }
    ++c.pos;
    return EpsTerm::seq(std::move(children));
  }
  if (c.text.substr(c.pos, 3) == "eps") {
    c.pos += 3;
    std::size_t start = c.pos;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
      ++c.pos;
    if (c.pos == start) throw ParseError("expected an index after 'eps'", start);
    return EpsTerm::eps(std::stoi(std::string(c.text.substr(start, c.pos - start))));
  }
  throw ParseError("expected 'eps<i>' or '(...)'", c.pos);
}

}  // namespace

EpsTerm parse_eps(std::string_view text, int omega_size) {
  Cursor c{text};
  EpsTerm t = parse_rec(c);
  c.skip_ws();
  if (c.pos != text.size()) throw ParseError("trailing input after term", c.pos);
  validate(t, omega_size);
  return t;
}

std::string print_eps(const EpsTerm& t) {
  if (t.is_eps) return "eps" + std::to_string(t.alpha);
  std::string out = "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += " ";
    out += print_eps(t.children[i]);
  }
  return out + ")";
}

}  // namespace bqo::notations
