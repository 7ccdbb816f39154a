#include "bqo/order.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bqo::qo {

namespace {

SpecPtr make(OrderSpec s) { return std::make_shared<const OrderSpec>(std::move(s)); }

void require(bool ok, const char* what) {
  if (!ok) throw ValidityError(what);
}

}  // namespace

SpecPtr chain(int k) {
  require(k >= 0, "chain size must be >= 0");
  OrderSpec s;
  s.kind = OrderSpec::Kind::chain;
  s.size = k;
  return make(std::move(s));
}

SpecPtr antichain(int k) {
  require(k >= 0, "antichain size must be >= 0");
  OrderSpec s;
  s.kind = OrderSpec::Kind::antichain;
  s.size = k;
  return make(std::move(s));
}

SpecPtr omega() {
  OrderSpec s;
  s.kind = OrderSpec::Kind::omega;
  return make(std::move(s));
}

SpecPtr table(std::vector<std::vector<bool>> rel, std::string ref) {
  const int n = static_cast<int>(rel.size());
  for (const auto& row : rel)
    require(static_cast<int>(row.size()) == n, "table relation must be square");
  for (int i = 0; i < n; ++i)
    require(rel[i][i], "table relation must be reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel[i][j])
        for (int k = 0; k < n; ++k)
          if (rel[j][k]) require(rel[i][k], "table relation must be transitive");
  OrderSpec s;
  s.kind = OrderSpec::Kind::table;
  s.size = n;
  s.rel = std::move(rel);
  s.table_ref = std::move(ref);
  return make(std::move(s));
}

SpecPtr sum(SpecPtr a, SpecPtr b) {
  OrderSpec s;
  s.kind = OrderSpec::Kind::sum;
  s.left = std::move(a);
  s.right = std::move(b);
  return make(std::move(s));
}

SpecPtr product(SpecPtr a, SpecPtr b) {
  OrderSpec s;
  s.kind = OrderSpec::Kind::product;
  s.left = std::move(a);
  s.right = std::move(b);
  return make(std::move(s));
}

SpecPtr pf(SpecPtr a) {
  OrderSpec s;
  s.kind = OrderSpec::Kind::pf;
  s.left = std::move(a);
  return make(std::move(s));
}

SpecPtr omega2(SpecPtr a) {
  OrderSpec s;
  s.kind = OrderSpec::Kind::omega2;
  s.left = std::move(a);
  return make(std::move(s));
}

SpecPtr one_plus(SpecPtr a) {
  OrderSpec s;
  s.kind = OrderSpec::Kind::one_plus;
  s.left = std::move(a);
  return make(std::move(s));
}

// --- elements --------------------------------------------------------------

Elem Elem::atom(int index) {
  Elem e;
  e.kind = Kind::atom;
  e.a = index;
  return e;
}

Elem Elem::in(int tag, Elem inner) {
  Elem e;
  e.kind = Kind::tagged;
  e.a = tag;
  e.sub.push_back(std::move(inner));
  return e;
}

Elem Elem::pair(Elem first, Elem second) {
  Elem e;
  e.kind = Kind::pair;
  e.sub.push_back(std::move(first));
  e.sub.push_back(std::move(second));
  return e;
}

Elem Elem::set(std::vector<Elem> members) {
  Elem e;
  e.kind = Kind::set;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  e.sub = std::move(members);
  return e;
}

Elem Elem::triple(Elem alpha, int m, int n) {
  Elem e;
  e.kind = Kind::triple;
  e.a = m;
  e.b = n;
  e.sub.push_back(std::move(alpha));
  return e;
}

Elem Elem::bottom() {
  Elem e;
  e.kind = Kind::bottom;
  return e;
}

Elem Elem::lifted(Elem inner) {
  Elem e;
  e.kind = Kind::lifted;
  e.sub.push_back(std::move(inner));
  return e;
}

int Elem::cmp(const Elem& other) const {
  if (kind != other.kind) return kind < other.kind ? -1 : 1;
  if (a != other.a) return a < other.a ? -1 : 1;
  if (b != other.b) return b < other.b ? -1 : 1;
  const std::size_t n = std::min(sub.size(), other.sub.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = sub[i].cmp(other.sub[i]); c != 0) return c;
  if (sub.size() != other.sub.size()) return sub.size() < other.sub.size() ? -1 : 1;
  return 0;
}

// --- shape -----------------------------------------------------------------

bool well_shaped(const OrderSpec& spec, const Elem& e) {
  switch (spec.kind) {
    case OrderSpec::Kind::chain:
    case OrderSpec::Kind::antichain:
    case OrderSpec::Kind::table:
      return e.kind == Elem::Kind::atom && e.a >= 0 && e.a < spec.size;
    case OrderSpec::Kind::omega:
      return e.kind == Elem::Kind::atom && e.a >= 0;
    case OrderSpec::Kind::sum:
      return e.kind == Elem::Kind::tagged && (e.a == 0 || e.a == 1) && e.sub.size() == 1 &&
             well_shaped(e.a == 0 ? *spec.left : *spec.right, e.sub[0]);
    case OrderSpec::Kind::product:
      return e.kind == Elem::Kind::pair && e.sub.size() == 2 &&
             well_shaped(*spec.left, e.sub[0]) && well_shaped(*spec.right, e.sub[1]);
    case OrderSpec::Kind::pf: {
      if (e.kind != Elem::Kind::set) return false;
      for (std::size_t i = 0; i + 1 < e.sub.size(); ++i)
        if (!(e.sub[i] < e.sub[i + 1])) return false;  // canonical form
      for (const auto& x : e.sub)
        if (!well_shaped(*spec.left, x)) return false;
      return true;
    }
    case OrderSpec::Kind::omega2:
      return e.kind == Elem::Kind::triple && e.sub.size() == 1 && e.a >= 0 && e.b >= 0 &&
             well_shaped(*spec.left, e.sub[0]);
    case OrderSpec::Kind::one_plus:
      if (e.kind == Elem::Kind::bottom) return e.sub.empty();
      return e.kind == Elem::Kind::lifted && e.sub.size() == 1 &&
             well_shaped(*spec.left, e.sub[0]);
  }
  return false;
}

void check_shape(const OrderSpec& spec, const Elem& e) {
  if (!well_shaped(spec, e))
    throw ShapeError("malformed element for order " + print_spec(spec));
}

// --- order -----------------------------------------------------------------

namespace {

bool leq_unchecked(const OrderSpec& spec, const Elem& x, const Elem& y) {
  switch (spec.kind) {
    case OrderSpec::Kind::chain:
    case OrderSpec::Kind::omega:
      return x.a <= y.a;
    case OrderSpec::Kind::antichain:
      return x.a == y.a;
    case OrderSpec::Kind::table:
      return spec.rel[x.a][y.a];
    case OrderSpec::Kind::sum:
      return x.a == y.a &&
             leq_unchecked(x.a == 0 ? *spec.left : *spec.right, x.sub[0], y.sub[0]);
    case OrderSpec::Kind::product:
      return leq_unchecked(*spec.left, x.sub[0], y.sub[0]) &&
             leq_unchecked(*spec.right, x.sub[1], y.sub[1]);
    case OrderSpec::Kind::pf:
      for (const auto& p : x.sub) {
        bool dominated = false;
        for (const auto& q : y.sub)
          if (leq_unchecked(*spec.left, p, q)) {
            dominated = true;
            break;
          }
        if (!dominated) return false;
      }
      return true;
    case OrderSpec::Kind::omega2: {
      const bool le = leq_unchecked(*spec.left, x.sub[0], y.sub[0]);
      const bool ge = leq_unchecked(*spec.left, y.sub[0], x.sub[0]);
      if (le && !ge) return true;   // strictly below in the first component
      if (!le || !ge) return false; // incomparable components
      if (x.a != y.a) return x.a < y.a;
      return x.b <= y.b;
    }
    case OrderSpec::Kind::one_plus:
      if (x.kind == Elem::Kind::bottom) return true;
      if (y.kind == Elem::Kind::bottom) return false;
      return leq_unchecked(*spec.left, x.sub[0], y.sub[0]);
  }
  return false;
}

}  // namespace

bool leq(const OrderSpec& spec, const Elem& x, const Elem& y) {
  check_shape(spec, x);
  check_shape(spec, y);
  return leq_unchecked(spec, x, y);
}

bool equivalent(const OrderSpec& spec, const Elem& x, const Elem& y) {
  return leq(spec, x, y) && leq(spec, y, x);
}

bool strictly_less(const OrderSpec& spec, const Elem& x, const Elem& y) {
  return leq(spec, x, y) && !leq(spec, y, x);
}

// --- enumeration -----------------------------------------------------------

namespace {

std::vector<Elem> subsets_up_to(const std::vector<Elem>& base, std::size_t max_size) {
  std::vector<Elem> out;
  std::vector<Elem> current;
  // Depth-first over sorted base; members stay sorted, so Elem::set keeps them.
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back(Elem::set(current));
    if (current.size() == max_size) return;
    for (std::size_t i = from; i < base.size(); ++i) {
      current.push_back(base[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Elem> enumerate_rec(const OrderSpec& spec, int bound, bool whole,
                                std::size_t limit) {
  std::vector<Elem> out;
  auto guard = [&](std::size_t extra) {
    if (out.size() + extra > limit)
      throw ValidityError("enumeration exceeds element limit");
  };
  switch (spec.kind) {
    case OrderSpec::Kind::chain:
    case OrderSpec::Kind::antichain:
    case OrderSpec::Kind::table: {
      int n = whole ? spec.size : std::min(spec.size, bound);
      guard(n);
      for (int i = 0; i < n; ++i) out.push_back(Elem::atom(i));
      break;
    }
    case OrderSpec::Kind::omega: {
      if (whole) throw ValidityError("omega is not finite");
      guard(bound);
      for (int i = 0; i < bound; ++i) out.push_back(Elem::atom(i));
      break;
    }
    case OrderSpec::Kind::sum: {
      for (auto& x : enumerate_rec(*spec.left, bound, whole, limit)) {
        guard(1);
        out.push_back(Elem::in(0, std::move(x)));
      }
      for (auto& y : enumerate_rec(*spec.right, bound, whole, limit)) {
        guard(1);
        out.push_back(Elem::in(1, std::move(y)));
      }
      break;
    }
    case OrderSpec::Kind::product: {
      auto xs = enumerate_rec(*spec.left, bound, whole, limit);
      auto ys = enumerate_rec(*spec.right, bound, whole, limit);
      guard(xs.size() * ys.size());
      for (const auto& x : xs)
        for (const auto& y : ys) out.push_back(Elem::pair(x, y));
      break;
    }
    case OrderSpec::Kind::pf: {
      auto base = enumerate_rec(*spec.left, bound, whole, limit);
      std::size_t cap = whole ? base.size() : static_cast<std::size_t>(bound);
      if (whole && base.size() > 20)
        throw ValidityError("Pf base too large for full enumeration");
      out = subsets_up_to(base, cap);
      guard(0);
      break;
    }
    case OrderSpec::Kind::omega2: {
      if (whole) throw ValidityError("w2.(...) is not finite");
      auto alphas = enumerate_rec(*spec.left, bound, whole, limit);
      guard(alphas.size() * bound * bound);
      for (const auto& alpha : alphas)
        for (int m = 0; m < bound; ++m)
          for (int n = 0; n < bound; ++n) out.push_back(Elem::triple(alpha, m, n));
      break;
    }
    case OrderSpec::Kind::one_plus: {
      out.push_back(Elem::bottom());
      for (auto& x : enumerate_rec(*spec.left, bound, whole, limit)) {
        guard(1);
        out.push_back(Elem::lifted(std::move(x)));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Elem> enumerate(const OrderSpec& spec, int bound) {
  require(bound >= 0, "enumeration bound must be >= 0");
  return enumerate_rec(spec, bound, false, 1u << 22);
}

bool finite(const OrderSpec& spec) {
  switch (spec.kind) {
    case OrderSpec::Kind::chain:
    case OrderSpec::Kind::antichain:
    case OrderSpec::Kind::table:
      return true;
    case OrderSpec::Kind::omega:
    case OrderSpec::Kind::omega2:
      return false;
    case OrderSpec::Kind::sum:
    case OrderSpec::Kind::product:
      return finite(*spec.left) && finite(*spec.right);
    case OrderSpec::Kind::pf:
    case OrderSpec::Kind::one_plus:
      return finite(*spec.left);
  }
  return false;
}

std::vector<Elem> enumerate_all(const OrderSpec& spec, std::size_t limit) {
  if (!finite(spec)) throw ValidityError("order is not finite: " + print_spec(spec));
  return enumerate_rec(spec, 0, true, limit);
}

Elem witness_p(const OrderSpec& pf_spec, const Elem& a, const Elem& b) {
  if (pf_spec.kind != OrderSpec::Kind::pf)
    throw ShapeError("witness_p needs a Pf(...) order");
  check_shape(pf_spec, a);
  check_shape(pf_spec, b);
  if (leq_unchecked(pf_spec, a, b))
    throw ContractError("witness_p called with a <= b");
  const OrderSpec& q = *pf_spec.left;
  for (const auto& x : a.sub) {
    bool escapes = true;
    for (const auto& y : b.sub)
      if (leq_unchecked(q, x, y)) {
        escapes = false;
        break;
      }
    if (escapes) return x;
  }
  throw ContractError("witness_p: no witness found");  // unreachable when a !<= b
}

// --- spec grammar ----------------------------------------------------------

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool try_eat(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", start);
    return std::stoi(std::string(text.substr(start, pos - start)));
  }
};

std::vector<std::vector<bool>> load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidityError("cannot open table file: " + path);
  nlohmann::json j;
  in >> j;
  if (!j.contains("n") || !j.contains("leq"))
    throw ValidityError("table file needs fields \"n\" and \"leq\": " + path);
  const int n = j["n"].get<int>();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) rel[i][i] = true;
  for (const auto& p : j["leq"]) {
    const int i = p.at(0).get<int>(), k = p.at(1).get<int>();
    if (i < 0 || i >= n || k < 0 || k >= n)
      throw ValidityError("table pair out of range in " + path);
    rel[i][k] = true;
  }
  return rel;
}

SpecPtr parse_sum(Cursor& c, const TableLoader& loader);

SpecPtr parse_factor(Cursor& c, const TableLoader& loader) {
  c.skip_ws();
  if (c.try_eat("chain:")) return chain(c.integer());
  if (c.try_eat("antichain:")) return antichain(c.integer());
  if (c.try_eat("omega")) return omega();
  if (c.try_eat("Pf(")) {
    auto inner = parse_sum(c, loader);
    c.expect(')');
    return pf(std::move(inner));
  }
  if (c.try_eat("w2.(")) {
    auto inner = parse_sum(c, loader);
    c.expect(')');
    return omega2(std::move(inner));
  }
  if (c.try_eat("1+(")) {
    auto inner = parse_sum(c, loader);
    c.expect(')');
    return one_plus(std::move(inner));
  }
  if (c.try_eat("table@")) {
    std::size_t start = c.pos;
    while (c.pos < c.text.size() && !std::strchr(" \t)+*,", c.text[c.pos])) ++c.pos;
    std::string path(c.text.substr(start, c.pos - start));
    if (path.empty()) throw ParseError("expected a table path", start);
    return table(loader(path), "table@" + path);
  }
  if (c.try_eat("(")) {
    auto inner = parse_sum(c, loader);
    c.expect(')');
    return inner;
  }
  throw ParseError("expected an order expression", c.pos);
}

SpecPtr parse_product(Cursor& c, const TableLoader& loader) {
  auto spec = parse_factor(c, loader);
  while (c.peek() == '*') {
    c.expect('*');
    spec = product(std::move(spec), parse_factor(c, loader));
  }
  return spec;
}

SpecPtr parse_sum(Cursor& c, const TableLoader& loader) {
  auto spec = parse_product(c, loader);
  while (c.peek() == '+') {
    c.expect('+');
    spec = sum(std::move(spec), parse_product(c, loader));
  }
  return spec;
}

}  // namespace

SpecPtr parse_spec(std::string_view text, const TableLoader& loader) {
  Cursor c{text};
  auto spec = parse_sum(c, loader);
  if (!c.eof()) throw ParseError("trailing input after order expression", c.pos);
  return spec;
}

SpecPtr parse_spec(std::string_view text) { return parse_spec(text, load_table_file); }

std::string print_spec(const OrderSpec& spec) {
  switch (spec.kind) {
    case OrderSpec::Kind::chain:
      return "chain:" + std::to_string(spec.size);
    case OrderSpec::Kind::antichain:
      return "antichain:" + std::to_string(spec.size);
    case OrderSpec::Kind::omega:
      return "omega";
    case OrderSpec::Kind::table:
      return spec.table_ref;
    case OrderSpec::Kind::sum:
      return print_spec(*spec.left) + "+" + print_spec(*spec.right);
    case OrderSpec::Kind::product: {
      auto wrap = [](const OrderSpec& s) {
        std::string t = print_spec(s);
        return s.kind == OrderSpec::Kind::sum ? "(" + t + ")" : t;
      };
      return wrap(*spec.left) + "*" + wrap(*spec.right);
    }
    case OrderSpec::Kind::pf:
      return "Pf(" + print_spec(*spec.left) + ")";
    case OrderSpec::Kind::omega2:
      return "w2.(" + print_spec(*spec.left) + ")";
    case OrderSpec::Kind::one_plus:
      return "1+(" + print_spec(*spec.left) + ")";
  }
  return "?";
}

// --- element grammar -------------------------------------------------------

namespace {

Elem parse_elem_rec(const OrderSpec& spec, Cursor& c) {
  switch (spec.kind) {
    case OrderSpec::Kind::chain:
    case OrderSpec::Kind::antichain:
    case OrderSpec::Kind::omega:
    case OrderSpec::Kind::table:
      return Elem::atom(c.integer());
    case OrderSpec::Kind::sum: {
      c.expect('<');
      int tag = c.integer();
      if (tag != 0 && tag != 1) throw ParseError("sum tag must be 0 or 1", c.pos);
      c.expect(',');
      Elem inner = parse_elem_rec(tag == 0 ? *spec.left : *spec.right, c);
      c.expect('>');
      return Elem::in(tag, std::move(inner));
    }
    case OrderSpec::Kind::product: {
      c.expect('(');
      Elem first = parse_elem_rec(*spec.left, c);
      c.expect(',');
      Elem second = parse_elem_rec(*spec.right, c);
      c.expect(')');
      return Elem::pair(std::move(first), std::move(second));
    }
    case OrderSpec::Kind::pf: {
      c.expect('{');
      std::vector<Elem> members;
      if (c.peek() != '}') {
        members.push_back(parse_elem_rec(*spec.left, c));
        while (c.peek() == ',') {
          c.expect(',');
          members.push_back(parse_elem_rec(*spec.left, c));
        }
      }
      c.expect('}');
      return Elem::set(std::move(members));
    }
    case OrderSpec::Kind::omega2: {
      c.expect('(');
      Elem alpha = parse_elem_rec(*spec.left, c);
      c.expect(',');
      int m = c.integer();
      c.expect(',');
      int n = c.integer();
      c.expect(')');
      return Elem::triple(std::move(alpha), m, n);
    }
    case OrderSpec::Kind::one_plus: {
      if (c.try_eat("bot")) return Elem::bottom();
      if (c.try_eat("up(")) {
        Elem inner = parse_elem_rec(*spec.left, c);
        c.expect(')');
        return Elem::lifted(std::move(inner));
      }
      throw ParseError("expected 'bot' or 'up(...)'", c.pos);
    }
  }
  throw ParseError("unhandled order shape", c.pos);
}

}  // namespace

Elem parse_elem(const OrderSpec& spec, std::string_view text) {
  Cursor c{text};
  Elem e = parse_elem_rec(spec, c);
  if (!c.eof()) throw ParseError("trailing input after element", c.pos);
  check_shape(spec, e);
  return e;
}

std::string print_elem(const OrderSpec& spec, const Elem& e) {
  check_shape(spec, e);
  switch (spec.kind) {
    case OrderSpec::Kind::chain:
    case OrderSpec::Kind::antichain:
    case OrderSpec::Kind::omega:
    case OrderSpec::Kind::table:
      return std::to_string(e.a);
    case OrderSpec::Kind::sum:
      return "<" + std::to_string(e.a) + "," +
             print_elem(e.a == 0 ? *spec.left : *spec.right, e.sub[0]) + ">";
    case OrderSpec::Kind::product:
      return "(" + print_elem(*spec.left, e.sub[0]) + "," +
             print_elem(*spec.right, e.sub[1]) + ")";
    case OrderSpec::Kind::pf: {
      std::string out = "{";
      for (std::size_t i = 0; i < e.sub.size(); ++i) {
        if (i) out += ",";
        out += print_elem(*spec.left, e.sub[i]);
      }
      return out + "}";
    }
    case OrderSpec::Kind::omega2:
      return "(" + print_elem(*spec.left, e.sub[0]) + "," + std::to_string(e.a) + "," +
             std::to_string(e.b) + ")";
    case OrderSpec::Kind::one_plus:
      if (e.kind == Elem::Kind::bottom) return "bot";
      return "up(" + print_elem(*spec.left, e.sub[0]) + ")";
  }
  return "?";
}

}  // namespace bqo::qo
