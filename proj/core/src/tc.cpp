#include "bqo/tc.hpp"

namespace bqo::tc {

TCElem TCElem::ur(int i) {
  if (i < 0 || i > 2) throw ValidityError("urelement index must be 0, 1 or 2");
  TCElem e;
  e.kind = Kind::ur;
  e.value = i;
  return e;
}

TCElem TCElem::c1(int alpha) {
  if (alpha < 0) throw ValidityError("ordinal index must be >= 0");
  TCElem e;
  e.kind = Kind::copy1;
  e.value = alpha;
  return e;
}

TCElem TCElem::c2(int alpha) {
  if (alpha < 0) throw ValidityError("ordinal index must be >= 0");
  TCElem e;
  e.kind = Kind::copy2;
  e.value = alpha;
  return e;
}

bool leq(const TCElem& x, const TCElem& y) {
  if (x == y) return true;
  switch (y.kind) {
    case TCElem::Kind::ur:
      return false;  // nothing is strictly below an urelement
    case TCElem::Kind::copy1:
      if (x.kind == TCElem::Kind::ur) return x.value == 0 || x.value == 1;
      return x.kind == TCElem::Kind::copy1 && x.value < y.value;
    case TCElem::Kind::copy2:
      if (x.kind == TCElem::Kind::ur) return x.value == 1 || x.value == 2;
      return x.kind == TCElem::Kind::copy2 && x.value < y.value;
  }
  return false;
}

std::vector<TCElem> members(const TCElem& a) {
  std::vector<TCElem> out;
  switch (a.kind) {
    case TCElem::Kind::ur:
      out.push_back(a);
      break;
    case TCElem::Kind::copy1:
      out.push_back(TCElem::ur(0));
      out.push_back(TCElem::ur(1));
      for (int g = 0; g < a.value; ++g) out.push_back(TCElem::c1(g));
      break;
    case TCElem::Kind::copy2:
      out.push_back(TCElem::ur(1));
      out.push_back(TCElem::ur(2));
      for (int g = 0; g < a.value; ++g) out.push_back(TCElem::c2(g));
      break;
  }
  return out;
}

TCElem chi(const TCElem& a, const TCElem& b) {
  if (leq(a, b)) return a;  // unconstrained case
  if (a.kind == TCElem::Kind::ur) return a;
  if (a.kind == TCElem::Kind::copy1) {
    switch (b.kind) {
      case TCElem::Kind::ur:
        return b.value == 1 ? TCElem::ur(0) : TCElem::ur(1);
      case TCElem::Kind::copy1:
        return b;  // a !<= b forces b.value < a.value, so b is in E(a)
      case TCElem::Kind::copy2:
        return TCElem::ur(0);
    }
  }
  switch (b.kind) {
    case TCElem::Kind::ur:
      return b.value == 1 ? TCElem::ur(2) : TCElem::ur(1);
    case TCElem::Kind::copy2:
      return b;
    case TCElem::Kind::copy1:
      return TCElem::ur(2);
    default:
      break;
  }
  return a;
}

std::optional<int> rank(const TCElem& a) {
  if (a.kind == TCElem::Kind::ur) return std::nullopt;
  return a.value;
}

bool rank_leq(const std::optional<int>& x, const std::optional<int>& y) {
  if (!x.has_value()) return true;
  if (!y.has_value()) return false;
  return *x <= *y;
}

std::vector<TCElem> enumerate(int omega) {
  std::vector<TCElem> out;
  for (int i = 0; i < 3; ++i) out.push_back(TCElem::ur(i));
  for (int a = 0; a < omega; ++a) out.push_back(TCElem::c1(a));
  for (int a = 0; a < omega; ++a) out.push_back(TCElem::c2(a));
  return out;
}

TCElem parse(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw ParseError("empty element", 0);
  text = text.substr(begin, end - begin + 1);
  if (text == "u0") return TCElem::ur(0);
  if (text == "u1") return TCElem::ur(1);
  if (text == "u2") return TCElem::ur(2);
  if (text.size() >= 3 && (text[0] == 'a' || text[0] == 'b') && text[1] == ':') {
    for (std::size_t i = 2; i < text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected an ordinal index", begin + i);
    int alpha = std::stoi(std::string(text.substr(2)));
    return text[0] == 'a' ? TCElem::c1(alpha) : TCElem::c2(alpha);
  }
  throw ParseError("expected u0|u1|u2, a:<i> or b:<i>", begin);
}

std::string print(const TCElem& e) {
  switch (e.kind) {
    case TCElem::Kind::ur:
      return "u" + std::to_string(e.value);
    case TCElem::Kind::copy1:
      return "a:" + std::to_string(e.value);
    case TCElem::Kind::copy2:
      return "b:" + std::to_string(e.value);
  }
  return "?";
}

}  // namespace bqo::tc
