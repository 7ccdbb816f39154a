#include "bqo/structure.hpp"

namespace bqo::structure {

Structure Structure::order(qo::SpecPtr s) {
  Structure out;
  out.kind = Kind::order;
  out.spec = std::move(s);
  return out;
}

Structure Structure::tc(int omega) {
  Structure out;
  out.kind = Kind::tc;
  out.omega = omega;
  return out;
}

Structure Structure::hterm(qo::SpecPtr labels) {
  Structure out;
  out.kind = Kind::hterm;
  out.spec = std::move(labels);
  return out;
}

Structure Structure::tree_strong(qo::SpecPtr labels) {
  Structure out;
  out.kind = Kind::tree_strong;
  out.spec = std::move(labels);
  return out;
}

Structure Structure::tree_weak(qo::SpecPtr labels) {
  Structure out;
  out.kind = Kind::tree_weak;
  out.spec = std::move(labels);
  return out;
}

Structure Structure::eps(int omega) {
  Structure out;
  out.kind = Kind::eps;
  out.omega = omega;
  return out;
}

Structure Structure::wseq(int omega) {
  Structure out;
  out.kind = Kind::wseq;
  out.omega = omega;
  return out;
}

namespace {

int parse_size(std::string_view text) {
  if (text.empty()) throw ParseError("expected a size after '@'", 0);
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected a numeric size", 0);
  return std::stoi(std::string(text));
}

}  // namespace

Structure Structure::parse(std::string_view text) {
  auto after = [&](std::string_view prefix) { return text.substr(prefix.size()); };
  if (text.rfind("tc@", 0) == 0) return tc(parse_size(after("tc@")));
  if (text.rfind("eps@", 0) == 0) return eps(parse_size(after("eps@")));
  if (text.rfind("wseq@", 0) == 0) return wseq(parse_size(after("wseq@")));
  if (text.rfind("hterm@", 0) == 0) return hterm(qo::parse_spec(after("hterm@")));
  if (text.rfind("tree-s@", 0) == 0) return tree_strong(qo::parse_spec(after("tree-s@")));
  if (text.rfind("tree-w@", 0) == 0) return tree_weak(qo::parse_spec(after("tree-w@")));
  return order(qo::parse_spec(text));
}

std::string Structure::to_string() const {
  switch (kind) {
    case Kind::order:
      return qo::print_spec(*spec);
    case Kind::tc:
      return "tc@" + std::to_string(omega);
    case Kind::hterm:
      return "hterm@" + qo::print_spec(*spec);
    case Kind::tree_strong:
      return "tree-s@" + qo::print_spec(*spec);
    case Kind::tree_weak:
      return "tree-w@" + qo::print_spec(*spec);
    case Kind::eps:
      return "eps@" + std::to_string(omega);
    case Kind::wseq:
      return "wseq@" + std::to_string(omega);
  }
  return "?";
}

Value parse_value(const Structure& s, std::string_view text) {
  switch (s.kind) {
    case Structure::Kind::order:
      return qo::parse_elem(*s.spec, text);
    case Structure::Kind::tc: {
      auto e = tc::parse(text);
      if (!e.is_urelement() && e.value >= s.omega)
        throw ValidityError("ordinal index exceeds the omega parameter");
      return e;
    }
    case Structure::Kind::hterm:
      return hset::parse(*s.spec, text);
    case Structure::Kind::tree_strong:
    case Structure::Kind::tree_weak:
      return trees::parse(*s.spec, text);
    case Structure::Kind::eps:
      return notations::parse_eps(text, s.omega);
    case Structure::Kind::wseq:
      return notations::parse_seq(text, s.omega);
  }
  throw ParseError("unhandled structure", 0);
}

std::string print_value(const Structure& s, const Value& v) {
  switch (s.kind) {
    case Structure::Kind::order:
      return qo::print_elem(*s.spec, std::get<qo::Elem>(v));
    case Structure::Kind::tc:
      return tc::print(std::get<tc::TCElem>(v));
    case Structure::Kind::hterm:
      return hset::print(*s.spec, std::get<hset::HTerm>(v));
    case Structure::Kind::tree_strong:
    case Structure::Kind::tree_weak:
      return trees::print(*s.spec, std::get<trees::QTree>(v));
    case Structure::Kind::eps:
      return notations::print_eps(std::get<notations::EpsTerm>(v));
    case Structure::Kind::wseq:
      return notations::print_seq(std::get<notations::OmegaSeq>(v));
  }
  return "?";
}

bool leq(const Structure& s, const Value& x, const Value& y) {
  try {
    switch (s.kind) {
      case Structure::Kind::order:
        return qo::leq(*s.spec, std::get<qo::Elem>(x), std::get<qo::Elem>(y));
      case Structure::Kind::tc:
        return tc::leq(std::get<tc::TCElem>(x), std::get<tc::TCElem>(y));
      case Structure::Kind::hterm:
        return hset::leq(*s.spec, std::get<hset::HTerm>(x), std::get<hset::HTerm>(y));
      case Structure::Kind::tree_strong:
        return trees::leq_strong(*s.spec, std::get<trees::QTree>(x),
                                 std::get<trees::QTree>(y));
      case Structure::Kind::tree_weak:
        return trees::leq_weak(*s.spec, std::get<trees::QTree>(x),
                               std::get<trees::QTree>(y));
      case Structure::Kind::eps:
        return notations::leq(std::get<notations::EpsTerm>(x),
                              std::get<notations::EpsTerm>(y));
      case Structure::Kind::wseq:
        return notations::seq_leq(std::get<notations::OmegaSeq>(x),
                                  std::get<notations::OmegaSeq>(y));
    }
  } catch (const std::bad_variant_access&) {
    throw ShapeError("value does not belong to structure " + s.to_string());
  }
  throw ShapeError("unhandled structure");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::LE:
      return "LE";
    case Verdict::GE:
      return "GE";
    case Verdict::EQUIV:
      return "EQUIV";
    case Verdict::INCOMPARABLE:
      return "INCOMPARABLE";
  }
  return "?";
}

Verdict compare(const Structure& s, const Value& x, const Value& y) {
  const bool below = leq(s, x, y);
  const bool above = leq(s, y, x);
  if (below && above) return Verdict::EQUIV;
  if (below) return Verdict::LE;
  if (above) return Verdict::GE;
  return Verdict::INCOMPARABLE;
}

}  // namespace bqo::structure
