#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "bqo/barrier.hpp"
#include "bqo/hset.hpp"
#include "bqo/notations.hpp"
#include "bqo/order.hpp"
#include "bqo/tc.hpp"
#include "bqo/trees.hpp"

namespace bqo::structure {

/// A named comparison structure: a plain order expression, or one of the
/// built structures over a parameter (the chain size `omega` for tc/eps/
/// wseq, the label order for hterm/tree).
///
///   text forms:  "<order expression>"
///                "tc@<k>"      "eps@<k>"      "wseq@<k>"
///                "hterm@<order>"  "tree-s@<order>"  "tree-w@<order>"
struct Structure {
  enum class Kind { order, tc, hterm, tree_strong, tree_weak, eps, wseq };

  Kind kind = Kind::order;
  qo::SpecPtr spec;  // order / hterm / tree-*
  int omega = 0;     // tc / eps / wseq

  static Structure order(qo::SpecPtr s);
  static Structure tc(int omega);
  static Structure hterm(qo::SpecPtr labels);
  static Structure tree_strong(qo::SpecPtr labels);
  static Structure tree_weak(qo::SpecPtr labels);
  static Structure eps(int omega);
  static Structure wseq(int omega);

  static Structure parse(std::string_view text);
  std::string to_string() const;
};

using Value = std::variant<qo::Elem, tc::TCElem, hset::HTerm, trees::QTree,
                           notations::EpsTerm, notations::OmegaSeq>;

Value parse_value(const Structure& s, std::string_view text);
std::string print_value(const Structure& s, const Value& v);

/// The order of the structure; for eps this is the reflexive closure of
/// the strict term order.
bool leq(const Structure& s, const Value& x, const Value& y);

enum class Verdict { LE, GE, EQUIV, INCOMPARABLE };
const char* verdict_name(Verdict v);

/// Evaluates both directions.
Verdict compare(const Structure& s, const Value& x, const Value& y);

}  // namespace bqo::structure
