#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bqo/util.hpp"

namespace bqo::tc {

/// An element of the named transitive closure of two incomparable copies
/// of a finite chain Omega: one of three urelements 0/1/2, or an ordinal
/// marked as belonging to the first or second copy.
struct TCElem {
  enum class Kind { ur, copy1, copy2 };
  Kind kind = Kind::ur;
  int value = 0;  // urelement index (0..2) or the ordinal

  static TCElem ur(int i);
  static TCElem c1(int alpha);
  static TCElem c2(int alpha);

  bool is_urelement() const { return kind == Kind::ur; }

  int cmp(const TCElem& o) const {
    if (kind != o.kind) return kind < o.kind ? -1 : 1;
    if (value != o.value) return value < o.value ? -1 : 1;
    return 0;
  }
  bool operator==(const TCElem& o) const { return cmp(o) == 0; }
  bool operator!=(const TCElem& o) const { return cmp(o) != 0; }
  bool operator<(const TCElem& o) const { return cmp(o) < 0; }
};

/// The partial order whose only strict inequalities are 0,1 < c1(a);
/// 1,2 < c2(a); c1(a) < c1(b) and c2(a) < c2(b) for a < b.
bool leq(const TCElem& x, const TCElem& y);

/// The membership-name map E: E(i) = {i}; E(c1(a)) = {0,1} + {c1(g) : g<a};
/// E(c2(a)) = {1,2} + {c2(g) : g<a}.
std::vector<TCElem> members(const TCElem& a);

/// The witness map: whenever a !<= b, chi(a,b) lies in E(a) and is not
/// below any element of E(b). Total; returns a itself when a <= b.
TCElem chi(const TCElem& a, const TCElem& b);

/// Rank into 1+Omega: nullopt (bottom) on urelements, the ordinal on marked
/// copies. Members of E(a) rank strictly below a when a is not an urelement.
std::optional<int> rank(const TCElem& a);

/// bottom < alpha < beta for alpha < beta.
bool rank_leq(const std::optional<int>& x, const std::optional<int>& y);

/// All elements with ordinal part < omega, ascending.
std::vector<TCElem> enumerate(int omega);

// Grammar: `u0`|`u1`|`u2`, `a:<i>` (first copy), `b:<i>` (second copy).
TCElem parse(std::string_view text);
std::string print(const TCElem& e);

}  // namespace bqo::tc
