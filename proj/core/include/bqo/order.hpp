#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bqo/util.hpp"

namespace bqo::qo {

struct OrderSpec;
using SpecPtr = std::shared_ptr<const OrderSpec>;

/// A finitely presented (or bounded-enumerable) quasi order, given as an
/// expression tree over atoms and combinators.
///
/// Atoms: chain:k, antichain:k, omega (N with its usual order, enumerated
/// up to a bound), table@file (an explicit reflexive-transitive relation).
/// Combinators: A+B (disjoint sum with incomparable summands), A*B
/// (componentwise product), Pf(A) (finite subsets, domination order),
/// w2.(A) (triples <a,m,n> ordered lexicographically), 1+(A) (a new
/// bottom element below everything).
struct OrderSpec {
  enum class Kind { chain, antichain, omega, table, sum, product, pf, omega2, one_plus };

  Kind kind = Kind::chain;
  int size = 0;                              // chain/antichain/table
  std::vector<std::vector<bool>> rel;        // table only; rel[i][j] <=> i <= j
  SpecPtr left, right;                       // operands
  std::string table_ref;                     // table only; the `table@...` token

  bool is_atom() const {
    return kind == Kind::chain || kind == Kind::antichain || kind == Kind::omega ||
           kind == Kind::table;
  }
};

SpecPtr chain(int k);
SpecPtr antichain(int k);
SpecPtr omega();
/// Validates reflexivity and transitivity; throws ValidityError otherwise.
SpecPtr table(std::vector<std::vector<bool>> rel, std::string ref = "table@<inline>");
SpecPtr sum(SpecPtr a, SpecPtr b);
SpecPtr product(SpecPtr a, SpecPtr b);
SpecPtr pf(SpecPtr a);
SpecPtr omega2(SpecPtr a);
SpecPtr one_plus(SpecPtr a);

/// A tagged term whose shape mirrors the structure of its OrderSpec.
/// Sets (the Pf case) are kept sorted and duplicate-free, so equality is
/// structural and enumeration is deterministic.
struct Elem {
  enum class Kind { atom, tagged, pair, set, triple, bottom, lifted };

  Kind kind = Kind::atom;
  int a = 0;                // atom index | sum tag | triple m
  int b = 0;                // triple n
  std::vector<Elem> sub;    // operand terms

  static Elem atom(int index);
  static Elem in(int tag, Elem inner);              // sum injection <tag, inner>
  static Elem pair(Elem first, Elem second);        // product
  static Elem set(std::vector<Elem> members);       // Pf; sorts and dedups
  static Elem triple(Elem alpha, int m, int n);     // w2.
  static Elem bottom();                             // 1+ bottom
  static Elem lifted(Elem inner);                   // 1+ embedded element

  /// Total structural order: by kind, then ints, then children
  /// lexicographically. This is the canonical order used everywhere a
  /// deterministic "least" element is needed.
  int cmp(const Elem& other) const;

  bool operator==(const Elem& o) const { return cmp(o) == 0; }
  bool operator!=(const Elem& o) const { return cmp(o) != 0; }
  bool operator<(const Elem& o) const { return cmp(o) < 0; }
};

/// Throws ShapeError when `e` does not match the shape of `spec`.
void check_shape(const OrderSpec& spec, const Elem& e);
bool well_shaped(const OrderSpec& spec, const Elem& e);

/// Decides the combinator-defined order. Pure and total on well-shaped
/// elements; throws ShapeError on malformed input.
bool leq(const OrderSpec& spec, const Elem& x, const Elem& y);

bool equivalent(const OrderSpec& spec, const Elem& x, const Elem& y);
bool strictly_less(const OrderSpec& spec, const Elem& x, const Elem& y);

/// Every well-shaped element within the bound, each exactly once, in
/// ascending canonical (structural) order. The bound caps atom indices,
/// Pf-set sizes and the m/n components of w2. triples.
std::vector<Elem> enumerate(const OrderSpec& spec, int bound);

/// True when the order presented by `spec` has finitely many elements.
bool finite(const OrderSpec& spec);

/// All elements of a finite order, ascending. Throws ValidityError when
/// the order is not finite or has more than `limit` elements.
std::vector<Elem> enumerate_all(const OrderSpec& spec, std::size_t limit = 1u << 20);

/// The powerset witness: for a, b in Pf(Q) with a not below b, returns the
/// least x in a (canonical order) with x not below any y in b. Throws
/// ContractError when a <= b.
Elem witness_p(const OrderSpec& pf_spec, const Elem& a, const Elem& b);

// --- text grammar ---------------------------------------------------------
//
//   spec := prod ('+' prod)*          (left associative)
//   prod := atom ('*' atom)*
//   atom := 'chain:'INT | 'antichain:'INT | 'omega' | 'Pf(' spec ')'
//         | 'w2.(' spec ')' | '1+(' spec ')' | 'table@'PATH | '(' spec ')'
//
// Element grammar is directed by the spec: atom -> INT, sum -> '<'TAG','e'>',
// product -> '('e','e')', Pf -> '{'e,...'}', w2. -> '('e','INT','INT')',
// 1+ -> 'bot' | 'up('e')'.

using TableLoader = std::function<std::vector<std::vector<bool>>(const std::string& path)>;

SpecPtr parse_spec(std::string_view text);
SpecPtr parse_spec(std::string_view text, const TableLoader& loader);
std::string print_spec(const OrderSpec& spec);

Elem parse_elem(const OrderSpec& spec, std::string_view text);
std::string print_elem(const OrderSpec& spec, const Elem& e);

}  // namespace bqo::qo
