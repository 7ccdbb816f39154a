#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bqo/util.hpp"

namespace bqo::notations {

// --- omega^alpha: non-increasing sequences over a finite chain -------------

using OmegaSeq = std::vector<int>;

/// Throws ValidityError unless the entries are in [0, alpha_size) and
/// non-increasing.
void validate_seq(const OmegaSeq& s, int alpha_size);

/// The linear order on omega^alpha (non-strict): either s is a prefix of t,
/// or the first difference decides.
bool seq_leq(const OmegaSeq& s, const OmegaSeq& t);

/// All non-increasing sequences over [0, alpha_size) of length <= max_len,
/// ascending in the canonical (lexicographic) order.
std::vector<OmegaSeq> enumerate_seqs(int alpha_size, int max_len);

OmegaSeq parse_seq(std::string_view text, int alpha_size);  // `[2,1,0]`, `[]`
std::string print_seq(const OmegaSeq& s);

// --- epsilon_Omega: terms below the Omega-indexed epsilon numbers ----------

/// Either an atom eps(alpha) or a sequence of previously built terms.
/// Formation (checked by `validate`): a sequence of length 1 must not wrap
/// an eps-atom, and a sequence of any other length must be non-increasing
/// under the term order.
struct EpsTerm {
  bool is_eps = false;
  int alpha = 0;                  // eps only
  std::vector<EpsTerm> children;  // sequence only

  static EpsTerm eps(int alpha);
  static EpsTerm seq(std::vector<EpsTerm> children);

  int cmp(const EpsTerm& o) const;  // structural, for canonical containers
  bool operator==(const EpsTerm& o) const { return cmp(o) == 0; }
  bool operator!=(const EpsTerm& o) const { return cmp(o) != 0; }
  bool operator<(const EpsTerm& o) const { return cmp(o) < 0; }
};

/// The strict order on valid terms, decided by simultaneous recursion:
///   (i')   eps(a) < eps(b)            iff a < b
///   (ii')  eps(a) < <t0,...,t_{n-1}>  iff n > 0 and eps(a) <= t0
///   (iii') <s0,...> < eps(b)          iff the sequence is empty or s0 < eps(b)
///   (iv')  sequences compare by strict prefix or first difference
bool less(const EpsTerm& s, const EpsTerm& t);
bool leq(const EpsTerm& s, const EpsTerm& t);  // less or structurally equal

bool valid(const EpsTerm& t, int omega_size);
void validate(const EpsTerm& t, int omega_size);  // throws ValidityError

/// lh(eps) = 0, lh(<t0,...,t_{n-1}>) = 1 + sum of child lengths.
int lh(const EpsTerm& t);

/// Node count: 1 for an atom, 1 + children for a sequence. Unlike lh this
/// is finite-to-one, so it is the measure used for enumeration.
int node_count(const EpsTerm& t);

/// Index of the leading eps-atom: e(eps a) = a, e(<>) = 0 (Omega must have
/// a least element), e(<t0,...>) = e(t0).
int eps_head(const EpsTerm& t);

/// Number of exponentials applied to the leading atom: d(eps) = d(<>) = 0,
/// d(<t0,...>) = d(t0) + 1.
int exp_depth(const EpsTerm& t);

/// All valid terms over Omega = chain(omega_size) with node_count <= bound,
/// each exactly once, ascending in the term order.
std::vector<EpsTerm> enumerate_eps(int omega_size, int size_bound);

// Grammar: `eps<i>`, `(t1 t2 ... tn)`, `()`.
EpsTerm parse_eps(std::string_view text, int omega_size);  // validates
std::string print_eps(const EpsTerm& t);

}  // namespace bqo::notations
