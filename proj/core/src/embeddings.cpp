#include "bqo/embeddings.hpp"

namespace bqo::embeddings {

using qo::Elem;

qo::SpecPtr seq_target(int alpha_size) {
  return qo::pf(qo::pf(qo::sum(qo::omega(), qo::chain(alpha_size))));
}

Elem embed_seq(int alpha_size, const notations::OmegaSeq& s) {
  notations::validate_seq(s, alpha_size);
  std::vector<Elem> image;
  for (std::size_t i = 0; i < s.size(); ++i)
    image.push_back(Elem::set({Elem::in(0, Elem::atom(static_cast<int>(i))),
                               Elem::in(1, Elem::atom(s[i]))}));
  return Elem::set(std::move(image));
}

qo::SpecPtr finq_target() { return qo::pf(qo::sum(qo::omega(), qo::omega())); }

Elem embed_finq(int n, int k) {
  if (k < 0 || k >= n) throw ValidityError("element index out of range");
  return Elem::set({Elem::in(0, Elem::atom(k)), Elem::in(1, Elem::atom(n - k))});
}

qo::SpecPtr product_target(int omega_size) {
  return qo::pf(qo::sum(qo::chain(omega_size), qo::chain(omega_size)));
}

Elem embed_product(int omega_size, int alpha, int beta) {
  if (alpha < 0 || alpha >= omega_size || beta < 0 || beta >= omega_size)
    throw ValidityError("pair component out of range");
  return Elem::set({Elem::in(0, Elem::atom(alpha)), Elem::in(1, Elem::atom(beta))});
}

qo::SpecPtr eps_label_spec(int omega_size) {
  return qo::sum(qo::omega2(qo::chain(omega_size)), qo::chain(1));
}

Elem eps_marker() { return Elem::in(1, Elem::atom(0)); }

Elem eps_triple(int alpha, int m, int n) {
  return Elem::in(0, Elem::triple(Elem::atom(alpha), m, n));
}

hset::HTerm embed_eps(int omega_size, const notations::EpsTerm& t) {
  notations::validate(t, omega_size);
  using hset::HTerm;
  if (t.is_eps)
    return HTerm::set({HTerm::ur(eps_triple(t.alpha, 0, 0)), HTerm::ur(eps_marker())});
  const int e = notations::eps_head(t);
  const int d = notations::exp_depth(t);
  std::vector<HTerm> members;
  members.push_back(HTerm::ur(eps_marker()));
  for (std::size_t i = 0; i < t.children.size(); ++i)
    members.push_back(HTerm::set({HTerm::ur(eps_triple(e, d, static_cast<int>(i))),
                                  embed_eps(omega_size, t.children[i])}));
  return HTerm::set(std::move(members));
}

}  // namespace bqo::embeddings
