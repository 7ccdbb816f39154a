#pragma once

#include "bqo/hset.hpp"
#include "bqo/notations.hpp"
#include "bqo/order.hpp"

namespace bqo::embeddings {

/// Target Pf(Pf(omega + chain:alpha)) of the sequence embedding.
qo::SpecPtr seq_target(int alpha_size);

/// Maps <a_0,...,a_{n-1}> to {{<0,i>,<1,a_i>} : i < n}; order reflecting
/// into the iterated powerset.
qo::Elem embed_seq(int alpha_size, const notations::OmegaSeq& s);

/// Target Pf(omega + omega) of the finite-order embedding.
qo::SpecPtr finq_target();

/// Maps the k-th element of an n-element order to {<0,k>,<1,n-k>}; images
/// of distinct elements are pairwise incomparable.
qo::Elem embed_finq(int n, int k);

/// Target Pf(chain:omega + chain:omega) of the product embedding.
qo::SpecPtr product_target(int omega_size);

/// Maps <alpha,beta> to {<0,alpha>,<1,beta>}; order reflecting from the
/// componentwise product.
qo::Elem embed_product(int omega_size, int alpha, int beta);

/// Label order (w2.(chain:omega)) + 1 of the epsilon-term embedding; the
/// second summand holds the single marker element.
qo::SpecPtr eps_label_spec(int omega_size);

/// The marker element <1,0> and the triple urelement <0,(a,m,n)>.
qo::Elem eps_marker();
qo::Elem eps_triple(int alpha, int m, int n);

/// The order reflecting map from epsilon terms into hereditarily finite
/// sets: eps(a) |-> {triple(a,0,0), marker}; a sequence <t_0,...,t_{n-1}>
/// maps to {marker} + {{triple(e(t),d(t),i), image(t_i)} : i < n}.
hset::HTerm embed_eps(int omega_size, const notations::EpsTerm& t);

}  // namespace bqo::embeddings
