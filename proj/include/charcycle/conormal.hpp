#pragma once

#include <vector>

#include "charcycle/ideal.hpp"

namespace charcycle {

/// Raised when the localizing polynomial vanishes identically on the base
/// variety: the component dies under localization.
struct ComponentDiesError : Error {
    using Error::Error;
};

/// Input to the relative-conormal construction: generators of the base
/// variety Y = V(I) in the base ring, and the localizing polynomial f.
struct ConormalInput {
    Ideal base_ideal;
    Polynomial f;

    ConormalInput(Ideal base, Polynomial poly);
};

/// The ideal C cutting out the divisor of f inside the relative conormal,
/// in the doubled ring, together with its provenance.
struct DivisorIdeal {
    Ideal ideal;
    Ideal base;
    Polynomial f;
};

/// Doubled ring R[x, dx] for a base ring (memoized per base ring content).
RingPtr doubled_ring(const RingPtr& base);

/// Defining ideal of { x in Y : grad f(x) = 0 } union Sing(Y), in the base
/// ring.
Ideal bad_locus_ideal(const Ideal& base_ideal, const Polynomial& f);

/// J_sat with sqrt(J_sat) = I(T*_{f|Y}), in the doubled ring.
Ideal relative_conormal_ideal(const ConormalInput& input);

/// C = J_sat + (f) + J_f, in the doubled ring.
DivisorIdeal divisor_ideal(const ConormalInput& input);

/// Conormal variety T*_Y X of Y = V(I) itself (no localizing polynomial),
/// in the doubled ring.
Ideal conormal_variety_ideal(const Ideal& base_ideal);

/// c x c minors of the Jacobian of the generators, c = codim V(I).
std::vector<Polynomial> jacobian_minors(const Ideal& base_ideal);

} // namespace charcycle
