#pragma once

#include <vector>

#include "charcycle/ideal.hpp"

namespace charcycle {

enum class PrimeFlag { Minimal, Embedded };

struct Component {
    Ideal prime;
    PrimeFlag flag = PrimeFlag::Minimal;
    int dim = 0;
};

using ComponentList = std::vector<Component>;

/// Inclusion-minimal primes over `ideal`, found by recursive splitting on
/// factorizable basis elements. `factor_hints` feeds extra trial divisors
/// (the pipeline passes the localizing polynomial's factors).
/// Unit ideal yields the empty list.
ComponentList minimal_primes(const Ideal& ideal,
                             const std::vector<Polynomial>& factor_hints = {});

/// Minimal primes plus detected embedded primes. Monomial ideals are handled
/// exactly via irreducible decomposition; otherwise embedded primes are
/// surfaced from top-part residuals.
ComponentList associated_primes(const Ideal& ideal,
                                const std::vector<Polynomial>& factor_hints = {});

/// Multiplicity of an embedded prime of the divisor of f on the conormal
/// over V(Y): reruns the divisor construction with Y cut down to the prime's
/// base projection and reads the multiplicity off the restricted divisor
/// (0 when the component dies there).
long refine_embedded(const Ideal& y_ideal, const Polynomial& f, const Ideal& p_embedded);

/// The conormal components of a conic divisor ideal in the doubled ring.
/// Characteristic varieties are unions of conormal varieties, so the minimal
/// primes are recovered by peeling: decompose the base projection, lift each
/// base component to its conormal, keep those containing the divisor, then
/// saturate them away to expose components over smaller bases.
/// Every returned prime has dim V(p) = base_count; a residual that admits no
/// conormal component aborts with an "unresolved component" diagnostic.
ComponentList conormal_components(const Ideal& divisor, const RingPtr& base_ring,
                                  const std::vector<Polynomial>& factor_hints = {});

} // namespace charcycle
